#include "nabc/action.hpp"

#include <algorithm>

#include "nabc/automorphism.hpp"

namespace nabc {

GAction::GAction(FiniteGroup actor, FiniteGroup space, std::vector<ImageArray> theta)
    : actor_(std::move(actor)), space_(std::move(space)) {
  if (static_cast<int>(theta.size()) != actor_.order())
    throw InvalidInput("action needs one automorphism per actor element");
  theta_.reserve(static_cast<std::size_t>(actor_.order()) * space_.order());
  for (const auto& t : theta) {
    if (static_cast<int>(t.size()) != space_.order()) throw InvalidInput("automorphism has wrong length");
    theta_.insert(theta_.end(), t.begin(), t.end());
  }
  validate();
}

GAction::GAction(FiniteGroup actor, FiniteGroup space, std::vector<Elem> flat, bool check)
    : actor_(std::move(actor)), space_(std::move(space)), theta_(std::move(flat)) {
  if (check) validate();
}

void GAction::validate() const {
  const int n = space_.order();
  for (Elem g = 0; g < actor_.order(); ++g) {
    const std::span<const Elem> img(theta_.data() + static_cast<std::size_t>(g) * n, n);
    if (!is_bijection(img, n)) throw InvalidInput("action image is not a bijection");
    if (!is_homomorphism(space_, space_, img)) throw InvalidInput("action image is not an automorphism");
  }
  for (Elem x = 0; x < n; ++x)
    if (apply(0, x) != x) throw InvalidInput("identity does not act trivially");
  for (Elem g = 0; g < actor_.order(); ++g)
    for (Elem h = 0; h < actor_.order(); ++h) {
      const Elem gh = actor_.mul(g, h);
      for (Elem x = 0; x < n; ++x)
        if (apply(gh, x) != apply(g, apply(h, x)))
          throw InvalidInput("theta(gh) != theta(g) o theta(h)");
    }
}

GAction GAction::from_generators(FiniteGroup actor, FiniteGroup space, const std::vector<Elem>& gens,
                                 const std::vector<ImageArray>& images) {
  if (gens.size() != images.size()) throw InvalidInput("one automorphism per generator required");
  for (const auto& img : images)
    if (static_cast<int>(img.size()) != space.order()) throw InvalidInput("automorphism has wrong length");
  for (Elem g : gens)
    if (g < 0 || g >= actor.order()) throw InvalidInput("generator out of range");
  const CayleyTree tree = cayley_tree(actor, gens);
  if (static_cast<int>(tree.order.size()) != actor.order())
    throw InvalidInput("listed generators do not generate the actor");
  std::vector<ImageArray> theta(actor.order());
  theta[0] = identity_map(space.order());
  for (std::size_t i = 1; i < tree.order.size(); ++i) {
    const Elem e = tree.order[i];
    theta[e] = compose(theta[tree.parent[e]], images[tree.via[e]]);
  }
  return GAction(std::move(actor), std::move(space), std::move(theta));
}

GAction GAction::from_flat_trusted(FiniteGroup actor, FiniteGroup space, std::vector<Elem> flat) {
  if (flat.size() != static_cast<std::size_t>(actor.order()) * space.order())
    throw InvalidInput("action table has wrong size");
  return GAction(std::move(actor), std::move(space), std::move(flat), false);
}

GAction GAction::trivial(FiniteGroup actor, FiniteGroup space) {
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(actor.order()) * space.order());
  for (Elem g = 0; g < actor.order(); ++g)
    for (Elem x = 0; x < space.order(); ++x) flat.push_back(x);
  return GAction(std::move(actor), std::move(space), std::move(flat), false);
}

ImageArray GAction::automorphism(Elem g) const {
  const auto begin = theta_.begin() + static_cast<std::ptrdiff_t>(g) * space_.order();
  return ImageArray(begin, begin + space_.order());
}

bool GAction::is_trivial() const {
  for (Elem g = 0; g < actor_.order(); ++g)
    for (Elem x = 0; x < space_.order(); ++x)
      if (apply(g, x) != x) return false;
  return true;
}

GAction GAction::restrict_to(const Subgroup& h) const {
  if (!h.ambient().same_table(actor_)) throw InvalidInput("restriction to a subgroup of a different group");
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(h.order()) * space_.order());
  for (Elem local = 0; local < h.order(); ++local) {
    const Elem g = h.to_ambient(local);
    for (Elem x = 0; x < space_.order(); ++x) flat.push_back(apply(g, x));
  }
  return GAction(h.group(), space_, std::move(flat), false);
}

std::vector<GAction> all_actions(const FiniteGroup& actor, const FiniteGroup& space) {
  const OuterGroup aut = automorphism_group(space);
  std::vector<GAction> out;
  for (const auto& hom : homomorphisms(actor, aut.aut_group)) {
    std::vector<ImageArray> theta;
    theta.reserve(hom.size());
    for (Elem a : hom) theta.push_back(aut.automorphisms[a]);
    out.emplace_back(actor, space, std::move(theta));
  }
  return out;
}

// ---------------------------------------------------------------- RightGSet

RightGSet::RightGSet(FiniteGroup group, std::vector<std::vector<int>> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != group_.order()) throw InvalidInput("G-set needs one permutation per element");
  degree_ = images_.empty() ? 0 : static_cast<int>(images_[0].size());
  for (const auto& p : images_) {
    if (static_cast<int>(p.size()) != degree_) throw InvalidInput("G-set permutations differ in degree");
    if (!is_bijection(p, degree_)) throw InvalidInput("G-set image is not a permutation");
  }
  for (int a = 0; a < degree_; ++a)
    if (images_[0][a] != a) throw InvalidInput("identity does not fix every point");
  for (Elem g = 0; g < group_.order(); ++g)
    for (Elem h = 0; h < group_.order(); ++h)
      for (int a = 0; a < degree_; ++a)
        if (images_[group_.mul(g, h)][a] != images_[h][images_[g][a]])
          throw InvalidInput("not a right action: a.(gh) != (a.g).h");
}

RightGSet RightGSet::cosets(const Subgroup& h) {
  const FiniteGroup& g = h.ambient();
  std::vector<std::vector<int>> images(g.order(), std::vector<int>(h.index()));
  for (Elem s = 0; s < g.order(); ++s)
    for (int c = 0; c < h.index(); ++c) images[s][c] = h.coset_index(g.mul(h.coset_reps()[c], s));
  return RightGSet(g, std::move(images));
}

RightGSet RightGSet::regular(const FiniteGroup& g) {
  std::vector<std::vector<int>> images(g.order(), std::vector<int>(g.order()));
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem a = 0; a < g.order(); ++a) images[s][a] = g.mul(a, s);
  return RightGSet(g, std::move(images));
}

// ---------------------------------------------------------------- TupleGroup

TupleGroup::TupleGroup(FiniteGroup base, int arity, int max_order) : base_(std::move(base)), arity_(arity) {
  long total = 1;
  stride_.resize(arity_);
  for (int i = 0; i < arity_; ++i) {
    stride_[i] = total;
    total *= base_.order();
    if (total > max_order)
      throw BoundExceeded("tuple group of order " + std::to_string(base_.order()) + "^" + std::to_string(arity_) +
                          " exceeds bound " + std::to_string(max_order));
  }
  const int n = base_.order();
  const int k = arity_;
  group_ = FiniteGroup::from_product(static_cast<int>(total), [&](Elem a, Elem b) {
    Elem r = 0;
    long s = 1;
    for (int i = 0; i < k; ++i) {
      r += static_cast<Elem>(s * base_.mul(a % n, b % n));
      a /= n;
      b /= n;
      s *= n;
    }
    return r;
  });
}

Elem TupleGroup::coordinate(Elem t, int i) const { return static_cast<Elem>((t / stride_[i]) % base_.order()); }

std::vector<Elem> TupleGroup::coordinates(Elem t) const {
  std::vector<Elem> c(arity_);
  for (int i = 0; i < arity_; ++i) {
    c[i] = t % base_.order();
    t /= base_.order();
  }
  return c;
}

Elem TupleGroup::from_coordinates(const std::vector<Elem>& c) const {
  long r = 0;
  for (int i = 0; i < arity_; ++i) r += stride_[i] * c[i];
  return static_cast<Elem>(r);
}

Elem TupleGroup::embed(int i, Elem n) const { return static_cast<Elem>(stride_[i] * n); }

// ---------------------------------------------------------------- induction

Elem InducedGGroup::evaluate(Elem t, Elem g) const {
  return base.apply(subgroup.to_local(subgroup.gamma(g)), tuples.coordinate(t, subgroup.coset_index(g)));
}

InducedGGroup induce_g_group(const Subgroup& h, const GAction& base, int max_tuple_order) {
  if (!base.actor().same_table(h.group()))
    throw InvalidInput("base action must be an action of the subgroup as an abstract group");
  const FiniteGroup& g = h.ambient();
  TupleGroup tuples(base.space(), h.index(), max_tuple_order);
  const int k = h.index();
  const int nt = tuples.group().order();
  const auto& reps = h.coset_reps();
  std::vector<Elem> flat(static_cast<std::size_t>(g.order()) * nt);
  std::vector<Elem> src_coset(k), twist(k);
  std::vector<Elem> coords(k), out(k);
  for (Elem s = 0; s < g.order(); ++s) {
    for (int i = 0; i < k; ++i) {
      const Elem ys = g.mul(reps[i], s);
      src_coset[i] = h.coset_index(ys);
      twist[i] = h.to_local(h.gamma(ys));
    }
    for (Elem t = 0; t < nt; ++t) {
      coords = tuples.coordinates(t);
      for (int i = 0; i < k; ++i) out[i] = base.apply(twist[i], coords[src_coset[i]]);
      flat[static_cast<std::size_t>(s) * nt + t] = tuples.from_coordinates(out);
    }
  }
  // the action axioms follow from the uniqueness of the coset factorization
  GAction action = GAction::from_flat_trusted(g, tuples.group(), std::move(flat));
  return InducedGGroup{base, h, std::move(tuples), std::move(action)};
}

// ---------------------------------------------------------------- products

SemidirectProduct semidirect_product(const GAction& action, int max_order) {
  const FiniteGroup& n = action.space();
  const FiniteGroup& g = action.actor();
  const long order = static_cast<long>(n.order()) * g.order();
  if (order > max_order)
    throw BoundExceeded("semidirect product of order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(max_order));
  const int nn = n.order();
  FiniteGroup total = FiniteGroup::from_product(static_cast<int>(order), [&](Elem a, Elem b) {
    const Elem n1 = a % nn, g1 = a / nn, n2 = b % nn, g2 = b / nn;
    return n.mul(n1, action.apply(g1, n2)) + nn * g.mul(g1, g2);
  });
  ImageArray inj(nn), proj(order);
  for (Elem x = 0; x < nn; ++x) inj[x] = x;
  for (Elem e = 0; e < order; ++e) proj[e] = e / nn;
  return SemidirectProduct{action, total, GroupMap{n, total, inj, MapKind::kHomomorphism},
                           GroupMap{total, g, proj, MapKind::kHomomorphism}};
}

SemidirectProduct wreath_product(const FiniteGroup& n, const RightGSet& a, int max_order) {
  const FiniteGroup& g = a.group();
  TupleGroup tuples(n, a.degree(), max_order);
  const int nt = tuples.group().order();
  if (static_cast<long>(nt) * g.order() > max_order)
    throw BoundExceeded("wreath product exceeds order bound " + std::to_string(max_order));
  std::vector<Elem> flat(static_cast<std::size_t>(g.order()) * nt);
  std::vector<Elem> out(a.degree());
  for (Elem s = 0; s < g.order(); ++s)
    for (Elem t = 0; t < nt; ++t) {
      const auto c = tuples.coordinates(t);
      for (int p = 0; p < a.degree(); ++p) out[p] = c[a.point(p, s)];
      flat[static_cast<std::size_t>(s) * nt + t] = tuples.from_coordinates(out);
    }
  return semidirect_product(GAction::from_flat_trusted(g, tuples.group(), std::move(flat)), max_order);
}

TwistedWreath twisted_wreath(const Subgroup& h, const GAction& base, int max_order) {
  InducedGGroup ind = induce_g_group(h, base, max_order);
  SemidirectProduct prod = semidirect_product(ind.action, max_order);
  return TwistedWreath{std::move(ind), std::move(prod)};
}

}  // namespace nabc
