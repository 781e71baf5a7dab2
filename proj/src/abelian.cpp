#include "nabc/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace nabc {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> prime_factors(long n) {
  std::vector<int> ps;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

// exponent of p in n, n a power of p
int log_p(long n, int p) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

std::vector<Elem> cyclic_span(const FiniteGroup& g, Elem x) {
  std::vector<Elem> out{0};
  for (Elem y = x; y != 0; y = g.mul(y, x)) out.push_back(y);
  return out;
}

// Backtracking for a basis of the abelian p-group with members `p_elems`:
// repeatedly adjoin an element whose cyclic span meets the current subgroup
// trivially, largest order first.
bool extend_basis(const FiniteGroup& g, const std::vector<Elem>& p_elems, std::vector<char>& in_s, int s_size,
                  std::vector<Elem>& basis) {
  if (s_size == static_cast<int>(p_elems.size())) return true;
  std::vector<Elem> cands;
  for (Elem x : p_elems) {
    if (in_s[x]) continue;
    bool meets = false;
    for (Elem y : cyclic_span(g, x))
      if (y != 0 && in_s[y]) {
        meets = true;
        break;
      }
    if (!meets) cands.push_back(x);
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  for (Elem x : cands) {
    std::vector<char> next = in_s;
    std::vector<Elem> members;
    for (Elem s = 0; s < g.order(); ++s)
      if (in_s[s]) members.push_back(s);
    for (Elem y : cyclic_span(g, x))
      for (Elem s : members) next[g.mul(s, y)] = 1;
    basis.push_back(x);
    if (extend_basis(g, p_elems, next, s_size * g.element_order(x), basis)) {
      in_s = std::move(next);
      return true;
    }
    basis.pop_back();
  }
  return false;
}

std::int64_t mod(std::int64_t x, std::int64_t q) {
  x %= q;
  return x < 0 ? x + q : x;
}

std::int64_t unit_inverse(std::int64_t u, std::int64_t q) {
  std::int64_t a = u, b = q, x0 = 1, x1 = 0;
  while (b != 0) {
    const std::int64_t t = a / b;
    std::tie(a, b) = std::make_pair(b, a - t * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
  }
  if (a != 1) throw InternalError("pivot is not a unit times a prime power");
  return mod(x0, q);
}

// Nonidentity tuples of length n over G, g_i in 1..N-1, g_1 most significant.
struct TupleSpace {
  int group_order;
  int n;
  long count;
  long index(const Elem* g) const {
    long r = 0;
    for (int i = 0; i < n; ++i) r = r * (group_order - 1) + (g[i] - 1);
    return r;
  }
  void decode(long idx, Elem* g) const {
    for (int i = n - 1; i >= 0; --i) {
      g[i] = static_cast<Elem>(idx % (group_order - 1)) + 1;
      idx /= (group_order - 1);
    }
  }
};

TupleSpace tuple_space(int group_order, int n) {
  return TupleSpace{group_order, n, ipow(group_order - 1, n)};
}

}  // namespace

long CyclicFactor::order() const { return ipow(prime, exponent); }

// ---------------------------------------------------------------- decomposition

AbelianDecomposition::AbelianDecomposition(FiniteGroup z) : group_(std::move(z)) {
  if (!group_.is_abelian()) throw InvalidInput("module group is not abelian");
  for (int p : prime_factors(group_.order())) {
    std::vector<Elem> p_elems;
    for (Elem x = 0; x < group_.order(); ++x) {
      int o = group_.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) p_elems.push_back(x);
    }
    std::vector<char> in_s(group_.order(), 0);
    in_s[0] = 1;
    std::vector<Elem> basis;
    if (!extend_basis(group_, p_elems, in_s, 1, basis)) throw InternalError("no basis for abelian p-group");
    for (Elem b : basis) factors_.push_back({p, log_p(group_.element_order(b), p), b});
  }
  const int r = static_cast<int>(factors_.size());
  stride_.resize(r);
  long total = 1;
  for (int i = 0; i < r; ++i) {
    stride_[i] = total;
    total *= factors_[i].order();
  }
  if (total != group_.order()) throw InternalError("abelian decomposition has the wrong order");
  coords_.assign(group_.order(), {});
  from_index_.assign(group_.order(), -1);
  std::vector<int> c(r, 0);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    Elem e = 0;
    for (int i = 0; i < r; ++i) {
      c[i] = static_cast<int>(rest % factors_[i].order());
      rest /= factors_[i].order();
      e = group_.mul(e, group_.pow(factors_[i].generator, c[i]));
    }
    if (!coords_[e].empty()) throw InternalError("abelian decomposition is not direct");
    coords_[e] = c;
    from_index_[idx] = e;
  }
}

Elem AbelianDecomposition::element(const std::vector<long>& coords) const {
  long idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx += stride_[i] * mod(coords[i], factors_[i].order());
  return from_index_[idx];
}

// ---------------------------------------------------------------- cochains

long cochain_index(int group_order, std::initializer_list<Elem> args) {
  long r = 0;
  for (Elem g : args) r = r * group_order + g;
  return r;
}

Cochain coboundary(const GAction& module, const Cochain& f, int n) {
  const FiniteGroup& g = module.actor();
  const FiniteGroup& z = module.space();
  const int ng = g.order();
  if (static_cast<long>(f.size()) != ipow(ng, n)) throw InvalidInput("cochain has the wrong size");
  const long out_size = ipow(ng, n + 1);
  Cochain out(out_size);
  std::vector<Elem> a(n + 1), merged(n);
  for (long idx = 0; idx < out_size; ++idx) {
    long rest = idx;
    for (int i = n; i >= 0; --i) {
      a[i] = static_cast<Elem>(rest % ng);
      rest /= ng;
    }
    auto at = [&](const std::vector<Elem>& args, int from, int len) {
      long r = 0;
      for (int i = 0; i < len; ++i) r = r * ng + args[from + i];
      return f[r];
    };
    Elem v = module.apply(a[0], at(a, 1, n));
    for (int i = 1; i <= n; ++i) {
      for (int j = 0, w = 0; j <= n; ++j) {
        if (j == i) continue;
        merged[w++] = (j == i - 1) ? g.mul(a[i - 1], a[i]) : a[j];
      }
      const Elem term = at(merged, 0, n);
      v = z.mul(v, (i % 2 == 0) ? term : z.inv(term));
    }
    const Elem last = at(a, 0, n);
    v = z.mul(v, ((n + 1) % 2 == 0) ? last : z.inv(last));
    out[idx] = v;
  }
  return out;
}

// ---------------------------------------------------------------- Smith form

ChainRingSmith chain_ring_smith(int p, int k, int rows, int cols, std::vector<std::int64_t> a, bool track_v,
                                bool track_u, std::vector<std::int64_t> rhs, int extra) {
  ChainRingSmith s;
  s.p = p;
  s.k = k;
  s.q = ipow(p, k);
  s.rows = rows;
  s.cols = cols;
  s.extra = extra;
  const std::int64_t q = s.q;
  const int width = cols + extra;
  std::vector<std::int32_t> m(static_cast<std::size_t>(rows) * width);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(i) * width + j] = static_cast<std::int32_t>(mod(a[static_cast<std::size_t>(i) * cols + j], q));
    for (int j = 0; j < extra; ++j)
      m[static_cast<std::size_t>(i) * width + cols + j] = static_cast<std::int32_t>(mod(rhs[static_cast<std::size_t>(i) * extra + j], q));
  }
  a.clear();
  a.shrink_to_fit();
  auto at = [&](int i, int j) -> std::int32_t& { return m[static_cast<std::size_t>(i) * width + j]; };
  auto identity = [](int n) {
    std::vector<std::int64_t> id(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i) * n + i] = 1;
    return id;
  };
  if (track_v) {
    s.v = identity(cols);
    s.v_inv = identity(cols);
  }
  if (track_u) {
    s.u = identity(rows);
    s.u_inv = identity(rows);
  }
  std::vector<std::int64_t> ppow(k + 1);
  for (int e = 0; e <= k; ++e) ppow[e] = ipow(p, e);
  auto val = [&](std::int64_t x) {
    if (x == 0) return k;
    int e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    return e;
  };

  const int diag = std::min(rows, cols);
  int t = 0;
  for (; t < diag; ++t) {
    int best = k, bi = -1, bj = -1;
    for (int i = t; i < rows && best > 0; ++i)
      for (int j = t; j < cols; ++j) {
        const std::int32_t x = at(i, j);
        if (x == 0) continue;
        const int e = val(x);
        if (e < best) {
          best = e;
          bi = i;
          bj = j;
          if (e == 0) break;
        }
      }
    if (bi < 0) break;
    if (bi != t) {
      for (int j = 0; j < width; ++j) std::swap(at(t, j), at(bi, j));
      if (track_u) {
        for (int j = 0; j < rows; ++j) std::swap(s.u[static_cast<std::size_t>(t) * rows + j], s.u[static_cast<std::size_t>(bi) * rows + j]);
        for (int i = 0; i < rows; ++i) std::swap(s.u_inv[static_cast<std::size_t>(i) * rows + t], s.u_inv[static_cast<std::size_t>(i) * rows + bi]);
      }
    }
    if (bj != t) {
      for (int i = 0; i < rows; ++i) std::swap(at(i, t), at(i, bj));
      if (track_v) {
        for (int i = 0; i < cols; ++i) std::swap(s.v[static_cast<std::size_t>(i) * cols + t], s.v[static_cast<std::size_t>(i) * cols + bj]);
        for (int j = 0; j < cols; ++j) std::swap(s.v_inv[static_cast<std::size_t>(t) * cols + j], s.v_inv[static_cast<std::size_t>(bj) * cols + j]);
      }
    }
    // make the pivot exactly p^best by scaling column t with a unit
    const std::int64_t pivot = at(t, t);
    const std::int64_t unit = pivot / ppow[best];
    const std::int64_t unit_inv = unit_inverse(unit % q, q);
    if (unit != 1) {
      for (int i = 0; i < rows; ++i)
        if (at(i, t) != 0) at(i, t) = static_cast<std::int32_t>(mod(at(i, t) * unit_inv, q));
      if (track_v) {
        for (int i = 0; i < cols; ++i) {
          auto& x = s.v[static_cast<std::size_t>(i) * cols + t];
          x = mod(x * unit_inv, q);
        }
        for (int j = 0; j < cols; ++j) {
          auto& x = s.v_inv[static_cast<std::size_t>(t) * cols + j];
          x = mod(x * unit, q);
        }
      }
    }
    // clear column t below the pivot
    for (int i = t + 1; i < rows; ++i) {
      const std::int64_t x = at(i, t);
      if (x == 0) continue;
      const std::int64_t f = x / ppow[best];
      for (int j = t; j < width; ++j) {
        const std::int64_t y = at(t, j);
        if (y != 0) at(i, j) = static_cast<std::int32_t>(mod(at(i, j) - f * y, q));
      }
      if (track_u) {
        for (int j = 0; j < rows; ++j) {
          auto& y = s.u[static_cast<std::size_t>(i) * rows + j];
          y = mod(y - f * s.u[static_cast<std::size_t>(t) * rows + j], q);
        }
        for (int r = 0; r < rows; ++r) {
          auto& y = s.u_inv[static_cast<std::size_t>(r) * rows + t];
          y = mod(y + f * s.u_inv[static_cast<std::size_t>(r) * rows + i], q);
        }
      }
    }
    // clear row t right of the pivot; column t is now zero off the pivot
    for (int j = t + 1; j < cols; ++j) {
      const std::int64_t x = at(t, j);
      if (x == 0) continue;
      const std::int64_t g = x / ppow[best];
      at(t, j) = 0;
      if (track_v) {
        for (int i = 0; i < cols; ++i) {
          auto& y = s.v[static_cast<std::size_t>(i) * cols + j];
          y = mod(y - g * s.v[static_cast<std::size_t>(i) * cols + t], q);
        }
        for (int c = 0; c < cols; ++c) {
          auto& y = s.v_inv[static_cast<std::size_t>(t) * cols + c];
          y = mod(y + g * s.v_inv[static_cast<std::size_t>(j) * cols + c], q);
        }
      }
    }
    s.valuation.push_back(best);
  }
  s.rank = t;
  s.valuation.resize(diag, k);
  if (extra > 0) {
    s.protected_cols.resize(static_cast<std::size_t>(rows) * extra);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < extra; ++j) s.protected_cols[static_cast<std::size_t>(i) * extra + j] = at(i, cols + j);
  }
  return s;
}

// ---------------------------------------------------------------- H^n

struct AbelianCohomology::PrimePart {
  int p = 2, k = 1;
  std::int64_t q = 2;
  std::vector<int> factor_ids;  // into the decomposition
  std::vector<int> kf;          // exponent per local factor
  int r = 0;
  int a = 0;                    // cochain coordinates
  std::vector<int> kernel_val;  // v_j for the kernel summands j in J
  std::vector<std::int64_t> v_inv_rows;  // |J| x a
  std::vector<std::int64_t> kappa;       // |J| x a, kernel generators
  int nj = 0;
  std::vector<std::int64_t> u2, u2_inv;  // nj x nj
  std::vector<int> s;                    // exponent of each class coordinate row
  std::vector<int> class_rows;
};

AbelianCohomology::~AbelianCohomology() = default;
AbelianCohomology::AbelianCohomology(const AbelianCohomology&) = default;
AbelianCohomology& AbelianCohomology::operator=(const AbelianCohomology&) = default;

namespace {

// Integer matrix of the differential C^n -> C^{n+1} restricted to the p-primary
// coordinates, rows (tuple, factor) and columns (tuple, factor).
std::vector<std::int64_t> differential_matrix(const GAction& module, const AbelianDecomposition& dec,
                                              const std::vector<int>& factor_ids, int n, long& rows_out,
                                              long& cols_out) {
  const FiniteGroup& g = module.actor();
  const int ng = g.order();
  const int r = static_cast<int>(factor_ids.size());
  const TupleSpace src = tuple_space(ng, n), dst = tuple_space(ng, n + 1);
  rows_out = dst.count * r;
  cols_out = src.count * r;
  const long cols = cols_out;
  std::vector<std::int64_t> m(static_cast<std::size_t>(rows_out) * cols, 0);
  // action matrix: coordinate i of g . b_j
  std::vector<std::int64_t> act(static_cast<std::size_t>(ng) * r * r);
  for (Elem s = 0; s < ng; ++s)
    for (int j = 0; j < r; ++j) {
      const auto& c = dec.coordinates(module.apply(s, dec.factors()[factor_ids[j]].generator));
      for (int i = 0; i < r; ++i) act[(static_cast<std::size_t>(s) * r + i) * r + j] = c[factor_ids[i]];
    }
  std::vector<Elem> a(n + 1), merged(std::max(n, 1));
  for (long row_t = 0; row_t < dst.count; ++row_t) {
    dst.decode(row_t, a.data());
    auto add = [&](long col_t, int sign) {
      for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(row_t * r + i) * cols + col_t * r + i] += sign;
    };
    const long first = src.index(a.data() + 1);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        m[static_cast<std::size_t>(row_t * r + i) * cols + first * r + j] += act[(static_cast<std::size_t>(a[0]) * r + i) * r + j];
    for (int i = 1; i <= n; ++i) {
      const Elem prod = g.mul(a[i - 1], a[i]);
      if (prod == 0) continue;
      for (int j = 0, w = 0; j <= n; ++j) {
        if (j == i) continue;
        merged[w++] = (j == i - 1) ? prod : a[j];
      }
      add(src.index(merged.data()), (i % 2 == 0) ? 1 : -1);
    }
    add(src.index(a.data()), ((n + 1) % 2 == 0) ? 1 : -1);
  }
  return m;
}

void check_work(long rows, long cols, long max_work) {
  const double work = static_cast<double>(rows) * cols * static_cast<double>(std::min(rows, cols));
  if (work > static_cast<double>(max_work))
    throw BoundExceeded("linear system of size " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds the linear-work bound");
}

// p-primary factor ids and their exponents
void prime_factors_of(const AbelianDecomposition& dec, int p, std::vector<int>& ids, std::vector<int>& kf) {
  for (std::size_t i = 0; i < dec.factors().size(); ++i)
    if (dec.factors()[i].prime == p) {
      ids.push_back(static_cast<int>(i));
      kf.push_back(dec.factors()[i].exponent);
    }
}

}  // namespace

AbelianCohomology::AbelianCohomology(const GAction& module, int degree, long max_work)
    : module_(module), decomposition_(module.space()), degree_(degree) {
  if (degree < 1 || degree > 3) throw InvalidInput("cohomology degree must be 1, 2 or 3");
  std::vector<int> primes;
  for (const auto& f : decomposition_.factors())
    if (primes.empty() || primes.back() != f.prime) primes.push_back(f.prime);
  const int ng = module.actor().order();
  for (int p : primes) {
    PrimePart part;
    part.p = p;
    prime_factors_of(decomposition_, p, part.factor_ids, part.kf);
    part.r = static_cast<int>(part.factor_ids.size());
    part.k = *std::max_element(part.kf.begin(), part.kf.end());
    part.q = ipow(p, part.k);
    const std::int64_t q = part.q;

    long rows = 0, cols = 0;
    check_work(ipow(ng - 1, degree + 1) * part.r, ipow(ng - 1, degree) * part.r, max_work);
    std::vector<std::int64_t> d = differential_matrix(module, decomposition_, part.factor_ids, degree, rows, cols);
    part.a = static_cast<int>(cols);
    for (long i = 0; i < rows; ++i) {
      const std::int64_t scale = ipow(p, part.k - part.kf[i % part.r]);
      for (long j = 0; j < cols; ++j) {
        auto& x = d[static_cast<std::size_t>(i) * cols + j];
        x = mod(x * scale, q);
      }
    }
    const ChainRingSmith s1 = chain_ring_smith(p, part.k, static_cast<int>(rows), static_cast<int>(cols), std::move(d),
                                               true, false);
    // kernel of the scaled differential: V w with p^v_j w_j = 0
    std::vector<int> jsel;
    for (int j = 0; j < part.a; ++j) {
      const int v = j < static_cast<int>(s1.valuation.size()) ? s1.valuation[j] : part.k;
      if (v > 0) {
        jsel.push_back(j);
        part.kernel_val.push_back(v);
      }
    }
    part.nj = static_cast<int>(jsel.size());
    const int a = part.a, nj = part.nj;
    part.v_inv_rows.resize(static_cast<std::size_t>(nj) * a);
    part.kappa.resize(static_cast<std::size_t>(nj) * a);
    for (int jj = 0; jj < nj; ++jj) {
      const int j = jsel[jj];
      const std::int64_t mult = ipow(p, part.k - part.kernel_val[jj]);
      for (int c = 0; c < a; ++c) {
        part.v_inv_rows[static_cast<std::size_t>(jj) * a + c] = s1.v_inv[static_cast<std::size_t>(j) * a + c];
        part.kappa[static_cast<std::size_t>(jj) * a + c] = mod(s1.v[static_cast<std::size_t>(c) * a + j] * mult, q);
      }
    }

    // image: coboundaries of (n-1)-cochains and the relations p^k_i e_i, in kernel coordinates
    long rows0 = 0, cols0 = 0;
    std::vector<std::int64_t> d0 = differential_matrix(module, decomposition_, part.factor_ids, degree - 1, rows0, cols0);
    const int nimg = static_cast<int>(cols0) + a;
    const int width = nimg + nj;
    check_work(nj, width, max_work);
    std::vector<std::int64_t> m2(static_cast<std::size_t>(nj) * width, 0);
    std::vector<std::int64_t> w(nj);
    auto to_kernel_coords = [&](auto&& column_entry, int out_col, const char* what) {
      for (int jj = 0; jj < nj; ++jj) {
        std::int64_t acc = 0;
        for (int c = 0; c < a; ++c) {
          const std::int64_t x = column_entry(c);
          if (x != 0) acc = mod(acc + part.v_inv_rows[static_cast<std::size_t>(jj) * a + c] * x, q);
        }
        const std::int64_t div = ipow(p, part.k - part.kernel_val[jj]);
        if (acc % div != 0) throw InternalError(std::string(what) + " is not a cocycle");
        m2[static_cast<std::size_t>(jj) * width + out_col] = acc / div;
      }
    };
    for (long c0 = 0; c0 < cols0; ++c0)
      to_kernel_coords([&](int c) { return mod(d0[static_cast<std::size_t>(c) * cols0 + c0], q); }, static_cast<int>(c0),
                       "a coboundary");
    for (int c = 0; c < a; ++c) {
      const std::int64_t rel = ipow(p, part.kf[c % part.r]);
      to_kernel_coords([&](int cc) { return cc == c ? rel % q : 0; }, static_cast<int>(cols0) + c, "a relation");
    }
    for (int jj = 0; jj < nj; ++jj) m2[static_cast<std::size_t>(jj) * width + nimg + jj] = ipow(p, part.kernel_val[jj]) % q;
    const ChainRingSmith s2 = chain_ring_smith(p, part.k, nj, width, std::move(m2), false, true);
    part.u2 = s2.u;
    part.u2_inv = s2.u_inv;
    part.s.resize(nj);
    for (int i = 0; i < nj; ++i) {
      part.s[i] = i < static_cast<int>(s2.valuation.size()) ? s2.valuation[i] : part.k;
      if (part.s[i] > 0) {
        part.class_rows.push_back(i);
        elementary_.push_back(ipow(p, part.s[i]));
      }
    }
    parts_.push_back(std::move(part));
  }
}

std::vector<long> AbelianCohomology::invariant_factors() const {
  // combine elementary divisors prime by prime, largest with largest
  std::vector<std::vector<long>> by_prime;
  std::size_t pos = 0;
  for (const auto& part : parts_) {
    std::vector<long> ds;
    for (std::size_t i = 0; i < part.class_rows.size(); ++i) ds.push_back(elementary_[pos++]);
    std::sort(ds.rbegin(), ds.rend());
    by_prime.push_back(ds);
  }
  std::size_t len = 0;
  for (const auto& ds : by_prime) len = std::max(len, ds.size());
  std::vector<long> inv(len, 1);
  for (const auto& ds : by_prime)
    for (std::size_t i = 0; i < ds.size(); ++i) inv[i] *= ds[i];
  std::reverse(inv.begin(), inv.end());
  return inv;
}

long AbelianCohomology::order() const {
  long o = 1;
  for (long d : elementary_) o *= d;
  return o;
}

bool AbelianCohomology::is_cocycle(const Cochain& c) const {
  const Cochain d = coboundary(module_, c, degree_);
  return std::all_of(d.begin(), d.end(), [](Elem x) { return x == 0; });
}

std::vector<std::int64_t> AbelianCohomology::prime_vector(const PrimePart& part, const Cochain& c) const {
  const int ng = module_.actor().order();
  const TupleSpace ts = tuple_space(ng, degree_);
  std::vector<std::int64_t> x(part.a);
  std::vector<Elem> args(degree_);
  for (long t = 0; t < ts.count; ++t) {
    ts.decode(t, args.data());
    long full = 0;
    for (Elem g : args) full = full * ng + g;
    const auto& coords = decomposition_.coordinates(c[full]);
    for (int i = 0; i < part.r; ++i) x[t * part.r + i] = coords[part.factor_ids[i]];
  }
  return x;
}

std::vector<long> AbelianCohomology::classify(const Cochain& c) const {
  if (static_cast<long>(c.size()) != ipow(module_.actor().order(), degree_))
    throw InvalidInput("cochain has the wrong size");
  if (!is_cocycle(c)) throw InvalidInput("not a cocycle");
  std::vector<long> out;
  for (const auto& part : parts_) {
    const std::vector<std::int64_t> x = prime_vector(part, c);
    std::vector<std::int64_t> z(part.nj);
    for (int jj = 0; jj < part.nj; ++jj) {
      std::int64_t acc = 0;
      for (int col = 0; col < part.a; ++col)
        if (x[col] != 0) acc = mod(acc + part.v_inv_rows[static_cast<std::size_t>(jj) * part.a + col] * x[col], part.q);
      const std::int64_t div = ipow(part.p, part.k - part.kernel_val[jj]);
      if (acc % div != 0) throw InternalError("cocycle outside the computed kernel");
      z[jj] = acc / div;
    }
    for (int i : part.class_rows) {
      std::int64_t acc = 0;
      for (int jj = 0; jj < part.nj; ++jj) acc = mod(acc + part.u2[static_cast<std::size_t>(i) * part.nj + jj] * z[jj], part.q);
      out.push_back(static_cast<long>(acc % ipow(part.p, part.s[i])));
    }
  }
  return out;
}

long AbelianCohomology::index_of_coordinates(const std::vector<long>& coords) const {
  long idx = 0;
  for (std::size_t i = elementary_.size(); i-- > 0;) idx = idx * elementary_[i] + mod(coords[i], elementary_[i]);
  return idx;
}

std::vector<long> AbelianCohomology::coordinates_of_index(long index) const {
  if (index < 0 || index >= order()) throw InvalidInput("class index out of range");
  std::vector<long> c(elementary_.size());
  for (std::size_t i = 0; i < elementary_.size(); ++i) {
    c[i] = index % elementary_[i];
    index /= elementary_[i];
  }
  return c;
}

long AbelianCohomology::class_index(const Cochain& c) const { return index_of_coordinates(classify(c)); }

Cochain AbelianCohomology::representative(const std::vector<long>& coords) const {
  if (coords.size() != elementary_.size()) throw InvalidInput("wrong number of class coordinates");
  const int ng = module_.actor().order();
  const TupleSpace ts = tuple_space(ng, degree_);
  const int nf = static_cast<int>(decomposition_.factors().size());
  std::vector<std::vector<long>> value(ts.count, std::vector<long>(nf, 0));
  std::size_t pos = 0;
  for (const auto& part : parts_) {
    std::vector<std::int64_t> cvec(part.nj, 0);
    for (int i : part.class_rows) cvec[i] = coords[pos++];
    std::vector<std::int64_t> z(part.nj, 0);
    for (int jj = 0; jj < part.nj; ++jj)
      for (int i = 0; i < part.nj; ++i)
        z[jj] = mod(z[jj] + part.u2_inv[static_cast<std::size_t>(jj) * part.nj + i] * cvec[i], part.q);
    for (int jj = 0; jj < part.nj; ++jj) {
      if (z[jj] == 0) continue;
      for (int col = 0; col < part.a; ++col) {
        const std::int64_t kap = part.kappa[static_cast<std::size_t>(jj) * part.a + col];
        if (kap == 0) continue;
        auto& slot = value[col / part.r][part.factor_ids[col % part.r]];
        slot = mod(slot + kap * z[jj], part.q);
      }
    }
  }
  Cochain out(ipow(ng, degree_), 0);
  std::vector<Elem> args(degree_);
  for (long t = 0; t < ts.count; ++t) {
    ts.decode(t, args.data());
    long full = 0;
    for (Elem g : args) full = full * ng + g;
    out[full] = decomposition_.element(value[t]);
  }
  return out;
}

std::optional<Cochain> solve_coboundary(const GAction& module, const Cochain& c, int n, long max_work) {
  if (n < 1 || n > 4) throw InvalidInput("coboundary degree out of range");
  const int ng = module.actor().order();
  if (static_cast<long>(c.size()) != ipow(ng, n)) throw InvalidInput("cochain has the wrong size");
  for (long idx = 0; idx < static_cast<long>(c.size()); ++idx) {
    long rest = idx;
    bool has_identity = false;
    for (int i = 0; i < n; ++i, rest /= ng) has_identity = has_identity || rest % ng == 0;
    if (has_identity && c[idx] != 0) throw InvalidInput("cochain is not normalized");
  }
  const AbelianDecomposition dec(module.space());
  const TupleSpace target = tuple_space(ng, n), source = tuple_space(ng, n - 1);
  const int nf = static_cast<int>(dec.factors().size());
  std::vector<std::vector<long>> value(source.count, std::vector<long>(nf, 0));
  std::vector<int> primes;
  for (const auto& f : dec.factors())
    if (primes.empty() || primes.back() != f.prime) primes.push_back(f.prime);
  std::vector<Elem> args(n);
  for (int p : primes) {
    std::vector<int> ids, kf;
    prime_factors_of(dec, p, ids, kf);
    const int r = static_cast<int>(ids.size());
    const int k = *std::max_element(kf.begin(), kf.end());
    const std::int64_t q = ipow(p, k);
    check_work(target.count * r, source.count * r, max_work);
    long rows = 0, cols = 0;
    std::vector<std::int64_t> d = differential_matrix(module, dec, ids, n - 1, rows, cols);
    std::vector<std::int64_t> rhs(rows);
    for (long t = 0; t < target.count; ++t) {
      target.decode(t, args.data());
      long full = 0;
      for (Elem g : args) full = full * ng + g;
      const auto& coords = dec.coordinates(c[full]);
      for (int i = 0; i < r; ++i) rhs[t * r + i] = coords[ids[i]];
    }
    for (long i = 0; i < rows; ++i) {
      const std::int64_t scale = ipow(p, k - kf[i % r]);
      for (long j = 0; j < cols; ++j) {
        auto& x = d[static_cast<std::size_t>(i) * cols + j];
        x = mod(x * scale, q);
      }
      rhs[i] = mod(rhs[i] * scale, q);
    }
    const ChainRingSmith s = chain_ring_smith(p, k, static_cast<int>(rows), static_cast<int>(cols), std::move(d), true,
                                              false, std::move(rhs), 1);
    std::vector<std::int64_t> w(cols, 0);
    for (long i = 0; i < rows; ++i) {
      const std::int64_t b = s.protected_cols[i];
      if (i < s.rank) {
        const std::int64_t div = ipow(p, s.valuation[i]);
        if (b % div != 0) return std::nullopt;
        w[i] = b / div;
      } else if (b != 0) {
        return std::nullopt;
      }
    }
    for (long col = 0; col < cols; ++col) {
      std::int64_t x = 0;
      for (long j = 0; j < s.rank; ++j) x = mod(x + s.v[static_cast<std::size_t>(col) * cols + j] * w[j], q);
      value[col / r][ids[col % r]] = x;
    }
  }
  Cochain out(ipow(ng, n - 1), 0);
  std::vector<Elem> sargs(std::max(n - 1, 0));
  for (long t = 0; t < source.count; ++t) {
    source.decode(t, sargs.data());
    long full = 0;
    for (Elem g : sargs) full = full * ng + g;
    out[full] = dec.element(value[t]);
  }
  if (coboundary(module, out, n - 1) != c) throw InternalError("coboundary solution does not verify");
  return out;
}

}  // namespace nabc
