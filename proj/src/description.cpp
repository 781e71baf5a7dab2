#include "nabc/description.hpp"

#include <cctype>

namespace nabc {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

// Elements must be valid indices of a group of the given order.
void check_elements(const std::vector<int>& xs, int order, const std::string& where) {
  for (int x : xs)
    if (x < 0 || x >= order) fail(where, "element " + std::to_string(x) + " out of range 0.." + std::to_string(order - 1));
}

// "(1,2,3)(4,5)" on points 1..degree
std::vector<int> parse_cycles(const std::string& s, int degree, const std::string& where) {
  std::vector<int> perm(degree);
  for (int i = 0; i < degree; ++i) perm[i] = i;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip();
  while (pos < s.size()) {
    if (s[pos] != '(') fail(where, "cycle notation expects '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip();
      std::size_t end = pos;
      while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
      if (end == pos) fail(where, "cycle notation expects a point");
      const int p = std::stoi(s.substr(pos, end - pos));
      if (p < 1 || p > degree) fail(where, "point " + std::to_string(p) + " outside 1.." + std::to_string(degree));
      cycle.push_back(p - 1);
      pos = end;
      skip();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      fail(where, "unterminated cycle");
    }
    // cycles compose left to right like permutation products
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = i;
    for (std::size_t i = 0; i < cycle.size(); ++i) c[cycle[i]] = cycle[(i + 1) % cycle.size()];
    for (int i = 0; i < degree; ++i) perm[i] = c[perm[i]];
    skip();
  }
  return perm;
}

FiniteGroup group_from_object(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) fail(where + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "named") {
      const Json& name = field(j, "name", where);
      if (!name.is_string()) fail(where + ".name", "expected a string");
      return named_group(name.get<std::string>());
    }
    if (k == "table") {
      const auto mul = int_matrix(field(j, "mul", where), where + ".mul");
      if (j.contains("order") && as_int(j["order"], where + ".order") != static_cast<int>(mul.size()))
        fail(where + ".order", "does not match the table");
      std::string name = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
      return FiniteGroup::from_table(mul, name);
    }
    if (k == "perm") {
      const int degree = as_int(field(j, "degree", where), where + ".degree");
      const Json& gens = field(j, "generators", where);
      if (!gens.is_array()) fail(where + ".generators", "expected an array");
      std::vector<std::vector<int>> perms;
      bool one_based = true, any_array = false;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::string at = where + ".generators[" + std::to_string(i) + "]";
        if (gens[i].is_string()) {
          perms.push_back(parse_cycles(gens[i].get<std::string>(), degree, at));
        } else {
          auto p = int_list(gens[i], at);
          any_array = true;
          for (int x : p)
            if (x == 0) one_based = false;
          perms.push_back(std::move(p));
        }
      }
      if (any_array && one_based)
        for (std::size_t i = 0; i < gens.size(); ++i)
          if (!gens[i].is_string())
            for (int& x : perms[i]) --x;
      return FiniteGroup::from_permutations(degree, perms);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
  fail(where + ".kind", "unknown group kind \"" + k + "\"");
}

ImageArray automorphism_of(const Json& j, const FiniteGroup& n, const std::string& where) {
  auto a = int_list(j, where);
  if (static_cast<int>(a.size()) != n.order()) fail(where, "automorphism needs one image per element");
  check_elements(a, n.order(), where);
  if (!is_bijection(a, n.order()) || !is_homomorphism(n, n, a)) fail(where, "not an automorphism");
  return a;
}

}  // namespace

bool DescriptionScope::has(const std::string& name) const {
  return groups.count(name) || subgroups.count(name) || actions.count(name) || extensions.count(name);
}

FiniteGroup parse_group(const Json& j, const DescriptionScope& scope, const std::string& where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (auto it = scope.groups.find(name); it != scope.groups.end()) return it->second;
    if (auto it = scope.subgroups.find(name); it != scope.subgroups.end()) return it->second.group();
    try {
      return named_group(name);
    } catch (const InvalidInput&) {
      fail(where, "unresolved group reference \"" + name + "\"");
    }
  }
  return group_from_object(j, where);
}

Subgroup parse_subgroup(const Json& j, const DescriptionScope& scope, const std::string& where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (auto it = scope.subgroups.find(name); it != scope.subgroups.end()) return it->second;
    fail(where, "unresolved subgroup reference \"" + name + "\"");
  }
  const FiniteGroup g = parse_group(field(j, "group", where), scope, where + ".group");
  if (j.contains("elements")) {
    const auto xs = int_list(j["elements"], where + ".elements");
    check_elements(xs, g.order(), where + ".elements");
    try {
      return Subgroup::from_elements(g, xs);
    } catch (const InvalidInput& e) {
      fail(where + ".elements", e.what());
    }
  }
  if (j.contains("generators")) {
    const auto xs = int_list(j["generators"], where + ".generators");
    check_elements(xs, g.order(), where + ".generators");
    return Subgroup::generated_by(g, xs);
  }
  fail(where, "a subgroup needs \"elements\" or \"generators\"");
}

GAction parse_action(const Json& j, const DescriptionScope& scope, const std::string& where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (auto it = scope.actions.find(name); it != scope.actions.end()) return it->second;
    fail(where, "unresolved action reference \"" + name + "\"");
  }
  const FiniteGroup actor = parse_group(field(j, "actor", where), scope, where + ".actor");
  const FiniteGroup space = parse_group(field(j, "space", where), scope, where + ".space");
  const Json& images = field(j, "images", where);
  if (images.is_string()) {
    if (images.get<std::string>() != "trivial") fail(where + ".images", "only \"trivial\" is accepted as a string");
    return GAction::trivial(actor, space);
  }
  if (!images.is_array()) fail(where + ".images", "expected an array of automorphisms");
  std::vector<ImageArray> autos;
  for (std::size_t i = 0; i < images.size(); ++i)
    autos.push_back(automorphism_of(images[i], space, where + ".images[" + std::to_string(i) + "]"));
  try {
    if (j.contains("generators")) {
      const auto gens = int_list(j["generators"], where + ".generators");
      check_elements(gens, actor.order(), where + ".generators");
      return GAction::from_generators(actor, space, gens, autos);
    }
    if (static_cast<int>(autos.size()) == actor.order()) return GAction(actor, space, autos);
    if (autos.size() == actor.generators().size()) return GAction::from_generators(actor, space, actor.generators(), autos);
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
  fail(where + ".images", "expected one automorphism per actor element or per generator");
}

Extension parse_extension(const Json& j, const DescriptionScope& scope, const std::string& where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (auto it = scope.extensions.find(name); it != scope.extensions.end()) return it->second;
    fail(where, "unresolved extension reference \"" + name + "\"");
  }
  if (!j.is_object()) fail(where, "expected an object");
  try {
    if (j.contains("semidirect")) return semidirect_extension(parse_action(j["semidirect"], scope, where + ".semidirect"));
    if (j.contains("total")) {
      const FiniteGroup total = parse_group(j["total"], scope, where + ".total");
      const auto inject = int_list(field(j, "inject", where), where + ".inject");
      const auto project = int_list(field(j, "project", where), where + ".project");
      check_elements(inject, total.order(), where + ".inject");
      if (static_cast<int>(project.size()) != total.order()) fail(where + ".project", "one image per element of the total group");
      const FiniteGroup kernel = j.contains("kernel")
                                     ? parse_group(j["kernel"], scope, where + ".kernel")
                                     : FiniteGroup::from_table([&] {
                                         // kernel table read off the total group through inject
                                         std::vector<int> pos(total.order(), -1);
                                         for (std::size_t i = 0; i < inject.size(); ++i) pos[inject[i]] = static_cast<int>(i);
                                         std::vector<std::vector<Elem>> t(inject.size(), std::vector<Elem>(inject.size()));
                                         for (std::size_t a = 0; a < inject.size(); ++a)
                                           for (std::size_t b = 0; b < inject.size(); ++b) {
                                             const int p = pos[total.mul(inject[a], inject[b])];
                                             if (p < 0) fail(where + ".inject", "image is not a subgroup");
                                             t[a][b] = p;
                                           }
                                         return t;
                                       }());
      const FiniteGroup quotient = parse_group(field(j, "quotient", where), scope, where + ".quotient");
      check_elements(project, quotient.order(), where + ".project");
      return Extension(total, kernel, quotient, inject, project);
    }
    const FiniteGroup kernel = parse_group(field(j, "kernel", where), scope, where + ".kernel");
    const FiniteGroup quotient = parse_group(field(j, "quotient", where), scope, where + ".quotient");
    const Json& u = field(j, "u", where);
    if (!u.is_array() || static_cast<int>(u.size()) != quotient.order())
      fail(where + ".u", "expected one automorphism per quotient element");
    std::vector<ImageArray> lifts;
    for (std::size_t i = 0; i < u.size(); ++i)
      lifts.push_back(automorphism_of(u[i], kernel, where + ".u[" + std::to_string(i) + "]"));
    const auto m = int_matrix(field(j, "m", where), where + ".m");
    if (static_cast<int>(m.size()) != quotient.order()) fail(where + ".m", "expected a |G| x |G| matrix");
    FactorSet f{LiftedKernel(quotient, kernel, std::move(lifts)), {}};
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (static_cast<int>(m[s].size()) != quotient.order()) fail(where + ".m[" + std::to_string(s) + "]", "wrong length");
      check_elements(m[s], kernel.order(), where + ".m[" + std::to_string(s) + "]");
      f.m.insert(f.m.end(), m[s].begin(), m[s].end());
    }
    std::string why;
    if (!is_factor_set(f, &why)) fail(where, "not a factor set: " + why);
    return extension_from_factor_set(f);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    fail(where, e.what());
  }
}

DescriptionScope parse_scope(const Json& scenario) {
  DescriptionScope scope;
  if (!scenario.is_object()) fail("", "a scenario is an object");
  auto section = [&](const char* key, auto&& add) {
    if (!scenario.contains(key)) return;
    const Json& s = scenario[key];
    if (!s.is_object()) fail(key, "expected an object of named descriptions");
    for (auto it = s.begin(); it != s.end(); ++it) {
      const std::string where = std::string(key) + "." + it.key();
      if (scope.has(it.key())) fail(where, "name already in use");
      add(it.key(), it.value(), where);
    }
  };
  section("groups", [&](const std::string& k, const Json& v, const std::string& w) {
    scope.groups.emplace(k, parse_group(v, scope, w));
  });
  section("subgroups", [&](const std::string& k, const Json& v, const std::string& w) {
    scope.subgroups.emplace(k, parse_subgroup(v, scope, w));
  });
  section("actions", [&](const std::string& k, const Json& v, const std::string& w) {
    scope.actions.emplace(k, parse_action(v, scope, w));
  });
  section("extensions", [&](const std::string& k, const Json& v, const std::string& w) {
    scope.extensions.emplace(k, parse_extension(v, scope, w));
  });
  return scope;
}

Json describe_group(const FiniteGroup& g) {
  if (!g.name().empty()) return Json{{"kind", "named"}, {"name", g.name()}};
  return Json{{"kind", "table"}, {"order", g.order()}, {"mul", g.table_rows()}};
}

}  // namespace nabc
