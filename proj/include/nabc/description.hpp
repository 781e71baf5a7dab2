#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "nabc/extension.hpp"

namespace nabc {

using Json = nlohmann::ordered_json;

/// Malformed or unresolvable description; `where` is a path such as
/// "tasks[1].action" locating the offending value.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string where, const std::string& what)
      : InvalidInput(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Named objects a description may refer to by string. One namespace: a name
/// is looked up in groups, then subgroups, actions and extensions.
struct DescriptionScope {
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, Subgroup> subgroups;
  std::map<std::string, GAction> actions;
  std::map<std::string, Extension> extensions;

  bool has(const std::string& name) const;
};

/// {"kind":"table","order":n,"mul":[[...]]}, {"kind":"perm","degree":d,"generators":[...]}
/// or {"kind":"named","name":"C4"}; a bare string is a reference into the scope,
/// falling back to a named group. Permutations are image arrays (0- or 1-based)
/// or cycle strings such as "(1,2,3)(4,5)".
FiniteGroup parse_group(const Json& j, const DescriptionScope& scope, const std::string& where);

/// {"group": <group>, "elements": [...]} or {"group": <group>, "generators": [...]},
/// or a reference.
Subgroup parse_subgroup(const Json& j, const DescriptionScope& scope, const std::string& where);

/// {"actor": <group or subgroup>, "space": <group>, "images": [...]} with one
/// automorphism per actor element, or per entry of an optional "generators"
/// list, or per default generator of the actor. "images": "trivial" is the
/// trivial action. A subgroup actor stands for the subgroup as an abstract group.
GAction parse_action(const Json& j, const DescriptionScope& scope, const std::string& where);

/// {"kernel","quotient","u","m"} as a factor set, {"total","inject","project"},
/// or {"semidirect": <action>}.
Extension parse_extension(const Json& j, const DescriptionScope& scope, const std::string& where);

/// Fills a scope from the "groups", "subgroups", "actions" and "extensions"
/// objects of a scenario, in that order.
DescriptionScope parse_scope(const Json& scenario);

/// Named form when the group has a name, table form otherwise.
Json describe_group(const FiniteGroup& g);

}  // namespace nabc
