#include <gtest/gtest.h>

#include "nabc/description.hpp"

using namespace nabc;

namespace {

DescriptionScope empty;

FiniteGroup group_of(const char* text) { return parse_group(Json::parse(text), empty, "g"); }

// Where a parse error points, or "" if none is thrown.
template <class Fn>
std::string error_location(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST(Description, GroupForms) {
  EXPECT_EQ(group_of(R"({"kind":"named","name":"D4"})").order(), 8);
  const FiniteGroup t = group_of(R"({"kind":"table","order":3,"mul":[[0,1,2],[1,2,0],[2,0,1]]})");
  EXPECT_EQ(t.order(), 3);
  EXPECT_TRUE(t.is_abelian());
  // S3 three ways: 0-based arrays, 1-based arrays, cycles
  const FiniteGroup a = group_of(R"({"kind":"perm","degree":3,"generators":[[1,0,2],[1,2,0]]})");
  const FiniteGroup b = group_of(R"({"kind":"perm","degree":3,"generators":[[2,1,3],[2,3,1]]})");
  const FiniteGroup c = group_of(R"j({"kind":"perm","degree":3,"generators":["(1,2)","(1,2,3)"]})j");
  EXPECT_EQ(a.order(), 6);
  EXPECT_TRUE(a.same_table(b));
  EXPECT_TRUE(a.same_table(c));
  EXPECT_EQ(group_of(R"j({"kind":"perm","degree":4,"generators":["(1,2)(3,4)","(1,3)(2,4)"]})j").order(), 4);
  EXPECT_EQ(group_of(R"("C2xC3")").order(), 6);
}

TEST(Description, ErrorsCarryLocations) {
  EXPECT_EQ(error_location([] { group_of(R"({"kind":"table","mul":[[0,1],[0,1]]})"); }), "g");
  EXPECT_EQ(error_location([] { group_of(R"j({"kind":"perm","degree":2,"generators":["(1,3)"]})j"); }),
            "g.generators[0]");
  EXPECT_EQ(error_location([] { group_of(R"("Nope")"); }), "g");
  EXPECT_EQ(error_location([] { group_of(R"({"kind":"dodecahedron"})"); }), "g.kind");
  const Json scenario = Json::parse(R"({
    "groups": {"G": "C4"},
    "subgroups": {"H": {"group": "G", "elements": [0, 1]}}
  })");
  EXPECT_EQ(error_location([&] { parse_scope(scenario); }), "subgroups.H.elements");
  const Json dup = Json::parse(R"({"groups": {"G": "C4"}, "subgroups": {"G": {"group": "G", "elements": [0]}}})");
  EXPECT_EQ(error_location([&] { parse_scope(dup); }), "subgroups.G");
}

TEST(Description, ActionsAndSubgroups) {
  const DescriptionScope scope = parse_scope(Json::parse(R"({
    "groups": {"G": "C4", "N": "C3"},
    "subgroups": {"H": {"group": "G", "generators": [2]}},
    "actions": {
      "per_element": {"actor": "G", "space": "N", "images": [[0,1,2],[0,2,1],[0,1,2],[0,2,1]]},
      "per_generator": {"actor": "G", "space": "N", "generators": [1], "images": [[0,2,1]]},
      "on_h": {"actor": "H", "space": "N", "images": "trivial"}
    }
  })"));
  EXPECT_EQ(scope.subgroups.at("H").members(), (std::vector<Elem>{0, 2}));
  const GAction& a = scope.actions.at("per_element");
  const GAction& b = scope.actions.at("per_generator");
  for (Elem g = 0; g < 4; ++g) EXPECT_EQ(a.automorphism(g), b.automorphism(g));
  EXPECT_TRUE(scope.actions.at("on_h").actor().same_table(scope.subgroups.at("H").group()));
  // a non-automorphism is refused
  EXPECT_THROW(parse_scope(Json::parse(R"({"actions": {"x": {"actor": "C2", "space": "C3", "images": [[0,0,0]]}}})")),
               ParseError);
}

TEST(Description, Extensions) {
  const DescriptionScope scope = parse_scope(Json::parse(R"({
    "groups": {"N": "C2", "G": "C2"},
    "actions": {"t": {"actor": "G", "space": "C3", "images": [[0,2,1]]}},
    "extensions": {
      "c4": {"kernel": "N", "quotient": "G", "u": [[0,1],[0,1]], "m": [[0,0],[0,1]]},
      "c4_total": {"total": "C4", "quotient": "G", "inject": [0,2], "project": [0,1,0,1]},
      "s3": {"semidirect": "t"}
    }
  })"));
  EXPECT_EQ(scope.extensions.at("c4").total().order(), 4);
  EXPECT_EQ(scope.extensions.at("c4_total").kernel().order(), 2);
  EXPECT_FALSE(extension_splits(scope.extensions.at("c4")));
  EXPECT_FALSE(scope.extensions.at("s3").total().is_abelian());
  // m(1,1) = 1 with a nontrivial u(1) on C3 breaks the cocycle condition
  EXPECT_THROW(parse_scope(Json::parse(R"({"extensions": {"bad": {"kernel": "C3", "quotient": "C2",
                 "u": [[0,1,2],[0,2,1]], "m": [[0,0],[0,1]]}}})")),
               ParseError);
}

TEST(Description, DescribeGroupRoundTrips) {
  const FiniteGroup g = named_group("D4");
  EXPECT_TRUE(parse_group(describe_group(g), empty, "g").same_table(g));
  const FiniteGroup t = FiniteGroup::from_table({{0, 1}, {1, 0}});
  EXPECT_TRUE(parse_group(describe_group(t), empty, "g").same_table(t));
}
