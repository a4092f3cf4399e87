#include <doctest.h>

#include <set>

#include "subop/morphisms.hpp"
#include "subop/oracle.hpp"

#include "support.hpp"

using namespace subop;
using namespace subop::testing;

namespace {

// Hasse edges as display-string pairs, for readable exact comparisons.
std::set<std::pair<std::string, std::string>> hasse_names(const SubtypingRelation& r) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : r.hasse())
    out.insert({display(r.carrier()[a]), display(r.carrier()[b])});
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("morphisms");

TEST_CASE("copy embeds an ordered covariant family per generic class") {
  ClassTable table = one_class_table();
  SubtypingRelation out = copy(table, initial_subtyping(table));

  CHECK(out.size() == 5);
  CHECK(hasse_names(out) ==
        std::set<std::pair<std::string, std::string>>{{"N", "C<N>"},
                                                      {"C<N>", "C<? <: C<?>>"},
                                                      {"C<? <: C<?>>", "C<?>"},
                                                      {"C<?>", "O"}});

  SUBCASE("no generic classes: unchanged") {
    ClassTable plain = parse_program("class A extends Object {} class B extends A {}");
    SubtypingRelation r = initial_subtyping(plain);
    CHECK(copy(plain, r) == r);
    CHECK(flip(plain, r) == r);
    CHECK(flat(plain, r) == r);
  }

  SUBCASE("two generic classes: per-class antichain over the two defaults") {
    ClassTable two = two_class_table();
    SubtypingRelation out2 = copy(two, initial_subtyping(two));
    for (const std::string g : {"C", "D"}) {
      GroundType ext_c = ty(g + "<? <: C<?>>", two);
      GroundType ext_d = ty(g + "<? <: D<?>>", two);
      GroundType bottom = ty(g + "<N>", two);
      CHECK(!out2.is_edge(ext_c, ext_d));
      CHECK(!out2.is_edge(ext_d, ext_c));
      CHECK(out2.is_edge(bottom, ext_c));
      CHECK(out2.is_edge(bottom, ext_d));
      CHECK(out2.is_edge(ext_c, ty(g + "<?>", two)));
      CHECK(out2.is_edge(ext_d, ty(g + "<?>", two)));
    }
  }
}

TEST_CASE("flip embeds the dual family") {
  ClassTable table = one_class_table();
  SubtypingRelation r = initial_subtyping(table);
  SubtypingRelation out = flip(table, r);

  CHECK(out.size() == 5);
  CHECK(hasse_names(out) ==
        std::set<std::pair<std::string, std::string>>{{"N", "C<O>"},
                                                      {"C<O>", "C<? :> C<?>>"},
                                                      {"C<? :> C<?>>", "C<?>"},
                                                      {"C<?>", "O"}});

  SUBCASE("family order is the opposite of the input order") {
    for (const GroundType& x : r.carrier())
      for (const GroundType& y : r.carrier()) {
        GroundType img_x = canonicalize(table, GroundType::generic("C", TypeArg::super(x)));
        GroundType img_y = canonicalize(table, GroundType::generic("C", TypeArg::super(y)));
        CHECK(out.is_edge(img_x, img_y) == r.is_edge(y, x));
      }
  }
}

TEST_CASE("flat embeds a discrete family between Null and the default") {
  ClassTable table = one_class_table();
  SubtypingRelation out = flat(table, initial_subtyping(table));

  CHECK(out.size() == 6);
  CHECK(hasse_names(out) ==
        std::set<std::pair<std::string, std::string>>{{"N", "C<C<?>>"},
                                                      {"N", "C<N>"},
                                                      {"N", "C<O>"},
                                                      {"C<C<?>>", "C<?>"},
                                                      {"C<N>", "C<?>"},
                                                      {"C<O>", "C<?>"},
                                                      {"C<?>", "O"}});
  CHECK(!out.is_edge(ty("C<O>", table), ty("C<C<?>>", table)));
  CHECK(!out.is_edge(ty("C<C<?>>", table), ty("C<O>", table)));
}

TEST_CASE("merge unifies the three variance relations") {
  ClassTable table = one_class_table();
  SubtypingRelation r = initial_subtyping(table);
  RelationTriple triple{copy(table, r), flip(table, r), flat(table, r)};
  SubtypingRelation merged = merge(table, triple);

  CHECK(merged.size() == 8);
  CHECK(merged.hasse().size() == 10);
  CHECK(!first_difference(merged, oracle_relation(table, 1)).has_value());

  SUBCASE("cross-variance covers of the invariant types are Hasse edges") {
    auto edges = hasse_names(merged);
    CHECK(edges.count({"C<C<?>>", "C<? <: C<?>>"}) == 1);
    CHECK(edges.count({"C<C<?>>", "C<? :> C<?>>"}) == 1);
  }

  SUBCASE("no generic classes: merge of (r, r, r) is r") {
    ClassTable plain = parse_program("class A extends Object {}");
    SubtypingRelation pr = initial_subtyping(plain);
    CHECK(merge(plain, RelationTriple{pr, pr, pr}) == pr);
  }
}

TEST_CASE("jsm composes merge with the three variance steps") {
  CHECK(jsm(one_class_table(), initial_subtyping(one_class_table())).size() == 8);
  CHECK(jsm(empty_table(), initial_subtyping(empty_table())).size() == 2);
  CHECK(jsm(two_class_table(), initial_subtyping(two_class_table())).size() == 20);

  SUBCASE("iteration index is bumped") {
    SubtypingRelation r1 = jsm(one_class_table(), initial_subtyping(one_class_table()));
    CHECK(r1.iteration() == 1);
    CHECK(jsm(one_class_table(), r1).iteration() == 2);
  }
}

TEST_CASE("identity") {
  SubtypingRelation r = iterate(one_class_table(), 1);
  CHECK(identity(r) == r);
  CHECK(identity(jsm(one_class_table(), r)) == jsm(one_class_table(), identity(r)));
  CHECK(identity(dual(r)) == dual(r));
}

TEST_CASE("iterate") {
  ClassTable table = one_class_table();

  CHECK(iterate(table, 0).size() == 3);
  CHECK(iterate(table, 1).size() == 8);
  CHECK(iterate(table, 2).size() == 23);
  CHECK(iterate(two_class_table(), 1).size() == 20);

  SUBCASE("carrier is exactly the canonical types of rank <= n") {
    SubtypingRelation r2 = iterate(table, 2);
    for (const GroundType& t : r2.carrier()) CHECK(rank(t) <= 2);
    CHECK(r2.carrier() == enumerate_types(table, 2));
  }

  SUBCASE("budget exceeded reports iteration and projected size") {
    CHECK_THROWS_AS(iterate(table, 2, 10), BudgetError);
    try {
      iterate(table, 2, 10);
    } catch (const BudgetError& e) {
      CHECK(e.iteration() == 2);
      CHECK(e.projected() == 23);
    }
  }

  SUBCASE("conservativity over previous iterations") {
    for (const ClassTable& t : all_tables())
      for (int n = 0; n <= 2; ++n) {
        SubtypingRelation prev = iterate(t, n);
        SubtypingRelation next = iterate(t, n + 1);
        SubtypingRelation back =
            induced(next, [&prev](const GroundType& x) { return prev.contains_type(x); });
        CHECK(back == prev);
      }
  }
}

TEST_SUITE_END();
