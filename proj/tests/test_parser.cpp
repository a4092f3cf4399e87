#include <doctest.h>

#include "subop/parser.hpp"
#include "subop/relation.hpp"

#include "support.hpp"

using namespace subop;
using subop::testing::ty;

TEST_SUITE_BEGIN("parser");

TEST_CASE("parse_program accepts the declaration forms") {
  SUBCASE("one generic class") {
    ClassTable table = parse_program("class C<T> extends Object {}");
    REQUIRE(table.declares("C"));
    CHECK(table.arity("C") == 1);
    CHECK(table.superclass("C") == kObjectName);
    CHECK(table.declarations().front().type_param == "T");
  }

  SUBCASE("empty program has only the builtins") {
    ClassTable table = parse_program("");
    CHECK(table.declarations().empty());
    CHECK(table.knows(kObjectName));
    CHECK(table.knows(kNullName));
  }

  SUBCASE("arity-0 chain") {
    ClassTable table = parse_program("class A extends Object {} class B extends A {}");
    CHECK(table.arity("A") == 0);
    CHECK(table.arity("B") == 0);
    CHECK(table.superclass("B") == "A");
    CHECK(table.is_subclass("B", "A"));
    CHECK(table.is_subclass("B", kObjectName));
    CHECK(!table.is_subclass("A", "B"));

    // subclassing relation is the 4-node chain N -> B -> A -> O
    SubtypingRelation r = subclassing_relation(table);
    CHECK(r.size() == 4);
    CHECK(r.hasse().size() == 3);
    CHECK(r.is_edge(GroundType::named("B"), GroundType::named("A")));
    CHECK(r.is_edge(null_type(), GroundType::named("B")));
    CHECK(r.is_edge(GroundType::named("A"), object_type()));
  }

  SUBCASE("comments and whitespace are insignificant") {
    ClassTable table = parse_program(
        "// a generic class\nclass   C<T>\n  extends Object {}  // trailing\n");
    CHECK(table.declares("C"));
  }

  SUBCASE("superclass alias O resolves to Object") {
    ClassTable table = parse_program("class A extends O {}");
    CHECK(table.superclass("A") == kObjectName);
  }
}

TEST_CASE("parse_program rejects bad declarations") {
  CHECK_THROWS_AS(parse_program("class C<T> extends Object {} class D<T> extends C {}"),
                  ParseError);
  // generic classes must extend Object
  CHECK_THROWS_AS(
      parse_program("class A extends Object {} class C<T> extends A {}"), ParseError);
  CHECK_THROWS_AS(parse_program("class A extends Missing {}"), ParseError);
  // forward references are unknown superclasses
  CHECK_THROWS_AS(parse_program("class B extends A {} class A extends Object {}"),
                  ParseError);
  CHECK_THROWS_AS(parse_program("class A extends Object {} class A extends Object {}"),
                  ParseError);
  CHECK_THROWS_AS(parse_program("class Object extends Object {}"), ParseError);
  CHECK_THROWS_AS(parse_program("class Null extends Object {}"), ParseError);
  CHECK_THROWS_AS(parse_program("class N extends Object {}"), ParseError);
  CHECK_THROWS_AS(parse_program("class A extends Null {}"), ParseError);
  CHECK_THROWS_AS(parse_program("class A extends Object"), ParseError);

  SUBCASE("errors carry line and column") {
    try {
      parse_program("class A extends Object {}\nclass A extends Object {}");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 7);
    }
  }
}

TEST_CASE("parse_type parses and canonicalizes") {
  ClassTable table = testing::one_class_table();

  CHECK(parse_type("C<? extends O>", table) ==
        GroundType::generic("C", TypeArg::unbounded()));
  CHECK(parse_type("C<C<?>>", table) ==
        GroundType::generic("C", TypeArg::invariant(GroundType::generic(
                                     "C", TypeArg::unbounded()))));
  CHECK(parse_type("C<? :> N>", table) ==
        GroundType::generic("C", TypeArg::unbounded()));

  SUBCASE("keyword and symbol bound forms agree") {
    CHECK(ty("C<? extends C<?>>", table) == ty("C<? <: C<?>>", table));
    CHECK(ty("C<? super C<?>>", table) == ty("C<? :> C<?>>", table));
  }

  SUBCASE("aliases") {
    CHECK(ty("O", table) == object_type());
    CHECK(ty("Object", table) == object_type());
    CHECK(ty("N", table) == null_type());
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_type("E<?>", table), ParseError);
    CHECK_THROWS_AS(parse_type("C", table), ParseError);
    CHECK_THROWS_AS(parse_type("O<?>", table), ParseError);
    CHECK_THROWS_AS(parse_type("C<?", table), ParseError);
    CHECK_THROWS_AS(parse_type("C<?> junk", table), ParseError);
    CHECK_THROWS_AS(parse_type("", table), ParseError);
  }
}

TEST_SUITE_END();
