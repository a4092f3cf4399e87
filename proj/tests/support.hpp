#ifndef SUBOP_TESTS_SUPPORT_HPP
#define SUBOP_TESTS_SUPPORT_HPP

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "subop/class_table.hpp"
#include "subop/parser.hpp"
#include "subop/types.hpp"

namespace subop::testing {

inline ClassTable empty_table() { return parse_program(""); }

inline ClassTable one_class_table() {
  return parse_program("class C<T> extends Object {}");
}

inline ClassTable two_class_table() {
  return parse_program("class C<T> extends Object {} class D<T> extends Object {}");
}

inline ClassTable chain_table() {
  return parse_program(
      "class C<T> extends Object {} class A extends Object {} class B extends A {}");
}

/// The four tables the cross-validation suites run over.
inline std::vector<ClassTable> all_tables() {
  return {empty_table(), one_class_table(), two_class_table(), chain_table()};
}

inline GroundType ty(const std::string& expr, const ClassTable& table) {
  return parse_type(expr, table);
}

/// Random well-formed (possibly non-canonical) term over the table.
inline GroundType random_raw_term(std::mt19937& rng, const ClassTable& table,
                                  int depth) {
  std::vector<std::string> named{kObjectName, kNullName};
  std::vector<std::string> generics;
  for (const auto& d : table.declarations())
    (d.arity == 0 ? named : generics).push_back(d.name);

  auto pick = [&rng](const std::vector<std::string>& pool) {
    std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
    return pool[dist(rng)];
  };

  std::uniform_int_distribution<int> coin(0, 1);
  if (generics.empty() || depth == 0 || coin(rng) == 0)
    return GroundType::named(pick(named));

  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0:
      return GroundType::generic(pick(generics), TypeArg::unbounded());
    case 1:
      return GroundType::generic(
          pick(generics), TypeArg::extends(random_raw_term(rng, table, depth - 1)));
    case 2:
      return GroundType::generic(
          pick(generics), TypeArg::super(random_raw_term(rng, table, depth - 1)));
    default:
      return GroundType::generic(
          pick(generics), TypeArg::invariant(random_raw_term(rng, table, depth - 1)));
  }
}

}  // namespace subop::testing

#endif  // SUBOP_TESTS_SUPPORT_HPP
