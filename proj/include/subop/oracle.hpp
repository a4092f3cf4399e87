#ifndef SUBOP_ORACLE_HPP
#define SUBOP_ORACLE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "subop/class_table.hpp"
#include "subop/relation.hpp"
#include "subop/types.hpp"

namespace subop {

/// Thrown when an enumeration or iteration would exceed the carrier budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(int iteration, std::size_t projected, std::size_t budget)
      : std::runtime_error("carrier budget exceeded at iteration " +
                           std::to_string(iteration) + ": projected " +
                           std::to_string(projected) + " types, budget " +
                           std::to_string(budget)),
        iteration_(iteration),
        projected_(projected) {}

  int iteration() const { return iteration_; }
  std::size_t projected() const { return projected_; }

 private:
  int iteration_;
  std::size_t projected_;
};

inline constexpr std::size_t kDefaultCarrierBudget = 100000;

/// Direct decision procedure for ground subtyping, by structural recursion:
/// Object is the top, Null the bottom, named types follow subclassing, and
/// same-head generics reduce to containment of their arguments. Both types
/// must be canonical over the table.
bool oracle_subtype(const ClassTable& table, const GroundType& sub,
                    const GroundType& sup);

/// Containment between canonical type arguments: `?` contains everything,
/// `? <: X` contains plain or extends arguments with payload below X,
/// `? :> X` contains plain or super arguments with payload above X, plain
/// arguments contain only themselves, and only `?` contains `?`.
bool contains(const ClassTable& table, const TypeArg& outer, const TypeArg& inner);

/// All canonical types of rank <= max_rank over the table, in canonical
/// (rank, display) order. Throws BudgetError when the count would exceed
/// the budget.
std::vector<GroundType> enumerate_types(const ClassTable& table, int max_rank,
                                        std::size_t budget = kDefaultCarrierBudget);

/// Reference relation: enumerated carrier, edges decided pairwise by
/// oracle_subtype, reduced to Hasse form.
SubtypingRelation oracle_relation(const ClassTable& table, int max_rank,
                                  std::size_t budget = kDefaultCarrierBudget);

}  // namespace subop

#endif  // SUBOP_ORACLE_HPP
