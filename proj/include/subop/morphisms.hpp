#ifndef SUBOP_MORPHISMS_HPP
#define SUBOP_MORPHISMS_HPP

#include <cstddef>

#include "subop/class_table.hpp"
#include "subop/oracle.hpp"
#include "subop/relation.hpp"

namespace subop {

/// The three relations produced by copy, flip and flat from one common input
/// relation, in that order; what merge consumes.
struct RelationTriple {
  SubtypingRelation covariant;
  SubtypingRelation contravariant;
  SubtypingRelation invariant;
};

/// Covariant step: for each generic class G adds canonicalize(G<? <: T>) for
/// every carrier type T, ordered exactly as the input relation. The family
/// top canonicalizes to G<?> (the embedding point); the family bottom, G<N>,
/// attaches directly above Null.
SubtypingRelation copy(const ClassTable& table, const SubtypingRelation& r);

/// Contravariant step: as copy with canonicalize(G<? :> T>) and the family
/// ordered as the dual of the input. The family top (from T = Null)
/// canonicalizes to G<?>; the bottom, G<O>, attaches above Null.
SubtypingRelation flip(const ClassTable& table, const SubtypingRelation& r);

/// Invariant step: adds G<T> for every carrier type T as an antichain, each
/// placed above Null and below G<?>.
SubtypingRelation flat(const ClassTable& table, const SubtypingRelation& r);

/// Pushout of the three relations: carriers united (canonical equality
/// identifies repeated types), closures united, plus the cross-variance
/// edges G<X> -> G<? <: X> and G<X> -> G<? :> X> over the common input
/// carrier. Constructs no new types. Throws OrderViolation if the union
/// fails antisymmetry (impossible for triples produced by copy/flip/flat).
SubtypingRelation merge(const ClassTable& table, const RelationTriple& triple);

/// One construction step: merge o (copy, flip, flat). Bumps the iteration
/// index by one.
SubtypingRelation jsm(const ClassTable& table, const SubtypingRelation& r);

/// The operad identity.
SubtypingRelation identity(SubtypingRelation r);

/// Applies jsm n times to the rank-0 relation. The result carries exactly
/// the canonical types of rank <= n. Throws BudgetError before starting an
/// iteration whose carrier would exceed the budget.
SubtypingRelation iterate(const ClassTable& table, int n,
                          std::size_t budget = kDefaultCarrierBudget);

}  // namespace subop

#endif  // SUBOP_MORPHISMS_HPP
