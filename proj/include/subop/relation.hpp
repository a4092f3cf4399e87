#ifndef SUBOP_RELATION_HPP
#define SUBOP_RELATION_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subop/class_table.hpp"
#include "subop/types.hpp"

namespace subop {

/// Thrown when an edge set fails antisymmetry (two distinct types would be
/// mutual subtypes). Always signals a construction bug.
class OrderViolation : public std::logic_error {
 public:
  explicit OrderViolation(const std::string& msg) : std::logic_error(msg) {}
};

using TypePair = std::pair<GroundType, GroundType>;
using TypeMap = std::map<GroundType, GroundType, TypeOrder>;

/// A finite subtyping poset: a carrier of canonical ground types ordered by
/// (rank, display), stored as its Hasse diagram with the reflexive-transitive
/// closure kept alongside. Immutable after construction.
class SubtypingRelation {
 public:
  /// Builds a relation from any generating edge set over the carrier:
  /// closes it, checks antisymmetry (throws OrderViolation), and stores the
  /// transitive reduction. Edges are (sub, super) pairs; duplicates and
  /// reflexive pairs are fine. Throws std::invalid_argument if an edge
  /// endpoint is missing from the carrier or the carrier has duplicates.
  static SubtypingRelation build(std::vector<GroundType> carrier,
                                 const std::vector<TypePair>& edges,
                                 int iteration = 0);

  /// Carrier in canonical (rank, display) order.
  const std::vector<GroundType>& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  /// Hasse edges as (sub, super) index pairs into carrier(), sorted.
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

  /// Reflexive-transitive closure as (sub, super) pairs over the carrier.
  std::vector<TypePair> closure_pairs() const;

  /// True iff sub <= sup in the closure. Throws std::invalid_argument when
  /// either type is not in the carrier.
  bool is_edge(const GroundType& sub, const GroundType& sup) const;

  bool contains_type(const GroundType& t) const { return index_of(t) >= 0; }
  /// Index into carrier(), or -1.
  int index_of(const GroundType& t) const;

  /// Closure lookup by carrier index.
  bool closed(int sub, int sup) const { return closure_[sub][sup]; }

  /// Which JSM application produced this relation (0 = initial).
  int iteration() const { return iteration_; }
  SubtypingRelation with_iteration(int iteration) const;

  /// Carrier and Hasse-edge equality; the iteration tag is not compared.
  friend bool operator==(const SubtypingRelation& a, const SubtypingRelation& b);
  friend bool operator!=(const SubtypingRelation& a, const SubtypingRelation& b) {
    return !(a == b);
  }

 private:
  SubtypingRelation() = default;

  std::vector<GroundType> carrier_;
  std::vector<std::pair<int, int>> hasse_;
  std::vector<std::vector<bool>> closure_;
  int iteration_ = 0;
};

/// The subclassing tree of a table plus the Null bottom: one node per class
/// name (generic classes appear by bare name), edges follow declarations,
/// Null sits below every leaf class.
SubtypingRelation subclassing_relation(const ClassTable& table);

/// The rank-0 subtyping relation: order-isomorphic to the subclassing
/// relation under arity-0 class -> named type, generic class G -> G<?>.
SubtypingRelation initial_subtyping(const ClassTable& table);

/// True iff node_map is an order isomorphism r1 -> r2 (it and its inverse
/// preserve the closure order). Throws std::invalid_argument when node_map
/// is not a bijection between the carriers.
bool order_isomorphic(const SubtypingRelation& r1, const SubtypingRelation& r2,
                      const TypeMap& node_map);

/// Same carrier, all edges reversed. The result intentionally breaks the
/// Object-top/Null-bottom shape; it only exists as an intermediate.
SubtypingRelation dual(const SubtypingRelation& r);

/// Subrelation induced on the kept types: closure restricted, then reduced.
SubtypingRelation induced(const SubtypingRelation& r,
                          const std::function<bool(const GroundType&)>& keep);

/// True iff Object is the unique maximal and Null the unique minimal element.
bool has_global_bounds(const SubtypingRelation& r);

/// First point (in canonical order) where two relations disagree: a carrier
/// type present on one side only, or a closure pair with opposite verdicts.
struct RelationDifference {
  enum class Kind { OnlyInFirst, OnlyInSecond, EdgeDisagreement };
  Kind kind;
  GroundType sub;
  GroundType sup;       // meaningful for EdgeDisagreement only
  bool edge_in_first;   // verdict of the first relation, ditto
};

std::optional<RelationDifference> first_difference(const SubtypingRelation& a,
                                                   const SubtypingRelation& b);

}  // namespace subop

#endif  // SUBOP_RELATION_HPP
