#include "subop/oracle.hpp"

#include <algorithm>
#include <set>

namespace subop {

bool oracle_subtype(const ClassTable& table, const GroundType& sub,
                    const GroundType& sup) {
  if (sup.is_object()) return true;
  if (sub.is_null()) return true;
  if (sub.is_object() || sup.is_null()) return false;

  if (!sub.is_generic() && !sup.is_generic())
    return table.is_subclass(sub.name(), sup.name());
  if (sub.is_generic() != sup.is_generic()) return false;
  if (sub.name() != sup.name()) return false;
  return contains(table, sup.arg(), sub.arg());
}

bool contains(const ClassTable& table, const TypeArg& outer, const TypeArg& inner) {
  using Kind = TypeArg::Kind;
  if (outer.kind() == Kind::Unbounded) return true;
  if (inner.kind() == Kind::Unbounded) return false;

  switch (outer.kind()) {
    case Kind::Extends:
      if (inner.kind() == Kind::Super) return false;
      return oracle_subtype(table, inner.type(), outer.type());
    case Kind::Super:
      if (inner.kind() == Kind::Extends) return false;
      return oracle_subtype(table, outer.type(), inner.type());
    case Kind::Invariant:
      return inner.kind() == Kind::Invariant && inner.type() == outer.type();
    case Kind::Unbounded:
      break;  // handled above
  }
  return false;
}

std::vector<GroundType> enumerate_types(const ClassTable& table, int max_rank,
                                        std::size_t budget) {
  std::set<GroundType, TypeOrder> seen;
  seen.insert(object_type());
  seen.insert(null_type());
  for (const ClassTable::Declaration& d : table.declarations())
    seen.insert(d.arity == 1 ? GroundType::generic(d.name, TypeArg::unbounded())
                             : GroundType::named(d.name));
  if (seen.size() > budget) throw BudgetError(0, seen.size(), budget);

  std::vector<std::string> generics = table.generic_classes();
  std::vector<GroundType> frontier(seen.begin(), seen.end());
  for (int level = 1; level <= max_rank; ++level) {
    std::vector<GroundType> fresh;
    for (const std::string& g : generics)
      for (const GroundType& t : frontier) {
        const TypeArg args[] = {TypeArg::extends(t), TypeArg::super(t),
                                TypeArg::invariant(t)};
        for (const TypeArg& a : args) {
          GroundType candidate = canonicalize(table, GroundType::generic(g, a));
          if (seen.insert(candidate).second) fresh.push_back(std::move(candidate));
        }
      }
    if (seen.size() > budget) throw BudgetError(level, seen.size(), budget);
    frontier = std::move(fresh);
  }
  return {seen.begin(), seen.end()};
}

SubtypingRelation oracle_relation(const ClassTable& table, int max_rank,
                                  std::size_t budget) {
  std::vector<GroundType> carrier = enumerate_types(table, max_rank, budget);
  std::vector<TypePair> edges;
  for (const GroundType& s : carrier)
    for (const GroundType& t : carrier)
      if (!(s == t) && oracle_subtype(table, s, t)) edges.emplace_back(s, t);
  return SubtypingRelation::build(std::move(carrier), edges, max_rank);
}

}  // namespace subop
