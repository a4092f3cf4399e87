#ifndef SUBOP_EXPORT_HPP
#define SUBOP_EXPORT_HPP

#include <string>

#include "subop/relation.hpp"

namespace subop {

/// DOT rendering of the Hasse diagram: edges drawn sub -> super, nodes of
/// equal rank grouped on one layer, statements sorted by (rank, display).
/// Byte-stable for a given relation.
std::string to_dot(const SubtypingRelation& r);

/// JSON rendering: {"iteration", "types": [{id, name, rank}...],
/// "hasse_edges": [[subId, superId]...]} with ids dense from 0 in canonical
/// order and edges sorted lexicographically. Byte-stable.
std::string to_json(const SubtypingRelation& r);

}  // namespace subop

#endif  // SUBOP_EXPORT_HPP
