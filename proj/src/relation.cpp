#include "subop/relation.hpp"

#include <algorithm>
#include <set>

namespace subop {

SubtypingRelation SubtypingRelation::build(std::vector<GroundType> carrier,
                                           const std::vector<TypePair>& edges,
                                           int iteration) {
  TypeOrder less;
  std::sort(carrier.begin(), carrier.end(), less);
  for (std::size_t i = 1; i < carrier.size(); ++i)
    if (carrier[i - 1] == carrier[i])
      throw std::invalid_argument("duplicate type in carrier: " + display(carrier[i]));

  SubtypingRelation r;
  r.carrier_ = std::move(carrier);
  r.iteration_ = iteration;

  const int n = static_cast<int>(r.carrier_.size());
  std::vector<std::vector<int>> succ(n);
  for (const TypePair& e : edges) {
    int a = r.index_of(e.first);
    int b = r.index_of(e.second);
    if (a < 0 || b < 0)
      throw std::invalid_argument("edge endpoint not in carrier: " +
                                  display(a < 0 ? e.first : e.second));
    if (a != b) succ[a].push_back(b);
  }

  // Reflexive-transitive closure by DFS from each node.
  r.closure_.assign(n, std::vector<bool>(n, false));
  for (int start = 0; start < n; ++start) {
    std::vector<bool>& row = r.closure_[start];
    std::vector<int> stack{start};
    row[start] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : succ[u])
        if (!row[v]) {
          row[v] = true;
          stack.push_back(v);
        }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (r.closure_[i][j] && r.closure_[j][i])
        throw OrderViolation("order not antisymmetric: " + display(r.carrier_[i]) +
                             " and " + display(r.carrier_[j]) +
                             " are mutual subtypes");

  // Hasse edge: i < j with nothing strictly between.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !r.closure_[i][j]) continue;
      bool covered = false;
      for (int k = 0; k < n && !covered; ++k)
        if (k != i && k != j && r.closure_[i][k] && r.closure_[k][j]) covered = true;
      if (!covered) r.hasse_.emplace_back(i, j);
    }
  std::sort(r.hasse_.begin(), r.hasse_.end());
  return r;
}

std::vector<TypePair> SubtypingRelation::closure_pairs() const {
  std::vector<TypePair> pairs;
  const int n = static_cast<int>(carrier_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (closure_[i][j]) pairs.emplace_back(carrier_[i], carrier_[j]);
  return pairs;
}

bool SubtypingRelation::is_edge(const GroundType& sub, const GroundType& sup) const {
  int a = index_of(sub);
  int b = index_of(sup);
  if (a < 0) throw std::invalid_argument("type not in carrier: " + display(sub));
  if (b < 0) throw std::invalid_argument("type not in carrier: " + display(sup));
  return closure_[a][b];
}

int SubtypingRelation::index_of(const GroundType& t) const {
  TypeOrder less;
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), t, less);
  if (it == carrier_.end() || !(*it == t)) return -1;
  return static_cast<int>(it - carrier_.begin());
}

SubtypingRelation SubtypingRelation::with_iteration(int iteration) const {
  SubtypingRelation r = *this;
  r.iteration_ = iteration;
  return r;
}

bool operator==(const SubtypingRelation& a, const SubtypingRelation& b) {
  return a.carrier_ == b.carrier_ && a.hasse_ == b.hasse_;
}

namespace {

GroundType class_node(const ClassTable& table, const std::string& name, bool as_type) {
  if (as_type && table.arity(name) == 1)
    return GroundType::generic(name, TypeArg::unbounded());
  return GroundType::named(name);
}

// Shared tree shape of the subclassing and rank-0 subtyping relations:
// declaration edges plus Null under every leaf class.
SubtypingRelation class_tree_relation(const ClassTable& table, bool as_type) {
  std::vector<GroundType> carrier{object_type(), null_type()};
  std::vector<TypePair> edges;
  std::set<std::string> has_children;

  for (const ClassTable::Declaration& d : table.declarations()) {
    carrier.push_back(class_node(table, d.name, as_type));
    GroundType parent = d.superclass == kObjectName
                            ? object_type()
                            : class_node(table, d.superclass, as_type);
    edges.emplace_back(class_node(table, d.name, as_type), std::move(parent));
    has_children.insert(d.superclass);
  }
  for (const ClassTable::Declaration& d : table.declarations())
    if (!has_children.count(d.name))
      edges.emplace_back(null_type(), class_node(table, d.name, as_type));
  if (!has_children.count(kObjectName))
    edges.emplace_back(null_type(), object_type());

  return SubtypingRelation::build(std::move(carrier), edges, 0);
}

}  // namespace

SubtypingRelation subclassing_relation(const ClassTable& table) {
  return class_tree_relation(table, false);
}

SubtypingRelation initial_subtyping(const ClassTable& table) {
  return class_tree_relation(table, true);
}

bool order_isomorphic(const SubtypingRelation& r1, const SubtypingRelation& r2,
                      const TypeMap& node_map) {
  if (node_map.size() != r1.size() || r1.size() != r2.size())
    throw std::invalid_argument("node map is not a bijection between the carriers");

  std::vector<int> image(r1.size(), -1);
  std::vector<bool> hit(r2.size(), false);
  for (const auto& [from, to] : node_map) {
    int a = r1.index_of(from);
    int b = r2.index_of(to);
    if (a < 0 || b < 0 || hit[b])
      throw std::invalid_argument("node map is not a bijection between the carriers");
    image[a] = b;
    hit[b] = true;
  }

  const int n = static_cast<int>(r1.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r1.closed(i, j) != r2.closed(image[i], image[j])) return false;
  return true;
}

SubtypingRelation dual(const SubtypingRelation& r) {
  std::vector<TypePair> reversed;
  for (const auto& [a, b] : r.hasse())
    reversed.emplace_back(r.carrier()[b], r.carrier()[a]);
  return SubtypingRelation::build(r.carrier(), reversed, r.iteration());
}

SubtypingRelation induced(const SubtypingRelation& r,
                          const std::function<bool(const GroundType&)>& keep) {
  std::vector<GroundType> carrier;
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (keep(r.carrier()[i])) {
      carrier.push_back(r.carrier()[i]);
      kept.push_back(i);
    }
  std::vector<TypePair> edges;
  for (int i : kept)
    for (int j : kept)
      if (i != j && r.closed(i, j))
        edges.emplace_back(r.carrier()[i], r.carrier()[j]);
  return SubtypingRelation::build(std::move(carrier), edges, r.iteration());
}

bool has_global_bounds(const SubtypingRelation& r) {
  int top = r.index_of(object_type());
  int bottom = r.index_of(null_type());
  if (top < 0 || bottom < 0) return false;
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (!r.closed(i, top) || !r.closed(bottom, i)) return false;
  return true;
}

std::optional<RelationDifference> first_difference(const SubtypingRelation& a,
                                                   const SubtypingRelation& b) {
  TypeOrder less;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && less(a.carrier()[i], b.carrier()[j])))
      return RelationDifference{RelationDifference::Kind::OnlyInFirst, a.carrier()[i],
                                a.carrier()[i], false};
    if (i == a.size() || less(b.carrier()[j], a.carrier()[i]))
      return RelationDifference{RelationDifference::Kind::OnlyInSecond, b.carrier()[j],
                                b.carrier()[j], false};
    ++i;
    ++j;
  }
  // Same carrier, hence same canonical indexing on both sides.
  const int n = static_cast<int>(a.size());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (a.closed(s, t) != b.closed(s, t))
        return RelationDifference{RelationDifference::Kind::EdgeDisagreement,
                                  a.carrier()[s], a.carrier()[t], a.closed(s, t)};
  return std::nullopt;
}

}  // namespace subop
