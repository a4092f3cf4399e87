#include "subop/morphisms.hpp"

#include <algorithm>
#include <set>

namespace subop {

namespace {

using TypeSet = std::set<GroundType, TypeOrder>;

GroundType wildcard_image(const ClassTable& table, const std::string& g,
                          TypeArg::Kind kind, const GroundType& t) {
  TypeArg arg = kind == TypeArg::Kind::Extends   ? TypeArg::extends(t)
                : kind == TypeArg::Kind::Super   ? TypeArg::super(t)
                                                 : TypeArg::invariant(t);
  return canonicalize(table, GroundType::generic(g, std::move(arg)));
}

void require_valid_over(const ClassTable& table, const SubtypingRelation& r) {
  if (!r.contains_type(object_type()) || !r.contains_type(null_type()))
    throw std::invalid_argument("relation is missing Object or Null");
  for (const std::string& g : table.generic_classes())
    if (!r.contains_type(GroundType::generic(g, TypeArg::unbounded())))
      throw std::invalid_argument("relation is missing the rank-0 type " + g + "<?>");
  for (const GroundType& t : r.carrier())
    if (t.is_generic() && !(canonicalize(table, t) == t))
      throw std::invalid_argument("carrier type not canonical over table: " + display(t));
}

// Common skeleton of copy/flip/flat: one new wildcard family per generic
// class, ordered per the variance kind, with its bottom attached above Null.
SubtypingRelation variance_step(const ClassTable& table, const SubtypingRelation& r,
                                TypeArg::Kind kind) {
  require_valid_over(table, r);

  TypeSet carrier(r.carrier().begin(), r.carrier().end());
  std::vector<TypePair> edges = r.closure_pairs();
  const int n = static_cast<int>(r.size());

  for (const std::string& g : table.generic_classes()) {
    std::vector<GroundType> image;
    image.reserve(n);
    for (const GroundType& t : r.carrier())
      image.push_back(wildcard_image(table, g, kind, t));
    carrier.insert(image.begin(), image.end());

    switch (kind) {
      case TypeArg::Kind::Extends:
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j && r.closed(i, j)) edges.emplace_back(image[i], image[j]);
        // Family bottom is the image of Null, i.e. G<N>.
        edges.emplace_back(null_type(), image[r.index_of(null_type())]);
        break;
      case TypeArg::Kind::Super:
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j && r.closed(i, j)) edges.emplace_back(image[j], image[i]);
        // Dual order: the image of Object, G<O>, is the family bottom.
        edges.emplace_back(null_type(), image[r.index_of(object_type())]);
        break;
      case TypeArg::Kind::Invariant: {
        // Discrete family: only the attachment edges below G<?> and above Null.
        GroundType g_default = GroundType::generic(g, TypeArg::unbounded());
        for (const GroundType& img : image) {
          edges.emplace_back(null_type(), img);
          edges.emplace_back(img, g_default);
        }
        break;
      }
      case TypeArg::Kind::Unbounded:
        break;
    }
  }

  std::vector<GroundType> carrier_vec(carrier.begin(), carrier.end());
  std::vector<TypePair> clean;
  clean.reserve(edges.size());
  for (TypePair& e : edges)
    if (!(e.first == e.second)) clean.push_back(std::move(e));
  return SubtypingRelation::build(std::move(carrier_vec), clean, r.iteration());
}

}  // namespace

SubtypingRelation copy(const ClassTable& table, const SubtypingRelation& r) {
  return variance_step(table, r, TypeArg::Kind::Extends);
}

SubtypingRelation flip(const ClassTable& table, const SubtypingRelation& r) {
  return variance_step(table, r, TypeArg::Kind::Super);
}

SubtypingRelation flat(const ClassTable& table, const SubtypingRelation& r) {
  return variance_step(table, r, TypeArg::Kind::Invariant);
}

SubtypingRelation merge(const ClassTable& table, const RelationTriple& triple) {
  TypeSet carrier(triple.covariant.carrier().begin(), triple.covariant.carrier().end());
  carrier.insert(triple.contravariant.carrier().begin(),
                 triple.contravariant.carrier().end());
  carrier.insert(triple.invariant.carrier().begin(), triple.invariant.carrier().end());

  // The common input carrier is exactly the intersection of the three
  // output carriers: fresh extends-, super- and invariant-shaped types
  // never coincide across all three.
  std::vector<GroundType> common;
  for (const GroundType& t : triple.covariant.carrier())
    if (triple.contravariant.contains_type(t) && triple.invariant.contains_type(t))
      common.push_back(t);

  std::vector<TypePair> edges = triple.covariant.closure_pairs();
  for (const SubtypingRelation* r : {&triple.contravariant, &triple.invariant}) {
    std::vector<TypePair> more = r->closure_pairs();
    edges.insert(edges.end(), std::make_move_iterator(more.begin()),
                 std::make_move_iterator(more.end()));
  }

  for (const std::string& g : table.generic_classes())
    for (const GroundType& x : common) {
      GroundType inv = wildcard_image(table, g, TypeArg::Kind::Invariant, x);
      for (TypeArg::Kind kind : {TypeArg::Kind::Extends, TypeArg::Kind::Super}) {
        GroundType wild = wildcard_image(table, g, kind, x);
        if (!carrier.count(inv) || !carrier.count(wild))
          throw std::invalid_argument(
              "triple was not produced from a common input relation");
        if (!(inv == wild)) edges.emplace_back(inv, wild);
      }
    }

  std::vector<GroundType> carrier_vec(carrier.begin(), carrier.end());
  return SubtypingRelation::build(std::move(carrier_vec), edges,
                                  triple.covariant.iteration());
}

SubtypingRelation jsm(const ClassTable& table, const SubtypingRelation& r) {
  RelationTriple triple{copy(table, r), flip(table, r), flat(table, r)};
  return merge(table, triple).with_iteration(r.iteration() + 1);
}

SubtypingRelation identity(SubtypingRelation r) { return r; }

namespace {

std::size_t projected_carrier_size(const ClassTable& table, const SubtypingRelation& r) {
  TypeSet next(r.carrier().begin(), r.carrier().end());
  for (const std::string& g : table.generic_classes())
    for (const GroundType& t : r.carrier())
      for (TypeArg::Kind kind : {TypeArg::Kind::Extends, TypeArg::Kind::Super,
                                 TypeArg::Kind::Invariant})
        next.insert(wildcard_image(table, g, kind, t));
  return next.size();
}

}  // namespace

SubtypingRelation iterate(const ClassTable& table, int n, std::size_t budget) {
  if (n < 0) throw std::invalid_argument("iteration count must be non-negative");
  SubtypingRelation r = initial_subtyping(table);
  if (r.size() > budget) throw BudgetError(0, r.size(), budget);
  for (int k = 1; k <= n; ++k) {
    std::size_t projected = projected_carrier_size(table, r);
    if (projected > budget) throw BudgetError(k, projected, budget);
    r = jsm(table, r);
  }
  return r;
}

}  // namespace subop
