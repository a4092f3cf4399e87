#ifndef SUBOP_TYPES_HPP
#define SUBOP_TYPES_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace subop {

class ClassTable;
class GroundType;

/// Thrown when a type term is malformed over its class table
/// (unknown class name, arity mismatch).
class TypeError : public std::runtime_error {
 public:
  explicit TypeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Type-argument position of a generic application: `?`, `? extends T`,
/// `? super T`, or a plain (invariant) `T`.
class TypeArg {
 public:
  enum class Kind { Unbounded, Extends, Super, Invariant };

  static TypeArg unbounded();
  static TypeArg extends(GroundType bound);
  static TypeArg super(GroundType bound);
  static TypeArg invariant(GroundType payload);

  Kind kind() const { return kind_; }
  /// The bound or payload type. Requires kind() != Unbounded.
  const GroundType& type() const;

  friend bool operator==(const TypeArg& a, const TypeArg& b);
  friend bool operator!=(const TypeArg& a, const TypeArg& b) { return !(a == b); }

 private:
  TypeArg(Kind kind, std::shared_ptr<const GroundType> type)
      : kind_(kind), type_(std::move(type)) {}

  Kind kind_;
  std::shared_ptr<const GroundType> type_;  // null iff Unbounded
};

/// A ground (variable-free) type term: either a named non-generic type or a
/// generic application of one class name to one type argument.
///
/// Values are plain terms; only canonicalize() ties them to a class table.
class GroundType {
 public:
  static GroundType named(std::string name);
  static GroundType generic(std::string head, TypeArg arg);

  bool is_generic() const { return arg_.has_value(); }
  /// Class name for named types, head class name for generics.
  const std::string& name() const { return name_; }
  /// Requires is_generic().
  const TypeArg& arg() const;

  bool is_object() const;
  bool is_null() const;

  friend bool operator==(const GroundType& a, const GroundType& b);
  friend bool operator!=(const GroundType& a, const GroundType& b) { return !(a == b); }

 private:
  GroundType(std::string name, std::optional<TypeArg> arg)
      : name_(std::move(name)), arg_(std::move(arg)) {}

  std::string name_;
  std::optional<TypeArg> arg_;
};

inline const std::string kObjectName = "Object";
inline const std::string kNullName = "Null";

const GroundType& object_type();
const GroundType& null_type();

/// Rewrites a well-formed term bottom-up into its unique canonical
/// representative and validates it against the table:
///   ? extends Object -> ?          ? super Null   -> ?
///   ? extends Null   -> Null       ? super Object -> Object
/// Idempotent. Throws TypeError on unknown names or arity mismatches.
GroundType canonicalize(const ClassTable& table, const GroundType& raw);

/// Nesting depth: named types and `G<?>` have rank 0; wrapping a payload in
/// extends/super/invariant adds one.
int rank(const GroundType& t);

/// Deterministic textual form, parseable back by parse_type. Object and Null
/// print as O and N; `? extends` / `? super` print as `? <:` / `? :>`.
std::string display(const GroundType& t);

/// Canonical total order on types: by (rank, display string).
struct TypeOrder {
  bool operator()(const GroundType& a, const GroundType& b) const;
};

}  // namespace subop

#endif  // SUBOP_TYPES_HPP
