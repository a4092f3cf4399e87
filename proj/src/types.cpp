#include "subop/types.hpp"

#include "subop/class_table.hpp"

namespace subop {

TypeArg TypeArg::unbounded() { return TypeArg(Kind::Unbounded, nullptr); }

TypeArg TypeArg::extends(GroundType bound) {
  return TypeArg(Kind::Extends, std::make_shared<const GroundType>(std::move(bound)));
}

TypeArg TypeArg::super(GroundType bound) {
  return TypeArg(Kind::Super, std::make_shared<const GroundType>(std::move(bound)));
}

TypeArg TypeArg::invariant(GroundType payload) {
  return TypeArg(Kind::Invariant, std::make_shared<const GroundType>(std::move(payload)));
}

const GroundType& TypeArg::type() const {
  if (!type_) throw TypeError("unbounded wildcard has no bound type");
  return *type_;
}

bool operator==(const TypeArg& a, const TypeArg& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ == TypeArg::Kind::Unbounded) return true;
  return *a.type_ == *b.type_;
}

GroundType GroundType::named(std::string name) {
  return GroundType(std::move(name), std::nullopt);
}

GroundType GroundType::generic(std::string head, TypeArg arg) {
  return GroundType(std::move(head), std::move(arg));
}

const TypeArg& GroundType::arg() const {
  if (!arg_) throw TypeError("named type '" + name_ + "' has no type argument");
  return *arg_;
}

bool GroundType::is_object() const { return !is_generic() && name_ == kObjectName; }
bool GroundType::is_null() const { return !is_generic() && name_ == kNullName; }

bool operator==(const GroundType& a, const GroundType& b) {
  if (a.name_ != b.name_) return false;
  if (a.is_generic() != b.is_generic()) return false;
  return !a.is_generic() || *a.arg_ == *b.arg_;
}

const GroundType& object_type() {
  static const GroundType t = GroundType::named(kObjectName);
  return t;
}

const GroundType& null_type() {
  static const GroundType t = GroundType::named(kNullName);
  return t;
}

GroundType canonicalize(const ClassTable& table, const GroundType& raw) {
  if (!raw.is_generic()) {
    if (!table.knows(raw.name()))
      throw TypeError("unknown class '" + raw.name() + "'");
    if (table.arity(raw.name()) != 0)
      throw TypeError("generic class '" + raw.name() + "' used without a type argument");
    return raw;
  }
  if (!table.knows(raw.name()))
    throw TypeError("unknown class '" + raw.name() + "'");
  if (table.arity(raw.name()) != 1)
    throw TypeError("non-generic class '" + raw.name() + "' given a type argument");

  const TypeArg& arg = raw.arg();
  if (arg.kind() == TypeArg::Kind::Unbounded) return raw;

  GroundType payload = canonicalize(table, arg.type());
  switch (arg.kind()) {
    case TypeArg::Kind::Extends:
      if (payload.is_object())
        return GroundType::generic(raw.name(), TypeArg::unbounded());
      if (payload.is_null())
        return GroundType::generic(raw.name(), TypeArg::invariant(std::move(payload)));
      return GroundType::generic(raw.name(), TypeArg::extends(std::move(payload)));
    case TypeArg::Kind::Super:
      if (payload.is_null())
        return GroundType::generic(raw.name(), TypeArg::unbounded());
      if (payload.is_object())
        return GroundType::generic(raw.name(), TypeArg::invariant(std::move(payload)));
      return GroundType::generic(raw.name(), TypeArg::super(std::move(payload)));
    case TypeArg::Kind::Invariant:
      return GroundType::generic(raw.name(), TypeArg::invariant(std::move(payload)));
    case TypeArg::Kind::Unbounded:
      break;  // handled above
  }
  throw TypeError("unreachable type argument kind");
}

int rank(const GroundType& t) {
  if (!t.is_generic()) return 0;
  if (t.arg().kind() == TypeArg::Kind::Unbounded) return 0;
  return 1 + rank(t.arg().type());
}

std::string display(const GroundType& t) {
  if (!t.is_generic()) {
    if (t.name() == kObjectName) return "O";
    if (t.name() == kNullName) return "N";
    return t.name();
  }
  switch (t.arg().kind()) {
    case TypeArg::Kind::Unbounded:
      return t.name() + "<?>";
    case TypeArg::Kind::Extends:
      return t.name() + "<? <: " + display(t.arg().type()) + ">";
    case TypeArg::Kind::Super:
      return t.name() + "<? :> " + display(t.arg().type()) + ">";
    case TypeArg::Kind::Invariant:
      return t.name() + "<" + display(t.arg().type()) + ">";
  }
  throw TypeError("unreachable type argument kind");
}

bool TypeOrder::operator()(const GroundType& a, const GroundType& b) const {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  return display(a) < display(b);
}

}  // namespace subop
