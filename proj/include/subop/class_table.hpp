#ifndef SUBOP_CLASS_TABLE_HPP
#define SUBOP_CLASS_TABLE_HPP

#include <map>
#include <string>
#include <vector>

namespace subop {

/// Validated class declarations of a program. Object is implicitly the root
/// and Null is implicitly a subclass of every class; neither is declarable.
/// Declared superclasses must be Object or a previously declared arity-0
/// class, so the subclassing relation is always a tree rooted at Object.
class ClassTable {
 public:
  struct Declaration {
    std::string name;
    int arity;  // 0 or 1
    std::string superclass;
    std::string type_param;  // recorded for arity-1 classes; bounds are out of scope
  };

  /// Appends a declaration; the caller (the parser) has already validated it.
  void add(Declaration decl);

  bool declares(const std::string& name) const;
  /// True for declared classes and the builtins Object and Null.
  bool knows(const std::string& name) const;
  /// Arity of a declared class or builtin (builtins have arity 0).
  int arity(const std::string& name) const;
  /// Superclass of a declared class. Object has none.
  const std::string& superclass(const std::string& name) const;

  /// Declared classes in declaration order.
  const std::vector<Declaration>& declarations() const { return decls_; }
  /// Names of the arity-1 classes, in declaration order.
  std::vector<std::string> generic_classes() const;

  /// True iff `sub` reaches `sup` by following superclass links zero or more
  /// times. Both must be declared classes or Object.
  bool is_subclass(const std::string& sub, const std::string& sup) const;

 private:
  std::vector<Declaration> decls_;
  std::map<std::string, int> index_;  // name -> position in decls_
};

}  // namespace subop

#endif  // SUBOP_CLASS_TABLE_HPP
