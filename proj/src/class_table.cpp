#include "subop/class_table.hpp"

#include "subop/types.hpp"

namespace subop {

void ClassTable::add(Declaration decl) {
  index_[decl.name] = static_cast<int>(decls_.size());
  decls_.push_back(std::move(decl));
}

bool ClassTable::declares(const std::string& name) const {
  return index_.count(name) != 0;
}

bool ClassTable::knows(const std::string& name) const {
  return name == kObjectName || name == kNullName || declares(name);
}

int ClassTable::arity(const std::string& name) const {
  if (name == kObjectName || name == kNullName) return 0;
  auto it = index_.find(name);
  if (it == index_.end()) throw TypeError("unknown class '" + name + "'");
  return decls_[it->second].arity;
}

const std::string& ClassTable::superclass(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw TypeError("class '" + name + "' has no superclass");
  return decls_[it->second].superclass;
}

std::vector<std::string> ClassTable::generic_classes() const {
  std::vector<std::string> result;
  for (const Declaration& d : decls_)
    if (d.arity == 1) result.push_back(d.name);
  return result;
}

bool ClassTable::is_subclass(const std::string& sub, const std::string& sup) const {
  std::string cur = sub;
  while (true) {
    if (cur == sup) return true;
    if (cur == kObjectName) return false;
    cur = superclass(cur);
  }
}

}  // namespace subop
