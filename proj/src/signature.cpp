#include "silk/signature.hpp"

#include <algorithm>
#include <stdexcept>

namespace silk {

void Signature::declare(const std::string& name, SymbolInfo info) {
  auto it = symbols_.find(name);
  if (it != symbols_.end()) {
    const SymbolInfo& old = it->second;
    if (old.arg_sorts != info.arg_sorts || old.result != info.result ||
        old.defined != info.defined) {
      throw std::invalid_argument("conflicting declaration of symbol '" + name + "'");
    }
    return;
  }
  if (schematic_.count(name)) {
    throw std::invalid_argument("'" + name + "' is already a schematic variable");
  }
  symbols_.emplace(name, std::move(info));
}

void Signature::declare_schematic(const std::string& name) {
  if (symbols_.count(name)) {
    throw std::invalid_argument("'" + name + "' is already a function or predicate symbol");
  }
  schematic_.insert(name);
}

void Signature::mark_declared(const std::string& name) {
  if (std::find(order_.begin(), order_.end(), name) == order_.end()) order_.push_back(name);
}

const SymbolInfo* Signature::lookup(const std::string& name) const {
  auto it = symbols_.find(name);
  return it == symbols_.end() ? nullptr : &it->second;
}

bool Signature::is_defined(const std::string& name) const {
  const SymbolInfo* s = lookup(name);
  return s != nullptr && s->defined;
}

bool has_defined_symbol(const Expr& e, const Signature& sig) {
  if (e->kind() == Kind::App && sig.is_defined(e->name())) return true;
  for (const auto& a : e->args()) {
    if (has_defined_symbol(a, sig)) return true;
  }
  return false;
}

}  // namespace silk
