#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "silk/expr.hpp"

namespace silk {

struct SymbolInfo {
  std::vector<Sort> arg_sorts;
  Sort result = Sort::Ind;  // Prop for predicates
  bool defined = false;     // given meaning only by rewrite rules
};

// Symbol partition of the language. Uninterpreted symbols that are used
// without a declaration are added on first use (arguments of sort i).
class Signature {
 public:
  // Throws std::invalid_argument on a clash with an existing declaration.
  void declare(const std::string& name, SymbolInfo info);
  void declare_schematic(const std::string& name);

  const SymbolInfo* lookup(const std::string& name) const;
  bool is_defined(const std::string& name) const;
  bool is_schematic(const std::string& name) const { return schematic_.count(name) > 0; }

  const std::map<std::string, SymbolInfo>& symbols() const { return symbols_; }
  const std::set<std::string>& schematic() const { return schematic_; }
  // Names explicitly declared (as opposed to added on first use).
  const std::vector<std::string>& declared_order() const { return order_; }
  void mark_declared(const std::string& name);

 private:
  std::map<std::string, SymbolInfo> symbols_;
  std::set<std::string> schematic_;
  std::vector<std::string> order_;
};

// True when e contains an application of a defined symbol.
bool has_defined_symbol(const Expr& e, const Signature& sig);

}  // namespace silk
