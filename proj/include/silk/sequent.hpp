#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "silk/expr.hpp"

namespace silk {

using Formulas = std::vector<Expr>;

// Delta |- Pi as a pair of multisets. The stored order is only used for
// printing; equality ignores it.
struct Sequent {
  Formulas ante;
  Formulas succ;
};

// Multiset equality of both sides (order-insensitive, multiplicity-sensitive).
bool sequent_eq(const Sequent& a, const Sequent& b);
bool multiset_eq(const Formulas& a, const Formulas& b);
// a minus b as multisets, keeping a's order.
Formulas multiset_minus(const Formulas& a, const Formulas& b);
Formulas multiset_union(const Formulas& a, const Formulas& b);
bool multiset_contains(const Formulas& a, const Expr& f);
// Remove one occurrence of f; returns false when absent.
bool multiset_remove(Formulas& a, const Expr& f);

std::set<std::string> free_vars(const Sequent& s, Sort sort);
std::set<std::string> free_params(const Sequent& s);

// A stepcase sequent with its instance annotation (|-{e}).
struct AnnotatedSequent {
  Sequent sequent;
  Expr annotation;
};

// Simultaneous, capture-avoiding substitution. Parameter and numeric
// variables map to numeric expressions, individual variables to terms, and
// schematic variables to schematic variable names (renaming).
class Substitution {
 public:
  Substitution() = default;

  Substitution& bind_param(Expr e) { return bind_nat(kParam, std::move(e)); }
  Substitution& bind_nat(const std::string& var, Expr e);
  Substitution& bind_ind(const std::string& var, Expr t);
  Substitution& rename_schematic(const std::string& from, const std::string& to);

  bool empty() const { return nat_.empty() && ind_.empty() && schem_.empty(); }

  // Throws SortMismatch when a replacement has the wrong sort.
  Expr apply(const Expr& e) const;
  Sequent apply(const Sequent& s) const;
  Formulas apply(const Formulas& fs) const;

  const std::map<std::string, Expr>& nat_map() const { return nat_; }
  const std::map<std::string, Expr>& ind_map() const { return ind_; }

 private:
  std::map<std::string, Expr> nat_;
  std::map<std::string, Expr> ind_;
  std::map<std::string, std::string> schem_;
};

// [n\e] applied to x.
Expr subst_param(const Expr& x, const Expr& e);
Sequent subst_param(const Sequent& s, const Expr& e);

}  // namespace silk
