#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace silk {

// Two-sorted language: omega (numerals and the free parameter), iota
// (individuals), plus formulas.
enum class Sort : std::uint8_t { Nat, Ind, Prop };

const char* sort_name(Sort s);

enum class Kind : std::uint8_t {
  Zero,       // 0 : nat
  Succ,       // s(e) : nat
  Add,        // built-in e + e : nat
  Var,        // free variable (nat: the parameter or a rule variable; ind: individual)
  SchemVar,   // x[e] : ind, schematic variable of type nat -> ind
  BVar,       // bound variable, de Bruijn index
  App,        // function or predicate application (uninterpreted or defined)
  True,
  False,
  Not,
  And,
  Or,
  Imp,
  Forall,
  Exists,
};

class Node;
using Expr = std::shared_ptr<const Node>;

// Immutable expression node. Binder names are hints only: they take no part
// in equality or hashing, so structural equality is alpha-equivalence.
class Node {
 public:
  Kind kind() const { return kind_; }
  Sort sort() const { return sort_; }
  const std::string& name() const { return name_; }
  std::uint32_t index() const { return index_; }
  const std::vector<Expr>& args() const { return args_; }
  const Expr& arg(std::size_t i) const { return args_[i]; }
  std::size_t hash() const { return hash_; }
  std::size_t size() const { return size_; }
  // Sort of the bound variable for Forall/Exists.
  Sort binder_sort() const { return binder_sort_; }
  // Largest loose de Bruijn index + 1 (0 when closed).
  std::uint32_t loose_bound() const { return loose_; }
  // True when a free variable (Var or SchemVar) occurs in the expression.
  bool has_vars() const { return has_vars_; }

  static Expr make(Kind k, Sort s, std::string name, std::vector<Expr> args,
                   std::uint32_t index = 0, Sort binder_sort = Sort::Ind);

 private:
  Node() = default;

  Kind kind_{};
  Sort sort_{};
  Sort binder_sort_{Sort::Ind};
  std::uint32_t index_ = 0;
  std::uint32_t loose_ = 0;
  bool has_vars_ = false;
  std::string name_;
  std::vector<Expr> args_;
  std::size_t hash_ = 0;
  std::size_t size_ = 1;
};

bool equal(const Expr& a, const Expr& b);

struct ExprEq {
  bool operator()(const Expr& a, const Expr& b) const { return equal(a, b); }
};
struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e->hash(); }
};

// Thrown when an operation is applied to an expression of the wrong sort.
class SortMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- constructors -------------------------------------------------------

Expr zero();
Expr succ(Expr e);
Expr add(Expr a, Expr b);
Expr numeral(std::uint64_t k);
Expr param();  // the free parameter n
Expr nat_var(std::string name);
Expr ind_var(std::string name);
Expr schem_var(std::string name, Expr index);
Expr bvar(std::uint32_t index, Sort s);
Expr app(std::string symbol, std::vector<Expr> args, Sort result);
Expr atom(std::string pred, std::vector<Expr> args);
Expr top();
Expr bottom();
Expr neg(Expr a);
Expr conj(Expr a, Expr b);
Expr disj(Expr a, Expr b);
Expr imp(Expr a, Expr b);
// Build a quantifier by abstracting the free variable `var` of sort `s`.
Expr forall(const std::string& var, Sort s, const Expr& body);
Expr exists(const std::string& var, Sort s, const Expr& body);
// Quantifier over an already-abstracted body.
Expr quant(Kind k, std::string hint, Sort s, Expr body);

inline constexpr const char* kParam = "n";

// --- queries ------------------------------------------------------------

bool is_formula(const Expr& e);
bool is_numeral(const Expr& e);
// Value of a numeral; nullopt when e is not a numeral.
std::optional<std::uint64_t> numeral_value(const Expr& e);

// Free variables of the given sort (nat variables include the parameter).
std::set<std::string> free_vars(const Expr& e, Sort s);
// Parameter symbols occurring in e (always a subset of {n} in this fragment).
std::set<std::string> free_params(const Expr& e);
bool occurs_free(const Expr& e, const std::string& var);

// Reflexive subterm relation on expressions.
bool is_subterm(const Expr& needle, const Expr& hay);

// Replace loose BVar(0) of `body` (at binder depth 0) by the closed term t.
Expr instantiate(const Expr& body, const Expr& t);
// Replace free variable `var` (of sort s) by loose bound variables.
Expr abstract(const Expr& body, const std::string& var, Sort s);

// Subexpression at a child-index path; nullopt when the path is invalid.
std::optional<Expr> subexpr_at(const Expr& e, const std::vector<std::size_t>& path);
// Rebuild e with the subexpression at `path` replaced.
Expr replace_at(const Expr& e, const std::vector<std::size_t>& path, const Expr& by);
// Deepest path whose subtrees contain every difference between a and b.
// nullopt when a and b are equal.
std::optional<std::vector<std::size_t>> difference_path(const Expr& a, const Expr& b);

// Rebuild a node with new children, keeping everything else.
Expr with_args(const Expr& e, std::vector<Expr> args);

}  // namespace silk
