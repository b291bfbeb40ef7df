#pragma once

#include <random>
#include <string>
#include <vector>

#include "silk/format.hpp"
#include "silk/kernel.hpp"
#include "silk/parse.hpp"
#include "silk/print.hpp"

#ifndef SILK_CORPUS_DIR
#define SILK_CORPUS_DIR "corpus"
#endif

namespace testing {

inline std::string corpus(const std::string& name) { return std::string(SILK_CORPUS_DIR) + "/" + name; }

inline silk::SilkScript load_script(const std::string& name) {
  return silk::parse_silk_script(silk::read_file(corpus(name)), SILK_CORPUS_DIR);
}
inline silk::SchemaFile load_schema(const std::string& name) {
  return silk::parse_schema_file(silk::read_file(corpus(name)), SILK_CORPUS_DIR);
}
inline silk::LkFile load_lk(const std::string& name) {
  return silk::parse_lk_file(silk::read_file(corpus(name)), SILK_CORPUS_DIR);
}
inline silk::Language load_theory(const std::string& name) {
  return silk::parse_theory(silk::read_file(corpus(name)));
}

inline const std::vector<std::string>& silk_corpus() {
  static const std::vector<std::string> v{"silk_fhat.slk",   "silk_exp.slk",    "silk_shat.slk",
                                          "silk_lke.slk",    "silk_binary.slk", "silk_interleaved.slk"};
  return v;
}

// f applied k times, built directly.
inline silk::Expr iter_f(std::uint64_t k, silk::Expr x) {
  for (std::uint64_t i = 0; i < k; ++i) x = silk::app("f", {x}, silk::Sort::Ind);
  return x;
}

// Random expressions over the fhat/shat signatures. Every formula is closed
// except for free individual variables alpha, beta and the parameter n.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  silk::Expr nat(int depth) {
    using namespace silk;
    if (depth <= 0) {
      switch (pick(3)) {
        case 0: return zero();
        case 1: return param();
        default: return numeral(static_cast<std::uint64_t>(pick(4)));
      }
    }
    switch (pick(4)) {
      case 0: return succ(nat(depth - 1));
      case 1: return add(nat(depth - 1), nat(depth - 1));
      default: return nat(0);
    }
  }

  silk::Expr term(int depth) {
    using namespace silk;
    if (depth <= 0) {
      switch (pick(4)) {
        case 0: return app("0", {}, Sort::Ind);
        case 1: return ind_var("alpha");
        case 2: return ind_var("beta");
        default: return bound_.empty() ? ind_var("alpha") : ind_var(bound_[static_cast<std::size_t>(pick(static_cast<int>(bound_.size())))]);
      }
    }
    switch (pick(5)) {
      case 0: return app("f", {term(depth - 1)}, Sort::Ind);
      case 1: return app("fhat", {nat(depth - 1), term(depth - 1)}, Sort::Ind);
      case 2: return app("g", {term(depth - 1), term(depth - 1)}, Sort::Ind);
      default: return term(0);
    }
  }

  silk::Expr formula(int depth) {
    using namespace silk;
    if (depth <= 0) {
      switch (pick(5)) {
        case 0: return atom("P", {term(1)});
        case 1: return atom("Q", {term(1), term(0)});
        case 2: return atom("A", {});
        case 3: return atom("B", {});
        default: return atom("P", {term(0)});
      }
    }
    switch (pick(8)) {
      case 0: return neg(formula(depth - 1));
      case 1: return conj(formula(depth - 1), formula(depth - 1));
      case 2: return disj(formula(depth - 1), formula(depth - 1));
      case 3: return imp(formula(depth - 1), formula(depth - 1));
      case 4:
      case 5: {
        std::string v = "x" + std::to_string(bound_.size());
        bound_.push_back(v);
        Expr body = formula(depth - 1);
        bound_.pop_back();
        return pick(2) ? forall(v, Sort::Ind, body) : exists(v, Sort::Ind, body);
      }
      default: return formula(0);
    }
  }

  silk::Sequent sequent(int depth) {
    silk::Sequent s;
    const int a = pick(3), b = pick(3);
    for (int i = 0; i < a; ++i) s.ante.push_back(formula(depth));
    for (int i = 0; i < b; ++i) s.succ.push_back(formula(depth));
    return s;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<std::string> bound_;
};

// Language that knows the symbols Gen produces.
inline silk::Language gen_language() {
  return silk::parse_theory(
      "fun f : i -> i; fun g : i, i -> i; pred P : i; pred Q : i, i; pred A; pred B;\n"
      "defined fun fhat : nat, i -> i;\n"
      "fhat^0(x) == x;\n"
      "fhat^s(n)(x) == f(fhat^n(x));\n");
}

// Builds valid LK proofs bottom-up from axioms, with optional E steps that
// hide f behind fhat^1.
struct ProofGen {
  using Expr = silk::Expr;
  using Proof = silk::Proof;
  using Sequent = silk::Sequent;
  using Formulas = silk::Formulas;
  using Rule = silk::Rule;
  using Sort = silk::Sort;
  using Kind = silk::Kind;
  using RuleData = silk::RuleData;
  Gen g;
  explicit ProofGen(std::uint32_t seed) : g(seed) {}

  Expr small() { return g.formula(g.pick(2)); }

  Proof build(int depth, bool use_e) {
    if (depth <= 0) return make_ax(small());
    Proof p = build(depth - 1, use_e);
    Sequent s = p.conclusion;
    switch (g.pick(use_e ? 12 : 8)) {
      case 0: {
        s.ante.push_back(small());
        return make_unary(Rule::WeakL, s, std::move(p));
      }
      case 1: {
        s.succ.push_back(small());
        return make_unary(Rule::WeakR, s, std::move(p));
      }
      case 2: {
        Proof q = build(depth - 1, use_e);
        if (p.conclusion.succ.empty() || q.conclusion.succ.empty()) return p;
        Expr a = p.conclusion.succ.back(), b = q.conclusion.succ.back();
        Sequent c;
        c.ante = multiset_union(p.conclusion.ante, q.conclusion.ante);
        Formulas ls = p.conclusion.succ, rs = q.conclusion.succ;
        ls.pop_back();
        rs.pop_back();
        c.succ = multiset_union(ls, rs);
        c.succ.push_back(conj(a, b));
        return make_binary(Rule::AndR, c, std::move(p), std::move(q));
      }
      case 3: {
        if (s.ante.empty() || s.succ.empty()) return p;
        Expr a = s.ante.back(), b = s.succ.back();
        s.ante.pop_back();
        s.succ.pop_back();
        s.succ.push_back(imp(a, b));
        return make_unary(Rule::ImpR, s, std::move(p));
      }
      case 4: {
        if (s.ante.empty()) return p;
        Expr a = s.ante.back();
        s.ante.pop_back();
        s.succ.push_back(neg(a));
        return make_unary(Rule::NegR, s, std::move(p));
      }
      case 5: {
        if (s.succ.size() < 2) return p;
        Expr b = s.succ.back();
        s.succ.pop_back();
        Expr a = s.succ.back();
        s.succ.pop_back();
        s.succ.push_back(disj(a, b));
        return make_unary(Rule::OrR, s, std::move(p));
      }
      case 6: {
        // exists x. F[alpha := x] from F
        if (s.succ.empty()) return p;
        Expr a = s.succ.back();
        if (!occurs_free(a, "alpha")) return p;
        s.succ.pop_back();
        s.succ.push_back(exists("alpha", Sort::Ind, a));
        RuleData d;
        d.term = silk::ind_var("alpha");
        return make_unary(Rule::ExistsR, s, std::move(p), d);
      }
      case 7: {
        if (s.ante.empty()) return p;
        Expr a = s.ante.back();
        if (!occurs_free(a, "beta")) return p;
        s.ante.pop_back();
        s.ante.push_back(forall("beta", Sort::Ind, a));
        RuleData d;
        d.term = silk::ind_var("beta");
        return make_unary(Rule::ForallL, s, std::move(p), d);
      }
      default: {
        // t in a succedent atom becomes fhat^0(t).
        if (s.succ.empty()) return p;
        Expr a = s.succ.back();
        if (a->kind() != Kind::App || a->args().empty()) return p;
        Expr t = a->arg(0);
        if (t->sort() != Sort::Ind) return p;
        std::vector<Expr> args = a->args();
        args[0] = app("fhat", {silk::numeral(0), t}, Sort::Ind);
        s.succ.back() = with_args(a, args);
        return make_unary(Rule::ERule, s, std::move(p));
      }
    }
  }

  // Change one random sequent or rule.
  Proof mutate(Proof p) {
    std::vector<Proof*> nodes;
    std::vector<Proof*> stack{&p};
    while (!stack.empty()) {
      Proof* c = stack.back();
      stack.pop_back();
      nodes.push_back(c);
      for (auto& q : c->premises) stack.push_back(&q);
    }
    Proof* n = nodes[static_cast<std::size_t>(g.pick(static_cast<int>(nodes.size())))];
    switch (g.pick(3)) {
      case 0: n->conclusion.ante.push_back(small()); break;
      case 1:
        if (!n->conclusion.succ.empty()) n->conclusion.succ.back() = small();
        break;
      default:
        if (n->rule == Rule::WeakL) n->rule = Rule::WeakR;
        else if (n->rule == Rule::WeakR) n->rule = Rule::WeakL;
        else n->conclusion.succ.push_back(small());
    }
    return p;
  }
};


}  // namespace testing
