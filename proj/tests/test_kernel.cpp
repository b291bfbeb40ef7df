#include "doctest.h"
#include "silk/kernel.hpp"
#include "support.hpp"

using namespace silk;

namespace {

struct Fixture {
  Language lang = testing::gen_language();
  LinkEnv env;

  Sequent S(const std::string& s) { return parse_sequent(s, lang); }
  Expr F(const std::string& s) { return parse_formula(s, lang); }
  Expr T(const std::string& s) { return parse_expr(s, lang, Sort::Ind); }

  Proof ax(const std::string& f) { return make_ax(F(f)); }
  Proof un(Rule r, const std::string& concl, Proof p, RuleData d = {}) {
    return make_unary(r, S(concl), std::move(p), std::move(d));
  }
  Proof bin(Rule r, const std::string& concl, Proof a, Proof b) {
    return make_binary(r, S(concl), std::move(a), std::move(b));
  }
  CheckReport check(const Proof& p, Mode m = Mode::LK) {
    CheckOptions o;
    o.mode = m;
    return check_proof(p, lang.theory, env, o);
  }
  bool ok(const Proof& p, Mode m = Mode::LK) { return check(p, m).accepted(); }
  RuleData term(const std::string& t) {
    RuleData d;
    d.term = T(t);
    return d;
  }
  RuleData eigen(const std::string& a) {
    RuleData d;
    d.eigen = a;
    return d;
  }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "axioms") {
  CHECK(ok(ax("P(a)")));
  Proof bad;
  bad.conclusion = S("P(a) |- P(b)");
  bad.rule = Rule::Ax;
  CHECK_FALSE(ok(bad));
  bad.conclusion = S("A, B |- A");
  CHECK_FALSE(ok(bad));
}

TEST_CASE_FIXTURE(Fixture, "structural rules") {
  CHECK(ok(un(Rule::WeakL, "B, A |- A", ax("A"))));
  CHECK(ok(un(Rule::WeakR, "A |- A, B", ax("A"))));
  CHECK_FALSE(ok(un(Rule::WeakL, "B, B, A |- A", ax("A"))));
  CHECK_FALSE(ok(un(Rule::WeakL, "A |- A, B", ax("A"))));
  Proof w = un(Rule::WeakL, "A, A |- A", ax("A"));
  CHECK(ok(un(Rule::ContrL, "A |- A", w)));
  Proof wr = un(Rule::WeakR, "A |- A, A", ax("A"));
  CHECK(ok(un(Rule::ContrR, "A |- A", wr)));
  CHECK_FALSE(ok(un(Rule::ContrL, "A |- A", ax("A"))));
}

TEST_CASE_FIXTURE(Fixture, "propositional rules") {
  // A, B |- A /\ B
  CHECK(ok(bin(Rule::AndR, "A, B |- A /\\ B", ax("A"), ax("B"))));
  CHECK_FALSE(ok(bin(Rule::AndR, "A, B |- B /\\ A", ax("A"), ax("B"))));
  // A /\ B |- A
  Proof wl = un(Rule::WeakL, "A, B |- A", ax("A"));
  CHECK(ok(un(Rule::AndL, "A /\\ B |- A", wl)));
  CHECK_FALSE(ok(un(Rule::AndL, "B /\\ A |- B", wl)));
  // A \/ B |- A, B
  CHECK(ok(bin(Rule::OrL, "A \\/ B |- A, B", ax("A"), ax("B"))));
  Proof wr = un(Rule::WeakR, "A |- A, B", ax("A"));
  CHECK(ok(un(Rule::OrR, "A |- A \\/ B", wr)));
  // A, A -> B |- B
  CHECK(ok(bin(Rule::ImpL, "A, A -> B |- B", ax("A"), ax("B"))));
  CHECK_FALSE(ok(bin(Rule::ImpL, "B, B -> A |- B", ax("A"), ax("B"))));
  CHECK(ok(un(Rule::ImpR, "|- A -> A", ax("A"))));
  CHECK_FALSE(ok(un(Rule::ImpR, "|- A -> B", ax("A"))));
  CHECK(ok(un(Rule::NegR, "|- A, ~A", ax("A"))));
  CHECK(ok(un(Rule::NegL, "A, ~A |- ", ax("A"))));
  CHECK_FALSE(ok(un(Rule::NegL, "~A |- A", ax("A"))));
  CHECK(ok(bin(Rule::Cut, "A |- A", ax("A"), ax("A"))));
  CHECK_FALSE(ok(bin(Rule::Cut, "A |- B", ax("A"), ax("B"))));
}

TEST_CASE_FIXTURE(Fixture, "quantifier rules") {
  CHECK(ok(un(Rule::ForallL, "forall x. P(x) |- P(f(c))", ax("P(f(c))"), term("f(c)"))));
  CHECK_FALSE(ok(un(Rule::ForallL, "forall x. P(x) |- P(f(c))", ax("P(f(c))"), term("c"))));
  CHECK_FALSE(ok(un(Rule::ForallL, "forall x. P(x) |- P(f(c))", ax("P(f(c))"))));
  CHECK(ok(un(Rule::ExistsR, "P(c) |- exists x. P(x)", ax("P(c)"), term("c"))));
  CHECK(ok(un(Rule::ForallR, "P(a) |- forall x. P(x)",
              un(Rule::WeakL, "P(a), P(b) |- P(b)", ax("P(b)")), eigen("b"))) == false);
  // Eigenvariable condition.
  Proof inner = un(Rule::ForallL, "forall x. P(x) |- P(b)", ax("P(b)"), term("b"));
  CHECK(ok(un(Rule::ForallR, "forall x. P(x) |- forall y. P(y)", inner, eigen("b"))));
  Proof leak = un(Rule::WeakL, "P(b), forall x. P(x) |- P(b)", inner);
  auto rep = check(un(Rule::ForallR, "P(b), forall x. P(x) |- forall y. P(y)", leak, eigen("b")));
  REQUIRE_FALSE(rep.accepted());
  CHECK(rep.failures[0].path == "/");
  CHECK(rep.failures[0].message.find("eigenvariable") != std::string::npos);
  CHECK(ok(un(Rule::ExistsL, "exists x. P(x) |- exists y. P(y)",
              un(Rule::ExistsR, "P(b) |- exists y. P(y)", ax("P(b)"), term("b")), eigen("b"))));
}

TEST_CASE_FIXTURE(Fixture, "failure paths name the node") {
  Proof bad;
  bad.conclusion = S("A |- B");
  bad.rule = Rule::Ax;
  Proof p = bin(Rule::AndR, "A, A |- A /\\ B", ax("A"), bad);
  auto rep = check(p);
  REQUIRE(rep.failures.size() >= 1);
  bool found = false;
  for (const auto& f : rep.failures) found = found || (f.path == "/1" && f.rule == "Ax");
  CHECK(found);
}

TEST_CASE_FIXTURE(Fixture, "E inferences") {
  // P(fhat^2(c)) from P(f(f(c)))
  Proof p = un(Rule::ERule, "P(fhat^2(c)) |- P(f(f(c)))", ax("P(f(f(c)))"));
  CHECK_FALSE(ok(p, Mode::LK));
  CHECK(ok(p, Mode::LKE));
  CHECK(ok(p, Mode::LKS));
  auto rep = check(un(Rule::ERule, "P(f(f(c))) |- P(fhat^3(c))", ax("P(f(f(c)))")), Mode::LKE);
  REQUIRE_FALSE(rep.accepted());
  CHECK(rep.failures[0].message.find("not E-equivalent") != std::string::npos);
  // Witness positions.
  RuleData d;
  d.at = std::vector<std::size_t>{0};
  CHECK(ok(un(Rule::ERule, "P(fhat^2(c)) |- P(f(f(c)))", ax("P(f(f(c)))"), d), Mode::LKE));
  d.at = std::vector<std::size_t>{1};
  CHECK_FALSE(ok(un(Rule::ERule, "P(fhat^2(c)) |- P(f(f(c)))", ax("P(f(f(c)))"), d), Mode::LKE));
  // Two formulas at once is not one E step, unless lenient.
  Proof two = un(Rule::ERule, "P(fhat^1(c)) |- P(fhat^1(c))", ax("P(f(c))"));
  CHECK_FALSE(ok(two, Mode::LKE));
  CheckOptions o;
  o.mode = Mode::LKE;
  o.lenient_erule = true;
  CHECK(check_proof(two, lang.theory, env, o).accepted());
}

TEST_CASE_FIXTURE(Fixture, "links") {
  env["phi"] = {S("P(fhat^n(alpha)) |- P(fhat^n(alpha))"), {"alpha"}};
  LinkData l{"phi", param(), {T("c")}};
  Proof good = make_link(S("P(fhat^n(c)) |- P(fhat^n(c))"), l);
  CHECK(ok(good, Mode::LKS));
  CHECK_FALSE(ok(good, Mode::LKE));
  CHECK_FALSE(ok(good, Mode::LK));
  Proof wrong = make_link(S("P(fhat^n(d)) |- P(fhat^n(d))"), l);
  CHECK_FALSE(ok(wrong, Mode::LKS));
  LinkData unknown{"psi", param(), {T("c")}};
  CHECK_FALSE(ok(make_link(S("A |- A"), unknown), Mode::LKS));
  LinkData arity{"phi", param(), {}};
  CHECK_FALSE(ok(make_link(S("P(fhat^n(alpha)) |- P(fhat^n(alpha))"), arity), Mode::LKS));
  // Parameters outside the allowed set.
  CheckOptions o;
  o.mode = Mode::LKS;
  o.allowed_link_params = {};
  CHECK_FALSE(check_proof(good, lang.theory, env, o).accepted());
  LinkData num{"phi", numeral(3), {T("c")}};
  CHECK(check_proof(make_link(S("P(fhat^3(c)) |- P(fhat^3(c))"), num), lang.theory, env, o).accepted());
}

TEST_CASE_FIXTURE(Fixture, "inference counts") {
  Proof p = un(Rule::ImpR, "|- A -> A", ax("A"));
  p = un(Rule::WeakL, "B |- A -> A", p);
  auto rep = check(p);
  CHECK(rep.accepted());
  CHECK(rep.counts[Rule::ImpR] == 1);
  CHECK(rep.counts[Rule::WeakL] == 1);
  CHECK(rep.counts.count(Rule::Ax) == 0);
  CHECK(total_inferences(rep.counts) == 2);
}

TEST_CASE("corpus proof files") {
  for (const char* name : {"pi_shat.lkp", "nu_shat.lkp", "swap.lkp", "bigor.lkp"}) {
    INFO(name);
    LkFile f = testing::load_lk(name);
    CheckOptions o;
    o.mode = f.mode;
    o.allowed_link_params = f.allowed;
    CHECK(check_proof(f.proof, f.lang.theory, f.targets, o).accepted());
  }
}

// --- random proofs ----------------------------------------------------------


TEST_CASE("property: LK acceptance implies LKE implies LKS (400 cases)") {
  Language lang = testing::gen_language();
  testing::ProofGen pg(424242);
  LinkEnv env;
  int lk = 0, lke_only = 0, rejected = 0;
  for (int i = 0; i < 400; ++i) {
    const bool use_e = i % 2 == 1;
    Proof p = pg.build(2 + pg.g.pick(4), use_e);
    if (i % 4 == 3) p = pg.mutate(std::move(p));
    auto run = [&](Mode m) {
      CheckOptions o;
      o.mode = m;
      return check_proof(p, lang.theory, env, o).accepted();
    };
    const bool a = run(Mode::LK), b = run(Mode::LKE), c = run(Mode::LKS);
    CHECK((!a || b));
    CHECK((!b || c));
    if (a) ++lk;
    else if (b) ++lke_only;
    else ++rejected;
    // Unmutated proofs are valid in LKE; those without E steps in LK.
    if (i % 4 != 3) {
      if (!b) {
        CheckOptions o;
        o.mode = Mode::LKE;
        auto r = check_proof(p, lang.theory, env, o);
        MESSAGE(r.failures[0].path << " " << r.failures[0].rule << " " << r.failures[0].message << "\n" << print_proof(p));
      }
      CHECK(b);
      if (!use_e) CHECK(a);
    }
  }
  // The generator exercises all three outcomes.
  CHECK(lk > 50);
  CHECK(lke_only > 20);
  CHECK(rejected > 20);
}
