#include "doctest.h"
#include "silk/translate.hpp"
#include "support.hpp"

using namespace silk;

namespace {

std::set<Rule> rules_of(const Proof& p) {
  std::set<Rule> out;
  for_each_node(p, [&](const Proof& n) { out.insert(n.rule); });
  return out;
}

}  // namespace

TEST_CASE("ppsnf of the interleaved script") {
  SilkScript s = testing::load_script("silk_interleaved.slk");
  ScriptResult before = check_script(s);
  REQUIRE(before.verdict == Verdict::Proof);
  SilkScript p = to_ppsnf(s);
  ScriptResult after = check_script(p);
  CHECK(after.verdict == Verdict::Proof);
  CHECK(collection_eq(before.collection, after.collection));
  // Group 2 closed first, so all of its steps come first.
  REQUIRE(p.steps.size() == s.steps.size());
  std::size_t i = 0;
  while (i < p.steps.size() && p.steps[i].group == "2") ++i;
  CHECK(i == 5);
  for (; i < p.steps.size(); ++i) CHECK(p.steps[i].group == "1");
}

TEST_CASE("ppsnf is idempotent and sound on the corpus") {
  for (const auto& name : testing::silk_corpus()) {
    INFO(name);
    SilkScript s = testing::load_script(name);
    SilkScript once = to_ppsnf(s);
    SilkScript twice = to_ppsnf(once);
    REQUIRE(once.steps.size() == twice.steps.size());
    for (std::size_t i = 0; i < once.steps.size(); ++i) CHECK(step_eq(once.steps[i], twice.steps[i]));
    CHECK(print_silk_script(once) == print_silk_script(twice));
    ScriptResult a = check_script(s), b = check_script(once);
    CHECK(b.verdict == Verdict::Proof);
    CHECK(collection_eq(a.collection, b.collection));
  }
}

TEST_CASE("ppsnf refuses derivations") {
  std::string text = silk::read_file(testing::corpus("silk_fhat.slk"));
  text = text.substr(0, text.find("clsc"));
  SilkScript s = parse_silk_script(text, SILK_CORPUS_DIR);
  CHECK_THROWS_AS(to_ppsnf(s), NotAProof);
  CHECK_THROWS_AS(silk_to_schema(s), NotAProof);
}

TEST_CASE("translation of the iterated f proof") {
  SilkScript s = testing::load_script("silk_fhat.slk");
  ProofSchema sch = silk_to_schema(s);
  REQUIRE(sch.components.size() == 1);
  const SchemaComponent& c = sch.components[0];
  CHECK(check_schema(sch, s.lang.theory).accepted());
  CHECK(rules_of(c.base) == std::set<Rule>{Rule::Ax, Rule::ERule, Rule::WeakL});
  CHECK(rules_of(*c.step) ==
        std::set<Rule>{Rule::Link, Rule::Ax, Rule::ImpL, Rule::ForallL, Rule::ContrL, Rule::ERule});
  CHECK(sequent_eq(c.base.conclusion, parse_sequent("Delta |- P(fhat^0(0))", s.lang)));
  CHECK(sequent_eq(c.step->conclusion, parse_sequent("Delta |- P(fhat^s(n)(0))", s.lang)));
}

TEST_CASE("translation of the exponential proof") {
  SilkScript s = testing::load_script("silk_exp.slk");
  ProofSchema sch = silk_to_schema(s);
  REQUIRE(sch.components.size() == 2);
  auto rep = check_schema(sch, s.lang.theory);
  CHECK(rep.accepted());
  // The leading group comes first and forward-links to the other one.
  const SchemaComponent& c0 = sch.components[0];
  const SchemaComponent& c1 = sch.components[1];
  CHECK(c0.name == "2");
  CHECK(c1.name == "1");
  REQUIRE(c0.step.has_value());
  bool forward = false;
  for_each_node(*c0.step, [&](const Proof& n) {
    if (n.rule == Rule::Link) {
      forward = n.data.link->target == "1" &&
                equal(n.data.link->param, parse_expr("2^s(n)", s.lang, Sort::Nat));
    }
  });
  CHECK(forward);
}

TEST_CASE("component end-sequents are the bracketed group sequents") {
  for (const auto& name : testing::silk_corpus()) {
    INFO(name);
    SilkScript s = testing::load_script(name);
    ScriptResult r = check_script(s);
    ProofSchema sch = silk_to_schema(s);
    CHECK(check_schema(sch, s.lang.theory).accepted());
    for (const auto& c : sch.components) {
      const ComponentGroup* g = r.collection.find(c.name);
      REQUIRE(g != nullptr);
      const ComponentPair& p = g->pairs.front();
      CHECK(sequent_eq(c.base.conclusion, p.base.seq));
      if (c.step) {
        REQUIRE(p.step.kind == StepKind::ClosedSeq);
        CHECK(sequent_eq(c.step->conclusion, p.step.seq));
      } else {
        CHECK(p.step.kind == StepKind::EmptyClosed);
      }
    }
  }
}

TEST_CASE("soundness: translated corpus proofs evaluate and check for alpha 0..10") {
  for (const auto& name : testing::silk_corpus()) {
    SilkScript s = testing::load_script(name);
    ProofSchema sch = silk_to_schema(s);
    for (std::uint64_t alpha = 0; alpha <= 10; ++alpha) {
      INFO(name << " at " << alpha);
      EvalCheck ec = evaluate_and_check(sch, alpha, s.lang.theory);
      CHECK(ec.report.accepted());
    }
  }
}

TEST_CASE("interpretation instances match the unrolled end-sequents") {
  for (const auto& name : testing::silk_corpus()) {
    SilkScript s = testing::load_script(name);
    ScriptResult r = check_script(s);
    const ComponentGroup& lead = leading_group(r.collection);
    ProofSchema sch = silk_to_schema(s);
    Normalizer nz(s.lang.theory);
    for (std::uint64_t alpha = 0; alpha <= 8; ++alpha) {
      INFO(name << " at " << alpha);
      Sequent inst = subst_param(lead.pattern->seq, numeral(alpha));
      UnrollTrace t = evaluate(sch, alpha, s.lang.theory);
      CHECK(sequent_eq(nz.normalize(inst), t.proof.conclusion));
      CHECK(equal(normalize(sequent_formula(inst), s.lang.theory).value,
                  normalize(sequent_formula(t.proof.conclusion), s.lang.theory).value));
    }
  }
}

TEST_CASE("sequent formulas") {
  Language lang = testing::gen_language();
  auto S = [&](const std::string& t) { return parse_sequent(t, lang); };
  auto F = [&](const std::string& t) { return parse_formula(t, lang); };
  CHECK(equal(sequent_formula(S("|- B")), F("B")));
  CHECK(equal(sequent_formula(S("A |- B")), F("A -> B")));
  CHECK(equal(sequent_formula(S("A, B |- A, B")), F("A /\\ B -> A \\/ B")));
  CHECK(equal(sequent_formula(S("A |- ")), F("A -> false")));
}

TEST_CASE("interpretation of the iterated f proof") {
  SilkScript s = testing::load_script("silk_fhat.slk");
  ScriptResult r = check_script(s);
  Expr got = interpret(r.collection);
  const std::string d = "(P(0) /\\ forall y.(P(y) -> P(f(y))))";
  const std::string want_text = "((" + d + " -> P(fhat^0(0))) /\\ forall x:nat. ((" + d + " -> P(fhat^x(0))) -> (" + d +
                                " -> P(fhat^(x + 1)(0))))) -> (" + d + " -> forall m:nat. P(fhat^m(0)))";
  Expr want = parse_formula(want_text, s.lang, true);
  INFO(to_string(got));
  CHECK(equal(got, want));
  // The printed form parses back to the same formula.
  CHECK(equal(parse_formula(to_string(got), s.lang, true), got));
}

TEST_CASE("interpretation of the exponential proof") {
  SilkScript s = testing::load_script("silk_exp.slk");
  ScriptResult r = check_script(s);
  Expr got = interpret(r.collection);
  const std::string d = "(P(0) /\\ forall y.(P(y) -> P(f(y))))";
  // Leading group first, then the fhat group.
  const std::string want_text =
      "((" + d + " -> P(fhat^(2^0)(0))) /\\ (" + d + " -> P(fhat^0(0))) /\\ forall x:nat. (((" + d +
      " -> P(fhat^(2^x)(0))) -> (" + d + " -> P(fhat^(2^(x + 1))(0)))) /\\ ((" + d + " -> P(fhat^x(0))) -> (" + d +
      " -> P(fhat^(x + 1)(0)))))) -> (" + d + " -> forall m:nat. P(fhat^(2^m)(0)))";
  Expr want = parse_formula(want_text, s.lang, true);
  INFO(to_string(got));
  CHECK(equal(got, want));
}

TEST_CASE("interpretation without induction and with free variables") {
  SilkScript lke = parse_silk_script("theory \"fhat.thy\"\nax1r \"A |- A\"\nclbc\ncllke\n", SILK_CORPUS_DIR);
  ScriptResult r = check_script(lke);
  REQUIRE(r.verdict == Verdict::Proof);
  CHECK(equal(interpret(r.collection), parse_formula("A -> A", lke.lang)));
  ProofSchema sch = collection_to_schema(r.collection);
  REQUIRE(sch.components.size() == 1);
  CHECK_FALSE(sch.components[0].step.has_value());

  SilkScript sh = testing::load_script("silk_shat.slk");
  ScriptResult rs = check_script(sh);
  Expr f = interpret(rs.collection);
  CHECK(f->kind() == Kind::Forall);
  CHECK(free_vars(f, Sort::Ind).empty());
}
