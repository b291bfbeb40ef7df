#include "doctest.h"
#include "support.hpp"

using namespace silk;

TEST_CASE("numerals and the parameter") {
  CHECK(numeral_value(numeral(0)) == 0u);
  CHECK(numeral_value(numeral(5)) == 5u);
  CHECK(numeral_value(succ(succ(zero()))) == 2u);
  CHECK_FALSE(numeral_value(param()).has_value());
  CHECK_FALSE(numeral_value(succ(param())).has_value());
  CHECK(free_params(add(param(), numeral(1))) == std::set<std::string>{"n"});
  CHECK(free_params(numeral(3)).empty());
}

TEST_CASE("sort errors are raised at construction") {
  CHECK_THROWS_AS(succ(ind_var("a")), SortMismatch);
  CHECK_THROWS_AS(conj(ind_var("a"), top()), SortMismatch);
  CHECK_THROWS_AS(atom("P", {top()}), SortMismatch);
}

TEST_CASE("binder names do not matter for equality") {
  Expr p = atom("P", {ind_var("x")});
  Expr a = forall("x", Sort::Ind, p);
  Expr b = forall("y", Sort::Ind, atom("P", {ind_var("y")}));
  CHECK(equal(a, b));
  CHECK(a->hash() == b->hash());
  CHECK_FALSE(equal(a, forall("x", Sort::Ind, atom("P", {ind_var("z")}))));
}

TEST_CASE("instantiate and abstract") {
  Expr body = imp(atom("P", {ind_var("x")}), atom("P", {app("f", {ind_var("x")}, Sort::Ind)}));
  Expr q = forall("x", Sort::Ind, body);
  Expr t = app("c", {}, Sort::Ind);
  Expr inst = instantiate(q->arg(0), t);
  CHECK(equal(inst, imp(atom("P", {t}), atom("P", {app("f", {t}, Sort::Ind)}))));
  CHECK(free_vars(q, Sort::Ind).empty());
  CHECK(free_vars(body, Sort::Ind) == std::set<std::string>{"x"});
}

TEST_CASE("capture-avoiding substitution") {
  // forall y. Q(x, y) with x := y must not capture.
  Expr q = forall("y", Sort::Ind, atom("Q", {ind_var("x"), ind_var("y")}));
  Substitution s;
  s.bind_ind("x", ind_var("y"));
  Expr r = s.apply(q);
  CHECK(free_vars(r, Sort::Ind) == std::set<std::string>{"y"});
  CHECK_FALSE(equal(r, forall("y", Sort::Ind, atom("Q", {ind_var("y"), ind_var("y")}))));
  Substitution p;
  p.bind_param(numeral(2));
  CHECK(equal(p.apply(app("fhat", {param(), ind_var("x")}, Sort::Ind)),
              app("fhat", {numeral(2), ind_var("x")}, Sort::Ind)));
}

TEST_CASE("difference path") {
  Expr a = atom("P", {app("f", {ind_var("x")}, Sort::Ind)});
  Expr b = atom("P", {app("f", {ind_var("y")}, Sort::Ind)});
  auto d = difference_path(a, b);
  REQUIRE(d.has_value());
  CHECK(*d == std::vector<std::size_t>{0, 0});
  CHECK_FALSE(difference_path(a, a).has_value());
  CHECK(equal(*subexpr_at(a, {0}), app("f", {ind_var("x")}, Sort::Ind)));
  CHECK(equal(replace_at(a, {0, 0}, ind_var("y")), b));
}

TEST_CASE("sequents are multisets") {
  Expr a = atom("A", {}), b = atom("B", {});
  CHECK(sequent_eq({{a, b}, {}}, {{b, a}, {}}));
  CHECK_FALSE(sequent_eq({{a, a}, {}}, {{a}, {}}));
  Formulas m = multiset_minus({a, a, b}, {a});
  CHECK(multiset_eq(m, {a, b}));
}

TEST_CASE("grammar: precedence and associativity") {
  Language lang = testing::gen_language();
  auto f = [&](const std::string& s) { return parse_formula(s, lang); };
  Expr A = atom("A", {}), B = atom("B", {});
  CHECK(equal(f("A -> B -> A"), imp(A, imp(B, A))));
  CHECK(equal(f("A /\\ B \\/ A"), disj(conj(A, B), A)));
  CHECK(equal(f("~A /\\ B"), conj(neg(A), B)));
  CHECK(equal(f("A \\/ B -> B"), imp(disj(A, B), B)));
  CHECK(equal(f("forall x. P(x) -> P(f(x))"),
              forall("x", Sort::Ind, imp(atom("P", {ind_var("x")}), atom("P", {app("f", {ind_var("x")}, Sort::Ind)})))));
}

TEST_CASE("grammar: fhat exponent sugar") {
  Language lang = testing::gen_language();
  Expr zero_i = app("0", {}, Sort::Ind);
  Expr a = parse_expr("fhat^n(0)", lang, Sort::Ind);
  CHECK(equal(a, app("fhat", {param(), zero_i}, Sort::Ind)));
  Expr b = parse_expr("fhat^s(n)(0)", lang, Sort::Ind);
  CHECK(equal(b, app("fhat", {succ(param()), zero_i}, Sort::Ind)));
  Expr c = parse_expr("fhat^(n + 1)(alpha)", lang, Sort::Ind);
  CHECK(equal(c, app("fhat", {add(param(), numeral(1)), ind_var("alpha")}, Sort::Ind)));
}

TEST_CASE("syntax errors carry positions") {
  Language lang = testing::gen_language();
  try {
    parse_sequent("A |- |- B", lang);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 6);
  }
  CHECK_THROWS_AS(parse_formula("P(", lang), ParseError);
  CHECK_THROWS_AS(parse_formula("A /\\", lang), ParseError);
  // Only n is a numeric variable outside rules.
  CHECK_THROWS_AS(parse_expr("fhat^m(0)", lang, Sort::Ind), ParseError);
  // Numeric quantifiers only in interpretation formulas.
  CHECK_THROWS_AS(parse_formula("forall x:nat. P(fhat^x(0))", lang), ParseError);
  CHECK_NOTHROW(parse_formula("forall x:nat. P(fhat^x(0))", lang, true));
}

TEST_CASE("theory files") {
  Language fhat = testing::load_theory("fhat.thy");
  CHECK(fhat.theory.rules.size() == 2);
  CHECK(validate_theory(fhat.theory).empty());
  CHECK(fhat.theory.sig.is_defined("fhat"));
  CHECK_FALSE(fhat.theory.sig.is_defined("f"));
  REQUIRE(fhat.let("Delta") != nullptr);
  CHECK(fhat.let("Delta")->formulas.size() == 2);

  Language shat = testing::load_theory("shat.thy");
  CHECK(shat.theory.rules.size() == 3);
  CHECK(validate_theory(shat.theory).empty());

  // Undeclared numeric function symbols are an error.
  CHECK_THROWS_AS(parse_theory("foo(0) == 1;"), ParseError);
  // A rule for an uninterpreted symbol is not admissible.
  Language bad = parse_theory("fun f : i -> i; f(x) == x;");
  CHECK_FALSE(validate_theory(bad.theory).empty());
}

TEST_CASE("printing") {
  Language lang = testing::gen_language();
  CHECK(to_string(numeral(3)) == "3");
  CHECK(to_string(succ(param())) == "s(n)");
  CHECK(to_string(parse_formula("(A -> B) -> A", lang)) == "(A -> B) -> A");
  CHECK(to_string(parse_formula("A -> B -> A", lang)) == "A -> B -> A");
  CHECK(to_string(parse_sequent("A, B |- A /\\ B", lang)) == "A, B |- A /\\ B");
  // A free x is not captured by a printed binder.
  Expr q = forall("y", Sort::Ind, atom("Q", {ind_var("x"), ind_var("y")}));
  Substitution s;
  s.bind_ind("x", ind_var("y"));
  Expr r = s.apply(q);
  CHECK(equal(parse_formula(to_string(r), lang), r));
}

TEST_CASE("property: print then parse is the identity on expressions (300 cases)") {
  Language lang = testing::gen_language();
  testing::Gen g(20261016);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Expr f = g.formula(1 + g.pick(4));
    const std::string text = to_string(f);
    Expr back = parse_formula(text, lang);
    INFO(text);
    CHECK(equal(back, f));
    CHECK(to_string(back) == text);
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("property: print then parse is the identity on sequents (250 cases)") {
  Language lang = testing::gen_language();
  testing::Gen g(7);
  for (int i = 0; i < 250; ++i) {
    Sequent s = g.sequent(2);
    const std::string text = to_string(s);
    INFO(text);
    Sequent back = parse_sequent(text, lang);
    CHECK(sequent_eq(back, s));
  }
}
