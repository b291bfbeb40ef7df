#include "silk/parse.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

#include "silk/print.hpp"

namespace silk {

// --- lexer ----------------------------------------------------------------

namespace {

const char* const kPuncts[] = {"|-{", "|-", "->", "/\\", "\\/", "==", "(", ")", "[", "]", "{", "}",
                               ",",   ";",  ".",  ":",   "=",   "+",  "^", "~"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(const std::string& text, int line, int col) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size()) {
        if (ident_char(text[j])) {
          ++j;
        } else if (text[j] == '-' && j + 1 < text.size() && std::isalpha(static_cast<unsigned char>(text[j + 1]))) {
          j += 2;
        } else {
          break;
        }
      }
      t.kind = Tok::Ident;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Number;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (c == '"') {
      std::string s;
      advance(1);
      bool closed = false;
      while (i < text.size()) {
        if (text[i] == '"') {
          closed = true;
          advance(1);
          break;
        }
        if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == '"') advance(1);
        s += text[i];
        advance(1);
      }
      if (!closed) throw ParseError(t.line, t.col, "unterminated string");
      t.kind = Tok::String;
      t.text = s;
      out.push_back(t);
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      std::size_t n = std::strlen(p);
      if (text.compare(i, n, p) == 0) {
        t.kind = Tok::Punct;
        t.text = p;
        advance(n);
        out.push_back(t);
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// --- token helpers ---------------------------------------------------------

Parser::Parser(const std::string& text, Language& lang, int line, int col)
    : toks_(tokenize(text, line, col)), lang_(lang) {}

const Token& Parser::peek(std::size_t k) const {
  std::size_t i = pos_ + k;
  return i < toks_.size() ? toks_[i] : toks_.back();
}

Token Parser::next() {
  Token t = peek();
  if (pos_ < toks_.size() - 1) ++pos_;
  return t;
}

bool Parser::at_punct(const char* p, std::size_t k) const {
  const Token& t = peek(k);
  return t.kind == Tok::Punct && t.text == p;
}

bool Parser::at_word(const char* w, std::size_t k) const {
  const Token& t = peek(k);
  return t.kind == Tok::Ident && t.text == w;
}

bool Parser::accept(const char* p) {
  if (!at_punct(p)) return false;
  next();
  return true;
}

bool Parser::accept_word(const char* w) {
  if (!at_word(w)) return false;
  next();
  return true;
}

namespace {
std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::String: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}
}  // namespace

void Parser::fail(const Token& at, const std::string& msg) const { throw ParseError(at.line, at.col, msg); }

void Parser::fail_at(const Raw& r, const std::string& msg) const { throw ParseError(r.line, r.col, msg); }

void Parser::expect(const char* p) {
  if (!accept(p)) fail(peek(), std::string("expected '") + p + "', found " + describe(peek()));
}

void Parser::expect_word(const char* w) {
  if (!accept_word(w)) fail(peek(), std::string("expected '") + w + "', found " + describe(peek()));
}

std::string Parser::ident() {
  if (peek().kind != Tok::Ident) fail(peek(), "expected an identifier, found " + describe(peek()));
  return next().text;
}

std::string Parser::name() {
  if (peek().kind != Tok::Ident && peek().kind != Tok::Number) {
    fail(peek(), "expected a name, found " + describe(peek()));
  }
  return next().text;
}

std::string Parser::string_lit() {
  if (peek().kind != Tok::String) fail(peek(), "expected a quoted string, found " + describe(peek()));
  return next().text;
}

std::uint64_t Parser::number() {
  if (peek().kind != Tok::Number) fail(peek(), "expected a number, found " + describe(peek()));
  Token t = next();
  try {
    return std::stoull(t.text);
  } catch (const std::exception&) {
    fail(t, "number out of range");
  }
}

void Parser::expect_end() {
  if (!at_end()) fail(peek(), "unexpected " + describe(peek()));
}

// --- raw expressions -------------------------------------------------------

namespace {
Raw make_raw(Raw::K k, const Token& at) {
  Raw r;
  r.k = k;
  r.line = at.line;
  r.col = at.col;
  return r;
}

Raw binary(Raw::K k, Raw a, Raw b) {
  Raw r;
  r.k = k;
  r.line = a.line;
  r.col = a.col;
  r.kids.push_back(std::move(a));
  r.kids.push_back(std::move(b));
  return r;
}
}  // namespace

Raw Parser::raw_expr() {
  if (at_word("forall") || at_word("exists")) return raw_quant();
  return raw_imp();
}

Raw Parser::raw_quant() {
  Token kw = next();
  Raw r = make_raw(kw.text == "forall" ? Raw::Forall : Raw::Exists, kw);
  r.name = ident();
  if (accept(":")) r.sort_tag = ident();
  expect(".");
  r.kids.push_back(raw_expr());
  return r;
}

Raw Parser::raw_imp() {
  Raw lhs = raw_or();
  if (accept("->")) return binary(Raw::Imp, std::move(lhs), raw_expr());
  return lhs;
}

Raw Parser::raw_or() {
  Raw acc = raw_and();
  while (accept("\\/")) acc = binary(Raw::Or, std::move(acc), raw_and());
  return acc;
}

Raw Parser::raw_and() {
  Raw acc = raw_not();
  while (accept("/\\")) acc = binary(Raw::And, std::move(acc), raw_not());
  return acc;
}

Raw Parser::raw_not() {
  if (at_punct("~")) {
    Token t = next();
    Raw r = make_raw(Raw::Not, t);
    r.kids.push_back(raw_not());
    return r;
  }
  if (at_word("forall") || at_word("exists")) return raw_quant();
  return raw_sum();
}

Raw Parser::raw_sum() {
  Raw acc = raw_pow();
  while (accept("+")) acc = binary(Raw::Add, std::move(acc), raw_pow());
  return acc;
}

Raw Parser::raw_pow() {
  Raw base = raw_atom();
  if (!at_punct("^")) return base;
  next();
  if (base.k == Raw::Ident) {
    // name^e(args) is name(e, args). In name^k(x) the exponent k is a bare
    // identifier unless another argument list follows its own.
    Raw exp;
    if (peek().kind == Tok::Ident && at_punct("(", 1) && !call_follows(pos_ + 1)) {
      Token id = next();
      exp = make_raw(Raw::Ident, id);
      exp.name = id.text;
    } else {
      exp = raw_atom();
    }
    if (at_punct("(")) {
      next();
      Raw call = base;
      call.k = Raw::Call;
      call.kids.push_back(std::move(exp));
      if (!at_punct(")")) {
        do {
          call.kids.push_back(raw_expr());
        } while (accept(","));
      }
      expect(")");
      return call;
    }
    if (at_punct("^")) {
      next();
      exp = binary(Raw::Pow, std::move(exp), raw_pow());
    }
    return binary(Raw::Pow, std::move(base), std::move(exp));
  }
  return binary(Raw::Pow, std::move(base), raw_pow());
}

// True when the parenthesised group opening at token i is followed by
// another '('.
bool Parser::call_follows(std::size_t i) const {
  int depth = 0;
  for (std::size_t j = i; j < toks_.size(); ++j) {
    const Token& t = toks_[j];
    if (t.kind != Tok::Punct) continue;
    if (t.text == "(") ++depth;
    if (t.text == ")" && --depth == 0) {
      return j + 1 < toks_.size() && toks_[j + 1].kind == Tok::Punct && toks_[j + 1].text == "(";
    }
  }
  return false;
}

Raw Parser::raw_atom() {
  const Token& t = peek();
  if (t.kind == Tok::Number) {
    Raw r = make_raw(Raw::Num, t);
    r.num = number();
    return r;
  }
  if (at_punct("(")) {
    next();
    Raw r = raw_expr();
    expect(")");
    return r;
  }
  if (t.kind != Tok::Ident) fail(t, "expected an expression, found " + describe(t));
  if (t.text == "forall" || t.text == "exists") return raw_quant();
  Token id = next();
  if (id.text == "true") return make_raw(Raw::True, id);
  if (id.text == "false") return make_raw(Raw::False, id);
  Raw r = make_raw(Raw::Ident, id);
  r.name = id.text;
  if (accept("(")) {
    r.k = Raw::Call;
    if (!at_punct(")")) {
      do {
        r.kids.push_back(raw_expr());
      } while (accept(","));
    }
    expect(")");
  } else if (accept("[")) {
    r.k = Raw::Schem;
    r.kids.push_back(raw_expr());
    expect("]");
  }
  return r;
}

// --- elaboration -----------------------------------------------------------

std::string sort_keyword(Sort s) {
  switch (s) {
    case Sort::Nat: return "nat";
    case Sort::Ind: return "i";
    case Sort::Prop: return "o";
  }
  return "?";
}

namespace {
const char* sort_desc(Sort s) {
  switch (s) {
    case Sort::Nat: return "a numeric expression";
    case Sort::Ind: return "a term";
    case Sort::Prop: return "a formula";
  }
  return "?";
}
}  // namespace

Expr Parser::elaborate(const Raw& r, Sort expected, Scope& sc) {
  auto need = [&](Sort s) {
    if (expected != s) fail_at(r, std::string("expected ") + sort_desc(expected) + ", found " + sort_desc(s));
  };
  switch (r.k) {
    case Raw::Num:
      if (expected == Sort::Nat) return numeral(r.num);
      if (expected == Sort::Ind && r.num == 0) {
        if (!lang_.theory.sig.lookup("0")) lang_.theory.sig.declare("0", {{}, Sort::Ind, false});
        return app("0", {}, Sort::Ind);
      }
      fail_at(r, std::string("number ") + std::to_string(r.num) + " used where " + sort_desc(expected) +
                     " is expected");
    case Raw::True: need(Sort::Prop); return top();
    case Raw::False: need(Sort::Prop); return bottom();
    case Raw::Not: need(Sort::Prop); return neg(elaborate(r.kids[0], Sort::Prop, sc));
    case Raw::And:
      need(Sort::Prop);
      return conj(elaborate(r.kids[0], Sort::Prop, sc), elaborate(r.kids[1], Sort::Prop, sc));
    case Raw::Or:
      need(Sort::Prop);
      return disj(elaborate(r.kids[0], Sort::Prop, sc), elaborate(r.kids[1], Sort::Prop, sc));
    case Raw::Imp:
      need(Sort::Prop);
      return imp(elaborate(r.kids[0], Sort::Prop, sc), elaborate(r.kids[1], Sort::Prop, sc));
    case Raw::Forall:
    case Raw::Exists: {
      need(Sort::Prop);
      Sort bs = Sort::Ind;
      if (r.sort_tag == "nat" || r.sort_tag == "omega") {
        if (!interpretation) fail_at(r, "numeric quantifiers only occur in interpretation formulas");
        bs = Sort::Nat;
      } else if (!r.sort_tag.empty() && r.sort_tag != "i" && r.sort_tag != "iota") {
        fail_at(r, "unknown sort '" + r.sort_tag + "'");
      }
      sc.bound.push_back({r.name, bs});
      Expr body = elaborate(r.kids[0], Sort::Prop, sc);
      sc.bound.pop_back();
      return quant(r.k == Raw::Forall ? Kind::Forall : Kind::Exists, r.name, bs, body);
    }
    case Raw::Add: {
      if (expected == Sort::Nat) return add(elaborate(r.kids[0], Sort::Nat, sc), elaborate(r.kids[1], Sort::Nat, sc));
      if (expected == Sort::Prop) fail_at(r, "'+' does not form a formula");
      const SymbolInfo* s = lang_.theory.sig.lookup("+");
      if (!s) {
        lang_.theory.sig.declare("+", {{Sort::Ind, Sort::Ind}, Sort::Ind, false});
        s = lang_.theory.sig.lookup("+");
      }
      if (s->arg_sorts.size() != 2 || s->result != Sort::Ind) fail_at(r, "'+' on terms is declared with another shape");
      return app("+", {elaborate(r.kids[0], s->arg_sorts[0], sc), elaborate(r.kids[1], s->arg_sorts[1], sc)}, Sort::Ind);
    }
    case Raw::Pow: {
      need(Sort::Nat);
      const SymbolInfo* s = lang_.theory.sig.lookup("^");
      if (!s || s->arg_sorts != std::vector<Sort>{Sort::Nat, Sort::Nat} || s->result != Sort::Nat) {
        fail_at(r, "'^' must be declared as a numeric function 'fun ^ : nat, nat -> nat'");
      }
      return app("^", {elaborate(r.kids[0], Sort::Nat, sc), elaborate(r.kids[1], Sort::Nat, sc)}, Sort::Nat);
    }
    case Raw::Schem: {
      need(Sort::Ind);
      if (lang_.theory.sig.lookup(r.name)) fail_at(r, "'" + r.name + "' is a function symbol, not a schematic variable");
      if (!lang_.theory.sig.is_schematic(r.name)) lang_.theory.sig.declare_schematic(r.name);
      return schem_var(r.name, elaborate(r.kids[0], Sort::Nat, sc));
    }
    case Raw::Ident: return elab_ident(r, expected, sc);
    case Raw::Call: return elab_call(r, expected, sc);
  }
  fail_at(r, "bad expression");
}

Expr Parser::elab_ident(const Raw& r, Sort expected, Scope& sc) {
  for (std::size_t i = sc.bound.size(); i-- > 0;) {
    if (sc.bound[i].first == r.name) {
      Sort s = sc.bound[i].second;
      if (s != expected) {
        fail_at(r, "bound variable '" + r.name + "' is used as " + sort_desc(expected));
      }
      return bvar(static_cast<std::uint32_t>(sc.bound.size() - 1 - i), s);
    }
  }
  if (expected == Sort::Prop) {
    if (const LetDef* l = lang_.let(r.name)) {
      if (l->formulas.size() != 1) fail_at(r, "abbreviation '" + r.name + "' stands for several formulas");
      return l->formulas[0];
    }
  }
  auto& sig = lang_.theory.sig;
  if (const SymbolInfo* s = sig.lookup(r.name)) {
    if (!s->arg_sorts.empty()) {
      fail_at(r, "'" + r.name + "' expects " + std::to_string(s->arg_sorts.size()) + " arguments");
    }
    if (s->result != expected) {
      fail_at(r, "'" + r.name + "' is " + sort_desc(s->result) + ", expected " + sort_desc(expected));
    }
    return app(r.name, {}, s->result);
  }
  if (sig.is_schematic(r.name)) fail_at(r, "schematic variable '" + r.name + "' needs an index, as in " + r.name + "[n]");
  auto note_rule_var = [&](Sort s) {
    if (!sc.rule_vars) return;
    auto [it, fresh] = sc.rule_vars->emplace(r.name, s);
    if (!fresh && it->second != s) {
      fail_at(r, "rule variable '" + r.name + "' is used at two sorts");
    }
  };
  switch (expected) {
    case Sort::Nat:
      if (sc.rule_vars) {
        note_rule_var(Sort::Nat);
        return nat_var(r.name);
      }
      if (r.name == kParam) return param();
      fail_at(r, "unknown numeric variable '" + r.name + "'; only the parameter n may occur free");
    case Sort::Ind:
      note_rule_var(Sort::Ind);
      return ind_var(r.name);
    case Sort::Prop:
      sig.declare(r.name, {{}, Sort::Prop, false});
      return atom(r.name, {});
  }
  fail_at(r, "bad identifier");
}

Expr Parser::elab_call(const Raw& r, Sort expected, Scope& sc) {
  for (const auto& b : sc.bound) {
    if (b.first == r.name) fail_at(r, "bound variable '" + r.name + "' cannot be applied");
  }
  auto& sig = lang_.theory.sig;
  const SymbolInfo* s = sig.lookup(r.name);
  if (!s && r.name == "s" && r.kids.size() == 1 && expected == Sort::Nat) {
    return succ(elaborate(r.kids[0], Sort::Nat, sc));
  }
  if (sig.is_schematic(r.name)) fail_at(r, "schematic variable '" + r.name + "' is applied with [ ]");
  if (!s) {
    if (expected == Sort::Nat) fail_at(r, "undeclared numeric function '" + r.name + "'");
    sig.declare(r.name, {std::vector<Sort>(r.kids.size(), Sort::Ind), expected, false});
    s = sig.lookup(r.name);
  }
  if (s->arg_sorts.size() != r.kids.size()) {
    fail_at(r, "'" + r.name + "' expects " + std::to_string(s->arg_sorts.size()) + " arguments, got " +
                   std::to_string(r.kids.size()));
  }
  if (s->result != expected) {
    fail_at(r, "'" + r.name + "' is " + sort_desc(s->result) + ", expected " + sort_desc(expected));
  }
  std::vector<Expr> args;
  const std::vector<Sort> sorts = s->arg_sorts;
  const Sort result = s->result;
  for (std::size_t i = 0; i < r.kids.size(); ++i) args.push_back(elaborate(r.kids[i], sorts[i], sc));
  return app(r.name, std::move(args), result);
}

Sort Parser::rule_sort(const Raw& lhs) {
  const auto& sig = lang_.theory.sig;
  switch (lhs.k) {
    case Raw::Call:
    case Raw::Ident: {
      const SymbolInfo* s = sig.lookup(lhs.name);
      if (!s) fail_at(lhs, "rule head '" + lhs.name + "' is not declared");
      return s->result;
    }
    case Raw::Add: {
      const SymbolInfo* s = sig.lookup("+");
      return s ? s->result : Sort::Nat;
    }
    case Raw::Pow: return Sort::Nat;
    default: fail_at(lhs, "a rule must start with a defined symbol");
  }
}

Expr Parser::expr(Sort expected) {
  Raw r = raw_expr();
  Scope sc;
  return elaborate(r, expected, sc);
}

Formulas Parser::formulas(const std::set<std::string>& stop) {
  Formulas out;
  auto at_stop = [&] {
    const Token& t = peek();
    if (t.kind == Tok::End || t.kind == Tok::String) return true;
    if (t.kind == Tok::Punct && (t.text == "|-" || t.text == "|-{" || t.text == ";" || t.text == "}" ||
                                 t.text == "]" || t.text == ")")) {
      return true;
    }
    return t.kind == Tok::Ident && stop.count(t.text) > 0;
  };
  if (at_stop()) return out;
  do {
    Raw r = raw_expr();
    if (r.k == Raw::Ident) {
      if (const LetDef* l = lang_.let(r.name)) {
        out.insert(out.end(), l->formulas.begin(), l->formulas.end());
        continue;
      }
    }
    Scope sc;
    out.push_back(elaborate(r, Sort::Prop, sc));
  } while (accept(","));
  return out;
}

Sequent Parser::sequent(const std::set<std::string>& stop) {
  Sequent s;
  s.ante = formulas(stop);
  expect("|-");
  s.succ = formulas(stop);
  return s;
}

std::vector<Expr> Parser::term_list(Sort s) {
  std::vector<Expr> out;
  expect("[");
  if (!at_punct("]")) {
    do {
      out.push_back(expr(s));
    } while (accept(","));
  }
  expect("]");
  return out;
}

std::vector<std::string> Parser::name_list() {
  std::vector<std::string> out;
  expect("[");
  if (!at_punct("]")) {
    do {
      out.push_back(ident());
    } while (accept(","));
  }
  expect("]");
  return out;
}

std::vector<std::size_t> Parser::index_list() {
  std::vector<std::size_t> out;
  expect("[");
  if (!at_punct("]")) {
    do {
      out.push_back(static_cast<std::size_t>(number()));
    } while (accept(","));
  }
  expect("]");
  return out;
}

// --- proofs ----------------------------------------------------------------

Proof Parser::proof_block() {
  expect_word("rule");
  Token at = peek();
  std::string rname;
  while (!at_punct("{") && !at_end()) rname += next().text;
  auto rule = parse_rule(rname);
  if (!rule) fail(at, "unknown inference rule '" + rname + "'");
  expect("{");
  Proof p;
  p.rule = *rule;
  bool have_conclusion = false;
  while (!accept("}")) {
    if (accept_word("conclusion")) {
      p.conclusion = sequent();
      have_conclusion = true;
      expect(";");
    } else if (accept_word("premise")) {
      expect("{");
      p.premises.push_back(proof_block());
      expect("}");
    } else if (accept_word("data")) {
      std::string key = ident();
      if (key == "term") {
        p.data.term = expr(Sort::Ind);
      } else if (key == "eigen") {
        p.data.eigen = ident();
      } else if (key == "at") {
        p.data.at = index_list();
      } else if (key == "link") {
        LinkData l;
        l.target = name();
        l.param = expr(Sort::Nat);
        if (accept_word("terms")) l.terms = term_list(Sort::Ind);
        p.data.link = std::move(l);
      } else {
        fail(peek(), "unknown rule data '" + key + "'");
      }
      expect(";");
    } else {
      fail(peek(), "expected 'conclusion', 'data', 'premise' or '}', found " + describe(peek()));
    }
  }
  if (!have_conclusion) fail(at, "rule " + rname + " has no conclusion");
  return p;
}

namespace {

std::string pad(int n) { return std::string(static_cast<std::size_t>(n), ' '); }

void print_proof_to(std::ostringstream& os, const Proof& p, int indent) {
  os << pad(indent) << "rule " << rule_name(p.rule) << " {\n";
  os << pad(indent + 2) << "conclusion " << to_string(p.conclusion) << ";\n";
  if (p.data.term) os << pad(indent + 2) << "data term " << to_string(*p.data.term) << ";\n";
  if (p.data.eigen) os << pad(indent + 2) << "data eigen " << *p.data.eigen << ";\n";
  if (p.data.at) {
    os << pad(indent + 2) << "data at [";
    for (std::size_t i = 0; i < p.data.at->size(); ++i) os << (i ? ", " : "") << (*p.data.at)[i];
    os << "];\n";
  }
  if (p.data.link) {
    const LinkData& l = *p.data.link;
    os << pad(indent + 2) << "data link " << l.target << " " << to_string(l.param) << " terms [";
    for (std::size_t i = 0; i < l.terms.size(); ++i) os << (i ? ", " : "") << to_string(l.terms[i]);
    os << "];\n";
  }
  for (const auto& q : p.premises) {
    os << pad(indent + 2) << "premise {\n";
    print_proof_to(os, q, indent + 4);
    os << pad(indent + 2) << "}\n";
  }
  os << pad(indent) << "}\n";
}

}  // namespace

std::string print_proof(const Proof& p, int indent) {
  std::ostringstream os;
  print_proof_to(os, p, indent);
  return os.str();
}

// --- theories --------------------------------------------------------------

namespace {
Sort sort_from(const std::string& s, const Parser& p, const Token& at) {
  if (s == "nat" || s == "omega") return Sort::Nat;
  if (s == "i" || s == "iota" || s == "ind") return Sort::Ind;
  p.fail(at, "unknown sort '" + s + "'");
}
}  // namespace

void Parser::theory_item() {
  auto& sig = lang_.theory.sig;
  auto symbol_name = [&]() -> std::string {
    if (at_punct("+") || at_punct("^")) return next().text;
    return ident();
  };
  bool defined = accept_word("defined");
  if (defined && !at_word("fun") && !at_word("pred")) fail(peek(), "expected 'fun' or 'pred' after 'defined'");
  if (accept_word("fun")) {
    Token at = peek();
    std::string nm = symbol_name();
    expect(":");
    std::vector<Sort> sorts;
    do {
      Token st = peek();
      sorts.push_back(sort_from(ident(), *this, st));
    } while (accept(","));
    SymbolInfo info;
    info.defined = defined;
    if (accept("->")) {
      Token st = peek();
      info.arg_sorts = sorts;
      info.result = sort_from(ident(), *this, st);
    } else {
      if (sorts.size() != 1) fail(at, "a constant has exactly one sort");
      info.result = sorts[0];
    }
    expect(";");
    try {
      sig.declare(nm, info);
    } catch (const std::invalid_argument& e) {
      fail(at, e.what());
    }
    sig.mark_declared(nm);
    return;
  }
  if (accept_word("pred")) {
    Token at = peek();
    std::string nm = ident();
    SymbolInfo info;
    info.defined = defined;
    info.result = Sort::Prop;
    if (accept(":")) {
      do {
        Token st = peek();
        info.arg_sorts.push_back(sort_from(ident(), *this, st));
      } while (accept(","));
    }
    expect(";");
    try {
      sig.declare(nm, info);
    } catch (const std::invalid_argument& e) {
      fail(at, e.what());
    }
    sig.mark_declared(nm);
    return;
  }
  if (accept_word("schematic")) {
    do {
      Token at = peek();
      std::string nm = ident();
      try {
        sig.declare_schematic(nm);
      } catch (const std::invalid_argument& e) {
        fail(at, e.what());
      }
    } while (accept(","));
    expect(";");
    return;
  }
  if (accept_word("let")) {
    Token at = peek();
    std::string nm = ident();
    if (lang_.let(nm)) fail(at, "abbreviation '" + nm + "' is already defined");
    expect("=");
    Formulas fs = formulas();
    expect(";");
    lang_.lets.push_back({nm, std::move(fs), true});
    return;
  }
  Raw lhs = raw_expr();
  expect("==");
  Raw rhs = raw_expr();
  expect(";");
  Sort s = rule_sort(lhs);
  std::map<std::string, Sort> vars;
  Scope sc;
  sc.rule_vars = &vars;
  Expr l = elaborate(lhs, s, sc);
  Expr r = elaborate(rhs, s, sc);
  lang_.theory.rules.push_back({normalize_arith(l), r});
}

Language parse_theory(const std::string& text) {
  Language lang;
  Parser p(text, lang);
  while (!p.at_end()) p.theory_item();
  return lang;
}

Expr parse_expr(const std::string& text, Language& lang, Sort expected) {
  Parser p(text, lang);
  Expr e = p.expr(expected);
  p.expect_end();
  return e;
}

Expr parse_formula(const std::string& text, Language& lang, bool interpretation) {
  Parser p(text, lang);
  p.interpretation = interpretation;
  Expr e = p.formula();
  p.expect_end();
  return e;
}

Sequent parse_sequent(const std::string& text, Language& lang) {
  Parser p(text, lang);
  Sequent s = p.sequent();
  p.expect_end();
  return s;
}

std::string print_theory(const Language& lang) {
  std::ostringstream os;
  const auto& sig = lang.theory.sig;
  for (const auto& nm : sig.declared_order()) {
    const SymbolInfo* s = sig.lookup(nm);
    if (!s) continue;
    if (s->defined) os << "defined ";
    if (s->result == Sort::Prop) {
      os << "pred " << nm;
      for (std::size_t i = 0; i < s->arg_sorts.size(); ++i) {
        os << (i ? ", " : " : ") << sort_keyword(s->arg_sorts[i]);
      }
    } else {
      os << "fun " << nm << " : ";
      for (std::size_t i = 0; i < s->arg_sorts.size(); ++i) os << (i ? ", " : "") << sort_keyword(s->arg_sorts[i]);
      if (!s->arg_sorts.empty()) os << " -> ";
      os << sort_keyword(s->result);
    }
    os << ";\n";
  }
  for (const auto& nm : sig.schematic()) os << "schematic " << nm << ";\n";
  for (const auto& l : lang.lets) {
    if (l.from_theory) os << "let " << l.name << " = " << to_string(l.formulas) << ";\n";
  }
  for (const auto& r : lang.theory.rules) os << to_string(r.lhs) << " == " << to_string(r.rhs) << ";\n";
  return os.str();
}

}  // namespace silk
