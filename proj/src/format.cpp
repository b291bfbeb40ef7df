#include "silk/format.hpp"

#include <fstream>
#include <sstream>

#include "silk/parse.hpp"
#include "silk/print.hpp"

namespace silk {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  if (slash == 0) return "/";
  return path.substr(0, slash);
}

namespace {

std::string join_path(const std::string& dir, const std::string& rel) {
  if (!rel.empty() && rel[0] == '/') return rel;
  if (dir.empty() || dir == ".") return rel;
  return dir + "/" + rel;
}

void load_theory_text(const std::string& text, Language& lang) {
  Parser tp(text, lang);
  while (!tp.at_end()) tp.theory_item();
}

// `theory "path";` or `theory { items }`. The caller has consumed `theory`.
void theory_clause(Parser& p, const std::string& base_dir, bool need_semicolon) {
  Language& lang = p.lang();
  if (p.accept("{")) {
    while (!p.accept("}")) {
      if (p.at_end()) p.fail(p.peek(), "unterminated theory block");
      p.theory_item();
    }
    lang.inline_theory = true;
    return;
  }
  Token at = p.peek();
  std::string rel = p.string_lit();
  if (need_semicolon) p.expect(";");
  std::string text;
  try {
    text = read_file(join_path(base_dir, rel));
  } catch (const std::exception& e) {
    p.fail(at, e.what());
  }
  try {
    load_theory_text(text, lang);
  } catch (const ParseError& e) {
    p.fail(at, "in theory '" + rel + "': " + e.what());
  }
  lang.theory_path = rel;
}

void let_clause(Parser& p) {
  Token at = p.peek();
  std::string nm = p.ident();
  if (p.lang().let(nm)) p.fail(at, "abbreviation '" + nm + "' is already defined");
  p.expect("=");
  Formulas fs = p.formulas();
  p.lang().lets.push_back({nm, std::move(fs), false});
}

Mode mode_from(Parser& p) {
  Token at = p.peek();
  std::string m = p.ident();
  if (m == "LK") return Mode::LK;
  if (m == "LKE") return Mode::LKE;
  if (m == "LKS") return Mode::LKS;
  p.fail(at, "unknown mode '" + m + "'");
}

std::string theory_header(const Language& lang, bool semicolon) {
  std::ostringstream os;
  if (!lang.theory_path.empty()) {
    os << "theory \"" << lang.theory_path << "\"" << (semicolon ? ";" : "") << "\n";
  } else {
    os << "theory {\n" << print_theory(lang) << "}\n";
  }
  for (const auto& l : lang.lets) {
    if (!l.from_theory) os << "let " << l.name << " = " << to_string(l.formulas) << (semicolon ? ";" : "") << "\n";
  }
  return os.str();
}

std::string list_str(const std::vector<std::string>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
  return s + "]";
}

std::string expr_list_str(const std::vector<Expr>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + "]";
}

}  // namespace

// --- .lkp ------------------------------------------------------------------

LkFile parse_lk_file(const std::string& text, const std::string& base_dir) {
  LkFile f;
  Parser p(text, f.lang);
  bool have_proof = false;
  while (!p.at_end()) {
    if (p.accept_word("theory")) {
      theory_clause(p, base_dir, true);
    } else if (p.accept_word("let")) {
      let_clause(p);
      p.expect(";");
    } else if (p.accept_word("mode")) {
      f.mode = mode_from(p);
      p.expect(";");
    } else if (p.accept_word("target")) {
      Token at = p.peek();
      std::string nm = p.name();
      if (f.targets.count(nm)) p.fail(at, "target '" + nm + "' is declared twice");
      p.expect_word("pattern");
      LinkTarget t;
      t.pattern = p.sequent({"vars"});
      if (p.accept_word("vars")) t.vars = p.name_list();
      p.expect(";");
      f.targets[nm] = std::move(t);
      f.target_order.push_back(nm);
    } else if (p.accept_word("allow-params")) {
      auto xs = p.name_list();
      f.allowed = std::set<std::string>(xs.begin(), xs.end());
      p.expect(";");
    } else if (p.accept_word("proof")) {
      if (have_proof) p.fail(p.peek(), "a file holds one proof");
      p.expect("{");
      f.proof = p.proof_block();
      p.expect("}");
      have_proof = true;
    } else {
      p.fail(p.peek(), "expected 'theory', 'let', 'mode', 'target', 'allow-params' or 'proof'");
    }
  }
  if (!have_proof) p.fail(p.peek(), "missing 'proof { ... }'");
  return f;
}

std::string print_lk_file(const LkFile& f) {
  std::ostringstream os;
  os << theory_header(f.lang, true);
  os << "mode " << mode_name(f.mode) << ";\n";
  for (const auto& nm : f.target_order) {
    const LinkTarget& t = f.targets.at(nm);
    os << "target " << nm << " pattern " << to_string(t.pattern) << " vars " << list_str(t.vars) << ";\n";
  }
  os << "allow-params " << list_str({f.allowed.begin(), f.allowed.end()}) << ";\n";
  os << "proof {\n" << print_proof(f.proof, 2) << "}\n";
  return os.str();
}

// --- .sch ------------------------------------------------------------------

SchemaFile parse_schema_file(const std::string& text, const std::string& base_dir) {
  SchemaFile f;
  Parser p(text, f.lang);
  while (!p.at_end()) {
    if (p.accept_word("theory")) {
      theory_clause(p, base_dir, true);
    } else if (p.accept_word("let")) {
      let_clause(p);
      p.expect(";");
    } else if (p.accept_word("component")) {
      Token at = p.peek();
      SchemaComponent c;
      c.name = p.name();
      if (f.schema.find(c.name)) p.fail(at, "component '" + c.name + "' is declared twice");
      p.expect_word("pattern");
      c.pattern = p.sequent({"vars", "step-param"});
      if (p.accept_word("vars")) c.vars = p.name_list();
      if (p.accept_word("step-param")) c.step_param = p.expr(Sort::Nat);
      p.expect("{");
      p.expect_word("base");
      p.expect("{");
      c.base = p.proof_block();
      p.expect("}");
      if (p.accept_word("step")) {
        if (!c.step_param) p.fail(at, "component '" + c.name + "' has a step case but no step-param");
        p.expect("{");
        c.step = p.proof_block();
        p.expect("}");
      } else if (c.step_param) {
        p.fail(at, "component '" + c.name + "' declares a step-param but no step case");
      }
      p.expect("}");
      f.schema.components.push_back(std::move(c));
    } else {
      p.fail(p.peek(), "expected 'theory', 'let' or 'component'");
    }
  }
  return f;
}

std::string print_schema_file(const SchemaFile& f) {
  std::ostringstream os;
  os << theory_header(f.lang, true);
  for (const auto& c : f.schema.components) {
    os << "\ncomponent " << c.name << " pattern " << to_string(c.pattern) << " vars " << list_str(c.vars);
    if (c.step_param) os << " step-param " << to_string(c.step_param);
    os << " {\n  base {\n" << print_proof(c.base, 4) << "  }\n";
    if (c.step) os << "  step {\n" << print_proof(*c.step, 4) << "  }\n";
    os << "}\n";
  }
  return os.str();
}

bool schema_eq(const ProofSchema& a, const ProofSchema& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    const auto& x = a.components[i];
    const auto& y = b.components[i];
    if (x.name != y.name || x.vars != y.vars || !sequent_eq(x.pattern, y.pattern)) return false;
    if (!equal(x.step_param, y.step_param)) return false;
    if (!proof_eq(x.base, y.base)) return false;
    if (x.step.has_value() != y.step.has_value()) return false;
    if (x.step && !proof_eq(*x.step, *y.step)) return false;
  }
  return true;
}

// --- .slk ------------------------------------------------------------------

namespace {

struct Keyword {
  const char* word;
  SilkRule rule;
};

const Keyword kKeywords[] = {
    {"ax1r", SilkRule::Ax1R}, {"ax2r", SilkRule::Ax2R},   {"axl", SilkRule::AxL},   {"ccr", SilkRule::CcR},
    {"ccl", SilkRule::CcL},   {"br", SilkRule::Br},       {"clbc", SilkRule::ClBc}, {"cllke", SilkRule::ClLKE},
    {"clsc", SilkRule::ClSc}, {"cycle", SilkRule::Cycle}, {"call", SilkRule::Call},
};

bool contiguous(const Token& a, const Token& b) {
  return a.kind != Tok::String && b.kind != Tok::String && b.kind != Tok::End && a.line == b.line &&
         b.col == a.col + static_cast<int>(a.text.size());
}

Sequent sequent_in(const Token& t, Language& lang) {
  Parser sp(t.text, lang, t.line, t.col + 1);
  Sequent s = sp.sequent();
  sp.expect_end();
  return s;
}

Expr expr_in(const Token& t, Language& lang, Sort s) {
  Parser sp(t.text, lang, t.line, t.col + 1);
  Expr e = sp.expr(s);
  sp.expect_end();
  return e;
}

bool is_rho(SilkRule r) {
  return r == SilkRule::Rho1Bc || r == SilkRule::Rho2Bc || r == SilkRule::Rho1Sc || r == SilkRule::Rho2Sc;
}

SilkStep parse_step(Parser& p, Language& lang, std::size_t line) {
  SilkStep st;
  st.line = line;
  Token kw = p.peek();
  std::string word = p.ident();
  bool found = false;
  if (word == "rho") {
    Token side = p.peek();
    std::string bs = p.ident();
    if (bs != "bc" && bs != "sc") p.fail(side, "expected 'bc' or 'sc' after 'rho'");
    Token ar = p.peek();
    auto arity = p.number();
    if (arity != 1 && arity != 2) p.fail(ar, "rho arity is 1 or 2");
    st.rule = bs == "bc" ? (arity == 1 ? SilkRule::Rho1Bc : SilkRule::Rho2Bc)
                         : (arity == 1 ? SilkRule::Rho1Sc : SilkRule::Rho2Sc);
    Token first = p.next();
    if (first.kind == Tok::End || first.kind == Tok::String) p.fail(first, "expected an inference rule name");
    std::string rname = first.text;
    Token prev = first;
    while (contiguous(prev, p.peek())) {
      prev = p.next();
      rname += prev.text;
    }
    auto r = parse_rule(rname);
    if (!r) p.fail(first, "unknown inference rule '" + rname + "'");
    st.lk_rule = *r;
    found = true;
  }
  for (const auto& k : kKeywords) {
    if (word == k.word) {
      st.rule = k.rule;
      found = true;
    }
  }
  if (!found) p.fail(kw, "unknown step '" + word + "'");

  while (!p.at_end()) {
    const Token t = p.peek();
    if (t.kind == Tok::String) {
      if (st.seq) p.fail(t, "a step takes one sequent");
      p.next();
      st.seq = sequent_in(t, lang);
      continue;
    }
    if (t.kind != Tok::Ident) p.fail(t, "unexpected '" + t.text + "'");
    const std::string key = p.ident();
    if (p.accept("=")) {
      if (key == "group") {
        st.group = p.name();
      } else if (key == "pair") {
        st.pair = p.name();
      } else if (key == "pair2") {
        st.pair2 = p.name();
      } else if (key == "new") {
        st.fresh = p.name();
      } else if (key == "target") {
        st.target = p.name();
      } else if (key == "eigen") {
        st.data.eigen = p.ident();
      } else if (key == "at") {
        st.data.at = p.index_list();
      } else {
        p.fail(t, "unknown option '" + key + "='");
      }
      continue;
    }
    if (key == "term" || key == "ann" || key == "g" || key == "f" || key == "pattern") {
      const Token s = p.peek();
      p.string_lit();
      if (key == "term") {
        st.data.term = expr_in(s, lang, Sort::Ind);
      } else if (key == "ann") {
        st.ann = expr_in(s, lang, Sort::Nat);
      } else if (key == "g") {
        st.g = expr_in(s, lang, Sort::Nat);
      } else if (key == "f") {
        st.f = expr_in(s, lang, Sort::Nat);
      } else {
        st.pattern = sequent_in(s, lang);
      }
    } else if (key == "vars") {
      st.vars = p.name_list();
    } else if (key == "terms") {
      st.terms = p.term_list(Sort::Ind);
    } else {
      p.fail(t, "unknown option '" + key + "'");
    }
  }

  const bool needs_seq = st.rule == SilkRule::Ax1R || st.rule == SilkRule::Ax2R || st.rule == SilkRule::AxL ||
                         is_rho(st.rule);
  if (needs_seq && !st.seq) p.fail(kw, std::string(word) + " needs a sequent in quotes");
  if (!needs_seq && st.seq) p.fail(kw, std::string(word) + " takes no sequent");
  if (st.rule == SilkRule::AxL && !st.ann) p.fail(kw, "axl needs an annotation: ann \"e\"");
  if (st.rule == SilkRule::Call) {
    if (st.target.empty()) p.fail(kw, "call needs target=GROUP");
    if (!st.g) p.fail(kw, "call needs g \"e\"");
  }
  return st;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);
  return lines;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

SilkScript parse_silk_script(const std::string& text, const std::string& base_dir) {
  SilkScript s;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int ln = static_cast<int>(i + 1);
    const std::string t = trim(lines[i]);
    if (t.empty() || t[0] == '#') continue;
    Parser p(lines[i], s.lang, ln, 1);
    if (p.accept_word("theory")) {
      if (p.at_punct("{")) {
        // Multi-line inline theory, closed by a line holding only `}`.
        std::string block = lines[i].substr(lines[i].find('{') + 1) + "\n";
        std::size_t j = i + 1;
        for (; j < lines.size() && trim(lines[j]) != "}"; ++j) block += lines[j] + "\n";
        if (j == lines.size()) throw ParseError(ln, 1, "unterminated theory block");
        Parser tp(block, s.lang, ln, 1);
        while (!tp.at_end()) tp.theory_item();
        s.lang.inline_theory = true;
        i = j;
        continue;
      }
      theory_clause(p, base_dir, false);
      p.expect_end();
      continue;
    }
    if (p.accept_word("let")) {
      let_clause(p);
      p.expect_end();
      continue;
    }
    s.steps.push_back(parse_step(p, s.lang, i + 1));
  }
  return s;
}

std::string print_silk_step(const SilkStep& s) {
  std::ostringstream os;
  switch (s.rule) {
    case SilkRule::Rho1Bc:
    case SilkRule::Rho2Bc:
    case SilkRule::Rho1Sc:
    case SilkRule::Rho2Sc: {
      const bool bc = s.rule == SilkRule::Rho1Bc || s.rule == SilkRule::Rho2Bc;
      const bool two = s.rule == SilkRule::Rho2Bc || s.rule == SilkRule::Rho2Sc;
      os << "rho " << (bc ? "bc" : "sc") << " " << (two ? 2 : 1) << " "
         << (s.lk_rule ? rule_label(*s.lk_rule) : "?");
      break;
    }
    default: os << silk_rule_keyword(s.rule);
  }
  if (!s.group.empty()) os << " group=" << s.group;
  if (!s.pair.empty()) os << " pair=" << s.pair;
  if (!s.pair2.empty()) os << " pair2=" << s.pair2;
  if (!s.fresh.empty()) os << " new=" << s.fresh;
  if (!s.target.empty()) os << " target=" << s.target;
  if (s.data.term) os << " term \"" << to_string(*s.data.term) << "\"";
  if (s.data.eigen) os << " eigen=" << *s.data.eigen;
  if (s.data.at) {
    os << " at=[";
    for (std::size_t i = 0; i < s.data.at->size(); ++i) os << (i ? "," : "") << (*s.data.at)[i];
    os << "]";
  }
  if (s.pattern) os << " pattern \"" << to_string(*s.pattern) << "\"";
  if (s.vars) os << " vars " << list_str(*s.vars);
  if (s.g) os << " g \"" << to_string(s.g) << "\"";
  if (s.f) os << " f \"" << to_string(s.f) << "\"";
  if (s.ann) os << " ann \"" << to_string(s.ann) << "\"";
  if (s.rule == SilkRule::Cycle || s.rule == SilkRule::Call) os << " terms " << expr_list_str(s.terms);
  if (s.seq) os << " \"" << to_string(*s.seq) << "\"";
  return os.str();
}

std::string print_silk_script(const SilkScript& s) {
  std::ostringstream os;
  os << theory_header(s.lang, false);
  for (const auto& st : s.steps) os << print_silk_step(st) << "\n";
  return os.str();
}

bool step_eq(const SilkStep& a, const SilkStep& b) {
  auto opt_expr = [](const std::optional<Expr>& x, const std::optional<Expr>& y) {
    return x.has_value() == y.has_value() && (!x || equal(*x, *y));
  };
  auto opt_seq = [](const std::optional<Sequent>& x, const std::optional<Sequent>& y) {
    return x.has_value() == y.has_value() && (!x || sequent_eq(*x, *y));
  };
  if (a.rule != b.rule || a.group != b.group || a.pair != b.pair || a.pair2 != b.pair2 || a.fresh != b.fresh ||
      a.target != b.target || a.lk_rule != b.lk_rule || a.vars != b.vars) {
    return false;
  }
  if (!opt_seq(a.seq, b.seq) || !opt_seq(a.pattern, b.pattern)) return false;
  if (!opt_expr(a.data.term, b.data.term) || a.data.eigen != b.data.eigen || a.data.at != b.data.at) return false;
  if (!equal(a.ann, b.ann) || !equal(a.g, b.g) || !equal(a.f, b.f)) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (!equal(a.terms[i], b.terms[i])) return false;
  }
  return true;
}

}  // namespace silk
