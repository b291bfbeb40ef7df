#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "silk/language.hpp"
#include "silk/proof.hpp"

namespace silk {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

enum class Tok : std::uint8_t { Ident, Number, String, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> tokenize(const std::string& text, int line = 1, int col = 1);

// Unelaborated expression.
struct Raw {
  enum K : std::uint8_t { Num, Ident, Call, Schem, Add, Pow, Not, And, Or, Imp, Forall, Exists, True, False };
  K k = Ident;
  std::string name;
  std::uint64_t num = 0;
  std::vector<Raw> kids;
  std::string sort_tag;  // binder sort as written
  int line = 1, col = 1;
};

// Recursive-descent parser over one token stream. Symbols that are used
// without a declaration are added to the language's signature.
class Parser {
 public:
  Parser(const std::string& text, Language& lang, int line = 1, int col = 1);

  const Token& peek(std::size_t k = 0) const;
  Token next();
  bool at_punct(const char* p, std::size_t k = 0) const;
  bool at_word(const char* w, std::size_t k = 0) const;
  bool accept(const char* p);
  bool accept_word(const char* w);
  void expect(const char* p);
  void expect_word(const char* w);
  std::string ident();
  // Identifier or number, used for group and component names.
  std::string name();
  std::string string_lit();
  std::uint64_t number();
  bool at_end() const { return peek().kind == Tok::End; }
  void expect_end();
  [[noreturn]] void fail(const Token& at, const std::string& msg) const;

  Expr expr(Sort expected);
  Expr formula() { return expr(Sort::Prop); }
  // Comma-separated formulas; abbreviations are spliced in. Stops before
  // any identifier in `stop`.
  Formulas formulas(const std::set<std::string>& stop = {});
  Sequent sequent(const std::set<std::string>& stop = {});
  std::vector<Expr> term_list(Sort s);           // [t1, t2]
  std::vector<std::string> name_list();          // [a, b]
  std::vector<std::size_t> index_list();         // [0, 1]

  Proof proof_block();   // rule NAME { ... }
  // One declaration, abbreviation or rule of a theory.
  void theory_item();

  // Allow `forall x:nat.` binders.
  bool interpretation = false;

  Language& lang() { return lang_; }

 private:
  Raw raw_expr();
  Raw raw_imp();
  Raw raw_or();
  Raw raw_and();
  Raw raw_not();
  Raw raw_quant();
  Raw raw_sum();
  Raw raw_pow();
  Raw raw_atom();
  bool call_follows(std::size_t i) const;

  struct Scope {
    std::vector<std::pair<std::string, Sort>> bound;
    std::map<std::string, Sort>* rule_vars = nullptr;
  };
  Expr elaborate(const Raw& r, Sort expected, Scope& sc);
  Expr elab_ident(const Raw& r, Sort expected, Scope& sc);
  Expr elab_call(const Raw& r, Sort expected, Scope& sc);
  Sort rule_sort(const Raw& lhs);
  [[noreturn]] void fail_at(const Raw& r, const std::string& msg) const;

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Language& lang_;
};

// Whole-text helpers.
Language parse_theory(const std::string& text);
Expr parse_expr(const std::string& text, Language& lang, Sort expected);
Expr parse_formula(const std::string& text, Language& lang, bool interpretation = false);
Sequent parse_sequent(const std::string& text, Language& lang);

std::string sort_keyword(Sort s);

// Theory in .thy syntax: explicit declarations, abbreviations that came
// from the theory, then rules.
std::string print_theory(const Language& lang);
// Proof block at the given indentation.
std::string print_proof(const Proof& p, int indent = 0);

}  // namespace silk
