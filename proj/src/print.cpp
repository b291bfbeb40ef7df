#include "silk/print.hpp"

#include <set>
#include <sstream>

namespace silk {

namespace {

// Formula precedence levels; higher binds tighter.
enum Prec : int { kQuant = 0, kImp = 1, kOr = 2, kAnd = 3, kNot = 4, kAtom = 5 };
// Term precedence levels.
enum TPrec : int { kSum = 1, kPow = 2, kTAtom = 3 };

void collect_names(const Expr& e, std::set<std::string>& out) {
  if (e->kind() == Kind::Var || e->kind() == Kind::SchemVar ||
      (e->kind() == Kind::App && e->args().empty())) {
    out.insert(e->name());
  }
  for (const auto& a : e->args()) collect_names(a, out);
}

class Printer {
 public:
  std::string print(const Expr& e) {
    std::ostringstream os;
    emit(os, e, 0);
    return os.str();
  }

 private:
  std::vector<std::string> scope_;

  int level(const Expr& e) const {
    switch (e->kind()) {
      case Kind::Forall:
      case Kind::Exists: return kQuant;
      case Kind::Imp: return kImp;
      case Kind::Or: return kOr;
      case Kind::And: return kAnd;
      case Kind::Not: return kNot;
      case Kind::Add: return kSum;
      case Kind::App:
        if (e->args().size() == 2 && e->name() == "+") return kSum;
        if (e->args().size() == 2 && e->name() == "^") return kPow;
        return e->sort() == Sort::Prop ? int(kAtom) : int(kTAtom);
      default: return e->sort() == Sort::Prop ? int(kAtom) : int(kTAtom);
    }
  }

  void emit_paren(std::ostream& os, const Expr& e, int min_level) {
    if (level(e) < min_level) {
      os << '(';
      emit(os, e, 0);
      os << ')';
    } else {
      emit(os, e, min_level);
    }
  }

  std::string fresh_binder(const Expr& q) {
    std::set<std::string> taken(scope_.begin(), scope_.end());
    collect_names(q->arg(0), taken);
    std::string base = q->name().empty() ? "x" : q->name();
    if (!taken.count(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!taken.count(cand)) return cand;
    }
  }

  void emit(std::ostream& os, const Expr& e, int /*ctx*/) {
    switch (e->kind()) {
      case Kind::Zero: os << '0'; return;
      case Kind::Succ: {
        if (auto v = numeral_value(e)) {
          os << *v;
          return;
        }
        os << "s(";
        emit(os, e->arg(0), 0);
        os << ')';
        return;
      }
      case Kind::Add:
        emit_paren(os, e->arg(0), kSum);
        os << " + ";
        emit_paren(os, e->arg(1), kPow);
        return;
      case Kind::Var: os << e->name(); return;
      case Kind::SchemVar:
        os << e->name() << '[';
        emit(os, e->arg(0), 0);
        os << ']';
        return;
      case Kind::BVar: {
        std::size_t i = e->index();
        if (i < scope_.size()) {
          os << scope_[scope_.size() - 1 - i];
        } else {
          os << "#" << i;
        }
        return;
      }
      case Kind::App: {
        if (e->args().size() == 2 && e->name() == "+") {
          emit_paren(os, e->arg(0), kSum);
          os << " + ";
          emit_paren(os, e->arg(1), kPow);
          return;
        }
        if (e->args().size() == 2 && e->name() == "^") {
          emit_paren(os, e->arg(0), kTAtom);
          os << '^';
          emit_paren(os, e->arg(1), kTAtom);
          return;
        }
        os << e->name();
        if (!e->args().empty()) {
          os << '(';
          for (std::size_t i = 0; i < e->args().size(); ++i) {
            if (i) os << ", ";
            emit(os, e->arg(i), 0);
          }
          os << ')';
        }
        return;
      }
      case Kind::True: os << "true"; return;
      case Kind::False: os << "false"; return;
      case Kind::Not:
        os << '~';
        emit_paren(os, e->arg(0), kNot);
        return;
      case Kind::And:
        emit_paren(os, e->arg(0), kAnd);
        os << " /\\ ";
        emit_paren(os, e->arg(1), kNot);
        return;
      case Kind::Or:
        emit_paren(os, e->arg(0), kOr);
        os << " \\/ ";
        emit_paren(os, e->arg(1), kAnd);
        return;
      case Kind::Imp:
        emit_paren(os, e->arg(0), kOr);
        os << " -> ";
        emit_paren(os, e->arg(1), kImp);
        return;
      case Kind::Forall:
      case Kind::Exists: {
        std::string v = fresh_binder(e);
        os << (e->kind() == Kind::Forall ? "forall " : "exists ") << v;
        if (e->binder_sort() == Sort::Nat) os << ":nat";
        os << ". ";
        scope_.push_back(v);
        emit(os, e->arg(0), 0);
        scope_.pop_back();
        return;
      }
    }
  }
};

}  // namespace

std::string to_string(const Expr& e) { return Printer().print(e); }

std::string to_string(const Formulas& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += to_string(fs[i]);
  }
  return out;
}

std::string to_string(const Sequent& s) {
  std::string l = to_string(s.ante);
  std::string r = to_string(s.succ);
  std::string out = l.empty() ? "|-" : l + " |-";
  if (!r.empty()) out += " " + r;
  return out;
}

std::string to_string(const AnnotatedSequent& s) {
  std::string l = to_string(s.sequent.ante);
  std::string r = to_string(s.sequent.succ);
  std::string out = l.empty() ? "" : l + " ";
  out += "|-{" + to_string(s.annotation) + "}";
  if (!r.empty()) out += " " + r;
  return out;
}

}  // namespace silk
