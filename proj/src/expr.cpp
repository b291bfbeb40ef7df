#include "silk/expr.hpp"

#include <functional>

namespace silk {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

bool has_name(Kind k) { return k == Kind::Var || k == Kind::SchemVar || k == Kind::App; }

bool same_head(const Node& a, const Node& b) {
  if (a.kind() != b.kind() || a.sort() != b.sort() || a.args().size() != b.args().size()) {
    return false;
  }
  if (has_name(a.kind()) && a.name() != b.name()) return false;
  if (a.kind() == Kind::BVar && a.index() != b.index()) return false;
  if ((a.kind() == Kind::Forall || a.kind() == Kind::Exists) &&
      a.binder_sort() != b.binder_sort()) {
    return false;
  }
  return true;
}

}  // namespace

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Nat: return "nat";
    case Sort::Ind: return "i";
    case Sort::Prop: return "o";
  }
  return "?";
}

Expr Node::make(Kind k, Sort s, std::string name, std::vector<Expr> args, std::uint32_t index,
                Sort binder_sort) {
  auto* n = new Node();
  n->kind_ = k;
  n->sort_ = s;
  n->name_ = std::move(name);
  n->args_ = std::move(args);
  n->index_ = index;
  n->binder_sort_ = binder_sort;

  std::size_t h = mix(static_cast<std::size_t>(k), static_cast<std::size_t>(s));
  if (has_name(k)) h = mix(h, std::hash<std::string>{}(n->name_));
  n->has_vars_ = k == Kind::Var || k == Kind::SchemVar;
  if (k == Kind::BVar) {
    h = mix(h, index);
    n->loose_ = index + 1;
  }
  const bool binder = k == Kind::Forall || k == Kind::Exists;
  if (binder) h = mix(h, static_cast<std::size_t>(binder_sort) + 17);
  for (const auto& a : n->args_) {
    h = mix(h, a->hash());
    n->has_vars_ = n->has_vars_ || a->has_vars();
    n->size_ += a->size();
    std::uint32_t l = a->loose_bound();
    if (binder && l > 0) --l;
    if (l > n->loose_) n->loose_ = l;
  }
  n->hash_ = h;
  return Expr(n);
}

bool equal(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->size() != b->size()) return false;
  if (!same_head(*a, *b)) return false;
  for (std::size_t i = 0; i < a->args().size(); ++i) {
    if (!equal(a->arg(i), b->arg(i))) return false;
  }
  return true;
}

Expr zero() {
  static const Expr z = Node::make(Kind::Zero, Sort::Nat, "", {});
  return z;
}

Expr succ(Expr e) {
  if (e->sort() != Sort::Nat) throw SortMismatch("s(.) expects a numeric argument");
  return Node::make(Kind::Succ, Sort::Nat, "", {std::move(e)});
}

Expr add(Expr a, Expr b) {
  if (a->sort() != Sort::Nat || b->sort() != Sort::Nat) {
    throw SortMismatch("numeric + expects numeric arguments");
  }
  return Node::make(Kind::Add, Sort::Nat, "", {std::move(a), std::move(b)});
}

Expr numeral(std::uint64_t k) {
  Expr e = zero();
  for (std::uint64_t i = 0; i < k; ++i) e = succ(e);
  return e;
}

Expr param() {
  static const Expr p = nat_var(kParam);
  return p;
}

Expr nat_var(std::string name) { return Node::make(Kind::Var, Sort::Nat, std::move(name), {}); }

Expr ind_var(std::string name) { return Node::make(Kind::Var, Sort::Ind, std::move(name), {}); }

Expr schem_var(std::string name, Expr index) {
  if (index->sort() != Sort::Nat) throw SortMismatch("schematic variable index must be numeric");
  return Node::make(Kind::SchemVar, Sort::Ind, std::move(name), {std::move(index)});
}

Expr bvar(std::uint32_t index, Sort s) { return Node::make(Kind::BVar, s, "", {}, index); }

Expr app(std::string symbol, std::vector<Expr> args, Sort result) {
  for (const auto& a : args) {
    if (a->sort() == Sort::Prop) throw SortMismatch("argument of '" + symbol + "' must be a term");
  }
  return Node::make(Kind::App, result, std::move(symbol), std::move(args));
}

Expr atom(std::string pred, std::vector<Expr> args) {
  return app(std::move(pred), std::move(args), Sort::Prop);
}

Expr top() {
  static const Expr t = Node::make(Kind::True, Sort::Prop, "", {});
  return t;
}

Expr bottom() {
  static const Expr f = Node::make(Kind::False, Sort::Prop, "", {});
  return f;
}

namespace {
void need_prop(const Expr& e, const char* what) {
  if (e->sort() != Sort::Prop) throw SortMismatch(std::string(what) + " expects formulas");
}
}  // namespace

Expr neg(Expr a) {
  need_prop(a, "~");
  return Node::make(Kind::Not, Sort::Prop, "", {std::move(a)});
}
Expr conj(Expr a, Expr b) {
  need_prop(a, "/\\");
  need_prop(b, "/\\");
  return Node::make(Kind::And, Sort::Prop, "", {std::move(a), std::move(b)});
}
Expr disj(Expr a, Expr b) {
  need_prop(a, "\\/");
  need_prop(b, "\\/");
  return Node::make(Kind::Or, Sort::Prop, "", {std::move(a), std::move(b)});
}
Expr imp(Expr a, Expr b) {
  need_prop(a, "->");
  need_prop(b, "->");
  return Node::make(Kind::Imp, Sort::Prop, "", {std::move(a), std::move(b)});
}

Expr quant(Kind k, std::string hint, Sort s, Expr body) {
  need_prop(body, "quantifier");
  return Node::make(k, Sort::Prop, std::move(hint), {std::move(body)}, 0, s);
}

Expr forall(const std::string& var, Sort s, const Expr& body) {
  return quant(Kind::Forall, var, s, abstract(body, var, s));
}

Expr exists(const std::string& var, Sort s, const Expr& body) {
  return quant(Kind::Exists, var, s, abstract(body, var, s));
}

bool is_formula(const Expr& e) { return e->sort() == Sort::Prop; }

std::optional<std::uint64_t> numeral_value(const Expr& e) {
  std::uint64_t k = 0;
  const Node* cur = e.get();
  while (cur->kind() == Kind::Succ) {
    ++k;
    cur = cur->arg(0).get();
  }
  if (cur->kind() != Kind::Zero) return std::nullopt;
  return k;
}

bool is_numeral(const Expr& e) { return numeral_value(e).has_value(); }

namespace {
void collect_vars(const Expr& e, Sort s, std::set<std::string>& out) {
  if (!e->has_vars()) return;
  if (e->kind() == Kind::Var) {
    if (e->sort() == s) out.insert(e->name());
    return;
  }
  for (const auto& a : e->args()) collect_vars(a, s, out);
}
}  // namespace

std::set<std::string> free_vars(const Expr& e, Sort s) {
  std::set<std::string> out;
  collect_vars(e, s, out);
  return out;
}

std::set<std::string> free_params(const Expr& e) { return free_vars(e, Sort::Nat); }

bool occurs_free(const Expr& e, const std::string& var) {
  if (!e->has_vars()) return false;
  if (e->kind() == Kind::Var) return e->name() == var;
  for (const auto& a : e->args()) {
    if (occurs_free(a, var)) return true;
  }
  return false;
}

bool is_subterm(const Expr& needle, const Expr& hay) {
  if (equal(needle, hay)) return true;
  if (hay->size() <= needle->size()) return false;
  for (const auto& a : hay->args()) {
    if (is_subterm(needle, a)) return true;
  }
  return false;
}

Expr with_args(const Expr& e, std::vector<Expr> args) {
  bool same = args.size() == e->args().size();
  for (std::size_t i = 0; same && i < args.size(); ++i) same = args[i].get() == e->arg(i).get();
  if (same) return e;
  return Node::make(e->kind(), e->sort(), e->name(), std::move(args), e->index(), e->binder_sort());
}

namespace {

Expr instantiate_at(const Expr& e, const Expr& t, std::uint32_t depth) {
  if (e->loose_bound() <= depth) return e;
  if (e->kind() == Kind::BVar) return e->index() == depth ? t : e;
  const bool binder = e->kind() == Kind::Forall || e->kind() == Kind::Exists;
  std::vector<Expr> args;
  args.reserve(e->args().size());
  for (const auto& a : e->args()) args.push_back(instantiate_at(a, t, binder ? depth + 1 : depth));
  return with_args(e, std::move(args));
}

Expr abstract_at(const Expr& e, const std::string& var, Sort s, std::uint32_t depth) {
  if (!e->has_vars()) return e;
  if (e->kind() == Kind::Var) {
    return (e->name() == var && e->sort() == s) ? bvar(depth, s) : e;
  }
  if (e->args().empty()) return e;
  const bool binder = e->kind() == Kind::Forall || e->kind() == Kind::Exists;
  std::vector<Expr> args;
  args.reserve(e->args().size());
  for (const auto& a : e->args()) args.push_back(abstract_at(a, var, s, binder ? depth + 1 : depth));
  return with_args(e, std::move(args));
}

}  // namespace

Expr instantiate(const Expr& body, const Expr& t) {
  if (t->loose_bound() != 0) throw std::logic_error("instantiate: replacement must be closed");
  return instantiate_at(body, t, 0);
}

Expr abstract(const Expr& body, const std::string& var, Sort s) { return abstract_at(body, var, s, 0); }

std::optional<Expr> subexpr_at(const Expr& e, const std::vector<std::size_t>& path) {
  Expr cur = e;
  for (std::size_t i : path) {
    if (i >= cur->args().size()) return std::nullopt;
    cur = cur->arg(i);
  }
  return cur;
}

Expr replace_at(const Expr& e, const std::vector<std::size_t>& path, const Expr& by) {
  std::function<Expr(const Expr&, std::size_t)> go = [&](const Expr& cur, std::size_t d) -> Expr {
    if (d == path.size()) return by;
    std::vector<Expr> args = cur->args();
    args.at(path[d]) = go(cur->arg(path[d]), d + 1);
    return with_args(cur, std::move(args));
  };
  return go(e, 0);
}

std::optional<std::vector<std::size_t>> difference_path(const Expr& a, const Expr& b) {
  if (equal(a, b)) return std::nullopt;
  std::vector<std::size_t> path;
  Expr x = a;
  Expr y = b;
  for (;;) {
    if (!same_head(*x, *y)) return path;
    std::optional<std::size_t> diff;
    for (std::size_t i = 0; i < x->args().size(); ++i) {
      if (!equal(x->arg(i), y->arg(i))) {
        if (diff) return path;
        diff = i;
      }
    }
    if (!diff) return path;
    path.push_back(*diff);
    x = x->arg(*diff);
    y = y->arg(*diff);
  }
}

}  // namespace silk
