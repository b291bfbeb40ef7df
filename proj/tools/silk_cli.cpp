// Command-line front end: check, unroll, translate and interpret proofs.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "silk/format.hpp"
#include "silk/parse.hpp"
#include "silk/print.hpp"
#include "silk/report.hpp"
#include "silk/stack.hpp"
#include "silk/translate.hpp"

using namespace silk;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kRejected = 1, kUsage = 2 };

struct Globals {
  bool json = false;
  bool lenient = false;
  std::size_t fuel = 0;
};

struct Loaded {
  Language lang;
  ProofSchema schema;
};

bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

SilkOptions silk_opts(const Globals& g) { return {g.fuel, g.lenient}; }
SchemaOptions schema_opts(const Globals& g) {
  SchemaOptions o;
  o.fuel = g.fuel;
  o.lenient_erule = g.lenient;
  return o;
}

SilkScript load_script(const std::string& path) {
  return parse_silk_script(read_file(path), dir_of(path));
}

// A .sch file, or a .slk proof translated on the fly.
Loaded load_schema(const std::string& path, const Globals& g) {
  if (ends_with(path, ".slk")) {
    SilkScript s = load_script(path);
    s.lang.theory.fuel_default = g.fuel;
    ProofSchema sch = silk_to_schema(s, silk_opts(g));
    return {std::move(s.lang), std::move(sch)};
  }
  SchemaFile f = parse_schema_file(read_file(path), dir_of(path));
  return {std::move(f.lang), std::move(f.schema)};
}

// Theory problems reject the input before any checking.
bool theory_ok(const Language& lang, const Globals& g) {
  auto issues = validate_theory(lang.theory);
  if (issues.empty()) return true;
  CheckReport r;
  for (const auto& i : issues) {
    r.failures.push_back({i.rule < 0 ? "theory" : "theory rule " + std::to_string(i.rule), "theory", i.message});
  }
  if (g.json) {
    std::cout << report_json(r, "rejected", g.fuel).dump(2) << "\n";
  } else {
    std::cout << "rejected: invalid theory\n" << report_text(r);
  }
  return false;
}

int emit(const CheckReport& r, const std::string& status, const Globals& g, json extra = json::object()) {
  if (g.json) {
    json j = report_json(r, status, g.fuel);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << status << "\n";
    if (!r.failures.empty()) std::cout << report_text(r);
    if (!r.counts.empty()) std::cout << "inferences: " << total_inferences(r.counts) << " (" << counts_text(r.counts) << ")\n";
  }
  return r.accepted() ? kOk : kRejected;
}

int cmd_check_lk(const std::string& path, const std::optional<std::string>& mode, const Globals& g) {
  LkFile f = parse_lk_file(read_file(path), dir_of(path));
  if (!theory_ok(f.lang, g)) return kRejected;
  CheckOptions o;
  o.mode = f.mode;
  if (mode) {
    if (*mode == "LK") o.mode = Mode::LK;
    else if (*mode == "LKE") o.mode = Mode::LKE;
    else o.mode = Mode::LKS;
  }
  o.allowed_link_params = f.allowed;
  o.fuel = g.fuel;
  o.lenient_erule = g.lenient;
  CheckReport r = check_proof(f.proof, f.lang.theory, f.targets, o);
  return emit(r, r.accepted() ? "accepted" : "rejected", g, {{"mode", mode_name(o.mode)}});
}

int cmd_check_schema(const std::string& path, const Globals& g) {
  Loaded l = load_schema(path, g);
  if (!theory_ok(l.lang, g)) return kRejected;
  CheckReport r = check_schema(l.schema, l.lang.theory, schema_opts(g));
  return emit(r, r.accepted() ? "accepted" : "rejected", g, {{"components", l.schema.components.size()}});
}

int cmd_check_silk(const std::string& path, const Globals& g) {
  SilkScript s = load_script(path);
  if (!theory_ok(s.lang, g)) return kRejected;
  ScriptResult res = check_script(s, silk_opts(g));
  const std::string verdict = verdict_name(res.verdict);
  if (g.json) {
    json j = report_json(res.report, verdict, g.fuel);
    j["verdict"] = verdict;
    j["steps"] = s.steps.size();
    j["collection"] = to_string(res.collection);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << verdict << " (" << s.steps.size() << " steps)\n";
    std::cout << report_text(res.report);
    std::cout << to_string(res.collection);
  }
  return res.verdict == Verdict::Proof ? kOk : kRejected;
}

int cmd_unroll(const std::string& path, std::uint64_t alpha, bool normalized, const Globals& g) {
  Loaded l = load_schema(path, g);
  if (!theory_ok(l.lang, g)) return kRejected;
  EvalCheck ec = evaluate_and_check(l.schema, alpha, l.lang.theory, schema_opts(g));
  if (!ec.report.accepted()) return emit(ec.report, "rejected", g, {{"alpha", alpha}});
  UnrollTrace t = evaluate(l.schema, alpha, l.lang.theory, g.fuel);
  const Proof& p = normalized ? t.proof : t.unrolled;
  const RuleCounts counts = count_inferences(p);
  if (g.json) {
    CheckReport r = ec.report;
    r.counts = counts;
    json j = report_json(r, "accepted", g.fuel);
    j["alpha"] = alpha;
    j["normalized"] = normalized;
    j["end_sequent"] = to_string(p.conclusion);
    j["proof"] = print_proof(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "proof {\n" << print_proof(p, 2) << "}\n";
    std::cout << "# inferences: " << total_inferences(counts) << " (" << counts_text(counts) << ")\n";
  }
  return kOk;
}

int cmd_ppsnf(const std::string& path, const Globals& g) {
  SilkScript s = load_script(path);
  if (!theory_ok(s.lang, g)) return kRejected;
  SilkScript out = to_ppsnf(s, silk_opts(g));
  const std::string text = print_silk_script(out);
  if (g.json) {
    json j = report_json({}, "proof", g.fuel);
    j["script"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return kOk;
}

int cmd_translate(const std::string& path, const Globals& g) {
  SilkScript s = load_script(path);
  if (!theory_ok(s.lang, g)) return kRejected;
  SchemaFile f{s.lang, silk_to_schema(s, silk_opts(g))};
  const std::string text = print_schema_file(f);
  if (g.json) {
    json j = report_json({}, "proof", g.fuel);
    j["schema"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return kOk;
}

int cmd_interpret(const std::string& path, const Globals& g) {
  SilkScript s = load_script(path);
  if (!theory_ok(s.lang, g)) return kRejected;
  ScriptResult res = check_script(s, silk_opts(g));
  if (res.verdict != Verdict::Proof) {
    CheckReport r = res.report;
    if (r.failures.empty()) r.failures.push_back({"script", "interpret", "the script is a derivation, not a proof"});
    emit(r, verdict_name(res.verdict), g);
    return kRejected;
  }
  const std::string text = to_string(interpret(res.collection));
  if (g.json) {
    json j = report_json({}, "proof", g.fuel);
    j["formula"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kOk;
}

int cmd_stats(const std::string& path, const std::string& range, const Globals& g) {
  auto dots = range.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--alpha-range", "expected A..B");
  std::uint64_t a = 0, b = 0;
  try {
    a = std::stoull(range.substr(0, dots));
    b = std::stoull(range.substr(dots + 2));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--alpha-range", "expected A..B");
  }
  if (a > b) throw CLI::ValidationError("--alpha-range", "A must not exceed B");
  Loaded l = load_schema(path, g);
  if (!theory_ok(l.lang, g)) return kRejected;
  bool all_ok = true;
  json rows = json::array();
  if (!g.json) std::cout << "alpha inferences rewrite_steps status counts\n";
  for (std::uint64_t x = a; x <= b; ++x) {
    EvalCheck ec = evaluate_and_check(l.schema, x, l.lang.theory, schema_opts(g));
    const bool ok = ec.report.accepted();
    all_ok = all_ok && ok;
    const std::size_t n = total_inferences(ec.report.counts);
    if (g.json) {
      rows.push_back({{"alpha", x},
                      {"inferences", n},
                      {"counts", counts_json(ec.report.counts)},
                      {"rewrite_steps", ec.rewrite_steps},
                      {"status", ok ? "accepted" : "rejected"}});
    } else {
      std::cout << x << " " << n << " " << ec.rewrite_steps << " " << (ok ? "accepted" : "rejected") << " "
                << counts_text(ec.report.counts) << "\n";
      if (!ok) std::cout << report_text(ec.report);
    }
  }
  if (g.json) {
    json j = report_json({}, all_ok ? "accepted" : "rejected", g.fuel);
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
  }
  return all_ok ? kOk : kRejected;
}

int run(int argc, char** argv) {
  CLI::App app{"Checker for schematic sequent-calculus proofs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::optional<std::size_t> fuel;
  app.add_flag("--json", g.json, "machine-readable report");
  app.add_flag("--lenient", g.lenient, "accept E steps by normal form alone");
  app.add_option("--fuel", fuel, "rewrite steps per normalization (default: SILK_FUEL or 100000)")
      ->check(CLI::PositiveNumber);

  std::string file;
  std::optional<std::string> mode;
  std::uint64_t alpha = 0;
  bool normalized = false;
  std::string range;

  auto* lk = app.add_subcommand("check-lk", "check an LK/LKE/LKS proof file (.lkp)");
  lk->add_option("file", file)->required()->check(CLI::ExistingFile);
  lk->add_option("--mode", mode, "override the file's mode")->check(CLI::IsMember({"LK", "LKE", "LKS"}));
  auto* sch = app.add_subcommand("check-schema", "check a proof schema (.sch, or .slk translated)");
  sch->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* slk = app.add_subcommand("check-silk", "replay a SiLK script (.slk)");
  slk->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* un = app.add_subcommand("unroll", "evaluate a schema at a numeral");
  un->add_option("file", file)->required()->check(CLI::ExistingFile);
  un->add_option("--alpha", alpha, "parameter value")->required();
  un->add_flag("--normalized", normalized, "print the normalized LK proof");
  auto* pp = app.add_subcommand("ppsnf", "reorder a SiLK proof group by group");
  pp->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* tr = app.add_subcommand("translate", "translate a SiLK proof into a proof schema");
  tr->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* in = app.add_subcommand("interpret", "induction statement of a SiLK proof");
  in->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* st = app.add_subcommand("stats", "inference counts per parameter value");
  st->add_option("file", file)->required()->check(CLI::ExistingFile);
  st->add_option("--alpha-range", range, "A..B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  g.fuel = fuel ? *fuel : env_fuel();

  try {
    if (*lk) return cmd_check_lk(file, mode, g);
    if (*sch) return cmd_check_schema(file, g);
    if (*slk) return cmd_check_silk(file, g);
    if (*un) return cmd_unroll(file, alpha, normalized, g);
    if (*pp) return cmd_ppsnf(file, g);
    if (*tr) return cmd_translate(file, g);
    if (*in) return cmd_interpret(file, g);
    if (*st) return cmd_stats(file, range, g);
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const NotAProof& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kRejected;
  } catch (const std::exception& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kRejected;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  return with_large_stack([&] { return run(argc, argv); });
}
