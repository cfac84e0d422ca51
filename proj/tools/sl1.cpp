#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sl1/contraction.hpp"
#include "sl1/fuzz.hpp"
#include "sl1/parse.hpp"
#include "sl1/print.hpp"
#include "sl1/reductions.hpp"
#include "sl1/semantics.hpp"
#include "sl1/solver.hpp"
#include "sl1/structures.hpp"
#include "sl1/testform.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitUnknown = 30;
constexpr int kExitUsage = 1;
constexpr int kExitDisagreement = 2;

// Arguments naming a regular file are read from disk, "-" reads stdin,
// anything else is taken as inline text.
std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

unsigned workers_from_env() {
  const char* s = std::getenv("SL1_WORKERS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (end == s || *end != '\0' || v == 0 || v > 256)
    throw std::invalid_argument("SL1_WORKERS must be an integer in [1, 256]");
  return static_cast<unsigned>(v);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

int print_result(const sl1::SatResult& r) {
  const char* tag = r.status == sl1::SatStatus::Sat     ? "SAT"
                    : r.status == sl1::SatStatus::Unsat ? "UNSAT"
                                                        : "UNKNOWN";
  std::cout << tag << "\n";
  std::cout << "bound " << r.bound_used << "\n";
  std::cout << "structures " << r.stats.structures_visited << "\n";
  std::cout << "eval-steps " << r.stats.eval_steps << "\n";
  if (r.inflatable) std::cout << "inflatable yes\n";
  if (r.sl_witness) std::cout << "witness:\n" << sl1::write_structure(*r.sl_witness);
  if (r.fo_witness)
    std::cout << "witness:\n" << sl1::write_fo_structure(*r.fo_witness);
  switch (r.status) {
    case sl1::SatStatus::Sat:
      return kExitSat;
    case sl1::SatStatus::Unsat:
      return kExitUnsat;
    default:
      return kExitUnknown;
  }
}

struct CheckArgs {
  std::string input;
  bool infinite = false;
  std::uint64_t oracle_bound = 0;
  std::string dialect = "sl";
  std::uint64_t max_structures = 0;
  std::uint64_t max_eval_steps = 0;
};

int run_check(const CheckArgs& a, bool have_oracle_bound) {
  sl1::SolverOptions opts;
  opts.max_structures = a.max_structures;
  opts.max_eval_steps = a.max_eval_steps;
  opts.workers = workers_from_env();
  std::string text = read_input(a.input);
  if (a.dialect == "fo") {
    if (!have_oracle_bound)
      throw std::invalid_argument("--dialect fo requires --oracle-bound");
    return print_result(sl1::oracle_sat(sl1::parse_fo(text), a.oracle_bound, opts));
  }
  sl1::SLFormula f = sl1::parse_sl(text);
  if (have_oracle_bound)
    return print_result(sl1::oracle_sat(f, a.oracle_bound, opts));
  if (a.infinite) return print_result(sl1::check_infinite_sat(f, opts));
  return print_result(sl1::check_finite_sat(f, opts));
}

struct TranslateArgs {
  std::string input;
  bool to_fo = false;
  bool from_fo_finite = false;
  bool from_fo_infinite = false;
  std::string format = "native";
  std::string out;
};

int run_translate(const TranslateArgs& a) {
  std::string text = read_input(a.input);
  if (a.to_fo) {
    sl1::SLFormula f = sl1::parse_sl(text);
    sl1::FOFormula g = sl1::sl_to_fo(sl1::desugar_heap_atoms(f));
    sl1::FOFormat fmt = a.format == "smtlib2" ? sl1::FOFormat::Smtlib2
                        : a.format == "tptp"  ? sl1::FOFormat::Tptp
                                              : sl1::FOFormat::Native;
    std::string s = sl1::emit_fo(g, fmt);
    if (s.empty() || s.back() != '\n') s += "\n";
    emit(s, a.out);
    return 0;
  }
  if (a.format != "native")
    throw std::invalid_argument("--format applies only to --to-fo output");
  sl1::FOFormula g = sl1::flatten_fo(sl1::parse_fo(text));
  sl1::FoToSlMode mode = a.from_fo_finite ? sl1::FoToSlMode::Finite
                                          : sl1::FoToSlMode::Infinite;
  emit(sl1::print_sl(sl1::fo_to_sl(g, mode)) + "\n", a.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"satisfiability toolkit for separation logic with one selector"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand(
      "check", "decide satisfiability of a closed prenex formula");
  check->add_option("input", ca.input, "formula file, inline text, or -")
      ->required();
  auto* fin = check->add_flag("--finite", "finite-universe satisfiability (default)");
  auto* inf = check->add_flag("--infinite", ca.infinite,
                              "infinite-universe satisfiability");
  auto* ob = check->add_option("--oracle-bound", ca.oracle_bound,
                               "brute-force all structures up to this size instead");
  check->add_option("--dialect", ca.dialect, "sl or fo (fo needs --oracle-bound)")
      ->check(CLI::IsMember({"sl", "fo"}));
  check->add_option("--max-structures", ca.max_structures,
                    "structure budget, 0 = unlimited");
  check->add_option("--max-eval-steps", ca.max_eval_steps,
                    "per-structure evaluation budget, 0 = unlimited");
  fin->excludes(inf);
  ob->excludes(inf);

  TranslateArgs ta;
  auto* translate =
      app.add_subcommand("translate", "move formulas between the two dialects");
  translate->add_option("input", ta.input, "formula file, inline text, or -")
      ->required();
  auto* tofo = translate->add_flag("--to-fo", ta.to_fo,
                                   "separation-logic test combination to first order");
  auto* fof = translate->add_flag("--from-fo-finite", ta.from_fo_finite,
                                  "first order to separation logic, finite reading");
  auto* foi = translate->add_flag("--from-fo-infinite", ta.from_fo_infinite,
                                  "first order to separation logic, infinite reading");
  translate->add_option("--format", ta.format, "native, smtlib2 or tptp")
      ->check(CLI::IsMember({"native", "smtlib2", "tptp"}));
  translate->add_option("--out", ta.out, "write result here instead of stdout");
  tofo->excludes(fof);
  tofo->excludes(foi);
  fof->excludes(foi);

  std::string mc_formula, mc_structure, mc_dialect = "sl";
  auto* modelcheck =
      app.add_subcommand("modelcheck", "evaluate a formula on a structure");
  modelcheck->add_option("--formula", mc_formula, "formula file, inline text, or -")
      ->required();
  modelcheck
      ->add_option("--structure", mc_structure, "structure file, inline text, or -")
      ->required();
  modelcheck->add_option("--dialect", mc_dialect, "sl or fo")
      ->check(CLI::IsMember({"sl", "fo"}));

  std::string ct_structure;
  std::vector<std::string> ct_vars;
  std::vector<sl1::Loc> ct_locs;
  std::uint64_t ct_bound = 1;
  auto* contract_cmd = app.add_subcommand(
      "contract", "shorten heap segments away from the marked locations");
  contract_cmd->add_option("--structure", ct_structure, "structure file or inline")
      ->required();
  contract_cmd->add_option("--vars", ct_vars, "store variables to protect")
      ->delimiter(',');
  contract_cmd->add_option("--locs", ct_locs, "locations to protect")
      ->delimiter(',');
  contract_cmd->add_option("--bound", ct_bound, "maximum kept segment length, >= 1")
      ->required();

  std::string rs_structure;
  std::vector<std::string> rs_vars;
  std::vector<sl1::Loc> rs_locs;
  auto* restrict_cmd = app.add_subcommand(
      "restrict", "keep only the closure of the marked locations");
  restrict_cmd->add_option("--structure", rs_structure, "structure file or inline")
      ->required();
  restrict_cmd->add_option("--vars", rs_vars, "store variables to keep")
      ->delimiter(',');
  restrict_cmd->add_option("--locs", rs_locs, "locations to keep")
      ->delimiter(',');

  std::uint64_t fz_seed = 0, fz_count = 0;
  sl1::FuzzConfig fz_cfg;
  auto* fuzz = app.add_subcommand(
      "fuzz", "differential run of the solver against the bounded oracle");
  fuzz->add_option("--seed", fz_seed)->required();
  fuzz->add_option("--count", fz_count)->required();
  fuzz->add_option("--max-quantifiers", fz_cfg.max_quantifiers);
  fuzz->add_option("--max-matrix-nodes", fz_cfg.max_matrix_nodes);
  fuzz->add_option("--max-constant", fz_cfg.max_constant);
  fuzz->add_option("--solver-budget", fz_cfg.solver_budget);
  fuzz->add_option("--oracle-budget", fz_cfg.oracle_budget);
  fuzz->add_option("--eval-budget", fz_cfg.eval_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  auto start = std::chrono::steady_clock::now();
  int rc = kExitUsage;
  try {
    if (check->parsed()) {
      rc = run_check(ca, ob->count() > 0);
    } else if (translate->parsed()) {
      if (tofo->count() + fof->count() + foi->count() != 1)
        throw std::invalid_argument(
            "pick one of --to-fo, --from-fo-finite, --from-fo-infinite");
      rc = run_translate(ta);
    } else if (modelcheck->parsed()) {
      bool ok;
      if (mc_dialect == "fo")
        ok = sl1::eval_fo(sl1::parse_fo_structure(read_input(mc_structure)),
                          sl1::parse_fo(read_input(mc_formula)));
      else
        ok = sl1::eval_sl(sl1::parse_structure(read_input(mc_structure)),
                          sl1::parse_sl(read_input(mc_formula)));
      std::cout << (ok ? "true" : "false") << "\n";
      rc = 0;
    } else if (contract_cmd->parsed()) {
      sl1::SLStructure I = sl1::parse_structure(read_input(ct_structure));
      std::set<std::string> X(ct_vars.begin(), ct_vars.end());
      std::set<sl1::Loc> L(ct_locs.begin(), ct_locs.end());
      std::cout << sl1::write_structure(sl1::contract(I, ct_bound, X, L));
      rc = 0;
    } else if (restrict_cmd->parsed()) {
      sl1::SLStructure I = sl1::parse_structure(read_input(rs_structure));
      std::set<std::string> X(rs_vars.begin(), rs_vars.end());
      std::set<sl1::Loc> L(rs_locs.begin(), rs_locs.end());
      std::cout << sl1::write_structure(sl1::restrict_structure(I, X, L));
      rc = 0;
    } else if (fuzz->parsed()) {
      sl1::FuzzReport rep = sl1::fuzz_compare(fz_seed, fz_count, fz_cfg);
      std::cout << rep.text();
      rc = rep.disagreements.empty() ? 0 : kExitDisagreement;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::cerr << "elapsed-ms " << ms << "\n";
  return rc;
}
