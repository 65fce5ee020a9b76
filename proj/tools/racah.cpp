#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>

#include "racah/expr.hpp"
#include "racah/relations.hpp"
#include "racah/representation.hpp"
#include "racah/symmetry.hpp"
#include "racah/verifier.hpp"

using namespace racah;

namespace {

constexpr int kConfigError = 2;

struct RepArgs {
  std::string params_file;
  int window = 8;
};

RepParams params_or_default(const std::string& file) {
  if (file.empty()) return default_param_sets(0)[1].params;
  auto cfg = load_config(file);
  if (!cfg.params) throw std::invalid_argument(file + " does not set c1..c4 and N");
  return *cfg.params;
}

LatticeState parse_state(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("state must look like t,s");
  LatticeState st{std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  if (!st.on_lattice()) throw std::invalid_argument("state |" + s + "> is not on the lattice");
  return st;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Racah algebra R(n) and its rank-2 representation"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites and print a report");
  int v_rank = 4, v_window = 12;
  std::string v_params, v_suites = "all", v_format = "human";
  std::uint64_t v_seed = 0;
  bool v_timing = false;
  auto* o_rank = verify->add_option("--rank", v_rank, "number of base indices n");
  verify->add_option("--params", v_params, "config file (c1..c4, N, window, suites, rank, seed)");
  auto* o_window = verify->add_option("--window", v_window, "largest t of the truncated lattice");
  auto* o_suites = verify->add_option("--suites", v_suites, "comma-separated suites or 'all'");
  verify->add_option("--format", v_format, "human or json");
  auto* o_seed = verify->add_option("--seed", v_seed, "seed of the random parameter set");
  verify->add_flag("--timing", v_timing, "include per-check timings");

  // reduce
  auto* red = app.add_subcommand("reduce", "Reduce an expression with the rewrite system");
  std::string r_expr;
  int r_rank = 4;
  red->add_option("expr", r_expr, "expression")->required();
  red->add_option("--rank", r_rank, "number of base indices n");

  // list-relations
  auto* list = app.add_subcommand("list-relations", "Print the relation catalog");
  int l_rank = 4;
  list->add_option("--rank", l_rank, "number of base indices n");

  // jacobi
  auto* jac = app.add_subcommand("jacobi", "Reduce the Jacobi defects of all generator triples");
  int j_rank = 4;
  std::string j_format = "human";
  jac->add_option("--rank", j_rank, "number of base indices n (3..5)");
  jac->add_option("--format", j_format, "human or json");

  // symmetry
  auto* sym = app.add_subcommand("symmetry", "Pentagon and index-permutation symmetries");
  sym->require_subcommand(1);
  auto* closure = sym->add_subcommand("closure", "Orders of the generated groups");
  auto* orb = sym->add_subcommand("orbit", "Orbit of an expression");
  std::string o_expr, o_group = "d5";
  orb->add_option("expr", o_expr, "generator or expression (rank 4)")->required();
  orb->add_option("--group", o_group, "d5, p4 or all");

  // rep
  auto* rep = app.add_subcommand("rep", "The split-basis representation");
  rep->require_subcommand(1);
  RepArgs ra;
  auto* dump = rep->add_subcommand("dump", "Nonzero matrix entries of a generator");
  std::string d_gen;
  dump->add_option("--gen", d_gen, "generator, e.g. C34")->required();
  auto* apply = rep->add_subcommand("apply", "Apply an expression to a state");
  std::string a_expr, a_state;
  apply->add_option("--expr", a_expr, "expression")->required();
  apply->add_option("--state", a_state, "t,s")->required();
  auto* probe = rep->add_subcommand("probe", "Rows closed under lowering (candidate invariant subspaces)");
  for (auto* sc : {dump, apply, probe}) {
    sc->add_option("--window", ra.window, "largest t of the truncated lattice");
    sc->add_option("--params", ra.params_file, "config file with c1..c4 and N");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  try {
    if (*verify) {
      SuiteConfig cfg;
      cfg.rank = v_rank;
      cfg.window = v_window;
      cfg.seed = v_seed;
      std::string suites = v_suites;
      std::optional<RepParams> fixed;
      if (!v_params.empty()) {
        auto file = load_config(v_params);
        if (file.rank && !o_rank->count()) cfg.rank = *file.rank;
        if (file.window && !o_window->count()) cfg.window = *file.window;
        if (file.seed && !o_seed->count()) cfg.seed = *file.seed;
        if (file.suites && !o_suites->count()) {
          cfg.suites = *file.suites;
          suites.clear();
        }
        fixed = file.params;
      }
      if (!suites.empty()) cfg.suites = parse_suite_list(suites);
      if (fixed)
        cfg.params = {{"config", *fixed, cfg.window}};
      else
        cfg.params = default_param_sets(cfg.seed, cfg.window);
      if (v_format != "json" && v_format != "human") throw std::invalid_argument("unknown format '" + v_format + "'");
      validate_config(cfg);
      VerificationReport report = run_suite(cfg);
      std::cout << emit_report(report, v_format, v_timing);
      return report.exit_code();
    }
    if (*red) {
      NCPoly p = parse_expr(r_expr, r_rank);
      std::cout << reduce(p, default_system(r_rank)).str() << "\n";
      return 0;
    }
    if (*list) {
      for (Family f : all_families())
        for (const auto& id : enumerate(f, l_rank))
          std::cout << family_name(f) << "\t" << id.payload() << "\t" << family_anchor(f) << "\n";
      return 0;
    }
    if (*jac) {
      VerificationReport report = jacobi_suite(j_rank);
      std::cout << emit_report(report, j_format);
      return report.exit_code();
    }
    if (*closure) {
      for (Group g : {Group::D5, Group::P4, Group::All}) {
        std::cout << group_name(g) << ": order " << closure_order(g) << "\n";
        for (const auto& s : generating_set(g)) std::cout << "  " << s << "\n";
      }
      return 0;
    }
    if (*orb) {
      Group g = group_from_name(o_group);
      for (const auto& p : orbit(parse_expr(o_expr, 4), g)) std::cout << p.str() << "\n";
      return 0;
    }
    if (*dump || *apply || *probe) {
      RepParams p = params_or_default(ra.params_file);
      if (*probe) {
        auto rows = probe_invariant_rows(p, ra.window);
        std::cout << p.str() << " window " << ra.window << ": ";
        if (rows.empty()) std::cout << "no row is closed under lowering\n";
        for (std::size_t k = 0; k < rows.size(); ++k)
          std::cout << (k ? " " : "") << "t>=" << rows[k] << (k + 1 == rows.size() ? "\n" : "");
        return 0;
      }
      Evaluator ev(p, ra.window);
      if (*dump) {
        const SparseOperator& op = ev.letter(parse_generator(d_gen, 4));
        const auto& sts = op.states();
        for (std::size_t x = 0; x < op.dim(); ++x)
          for (const auto& [y, v] : op.column(x))
            std::cout << sts[x].t << " " << sts[x].s << " -> " << sts[y].t << " " << sts[y].s << "  " << v.str()
                      << "\n";
        return 0;
      }
      LatticeState st = parse_state(a_state);
      bool leaked = false;
      auto img = ev.eval(parse_expr(a_expr, 4)).apply(st, &leaked);
      std::cout << combo_str(img) << (leaked ? "  (truncated: the image leaves the window)" : "") << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "racah: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "racah: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::out_of_range& e) {
    std::cerr << "racah: " << e.what() << "\n";
    return kConfigError;
  }
  return 0;
}
