#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <tuple>

#include "racah/relations.hpp"
#include "racah/symmetry.hpp"
#include "racah/verifier.hpp"

namespace racah {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string truncate(std::string s, std::size_t n = 400) {
  if (s.size() > n) s = s.substr(0, n) + " ...";
  return s;
}

struct Instance {
  std::string relation;
  int rank;
  std::string payload;
  std::string anchor;
};

InstanceRecord base_record(const Instance& in, Method m) {
  InstanceRecord r;
  r.relation = in.relation;
  r.rank = in.rank;
  r.payload = in.payload;
  r.anchor = in.anchor;
  r.method = m;
  return r;
}

InstanceRecord symbolic(const Instance& in, const NCPoly& p, Reducer& red) {
  auto t0 = Clock::now();
  InstanceRecord r = base_record(in, Method::symbolic_reduce);
  NCPoly nf = red.reduce(p);
  if (nf.is_zero()) {
    r.status = Status::proved_zero;
  } else {
    r.status = Status::inconclusive;
    r.residue = truncate(nf.str());
  }
  r.seconds = since(t0);
  return r;
}

// Status of an operator that should vanish.
InstanceRecord judge(const Instance& in, const SparseOperator& op, const std::string& params, double seconds) {
  InstanceRecord r = base_record(in, Method::representation_eval);
  r.params = params;
  r.seconds = seconds;
  if (op.reliable_count() == 0) {
    r.status = Status::inconclusive;
  } else if (auto x = op.nonzero_reliable_column()) {
    r.status = Status::failed;
    const LatticeState st = op.states()[*x];
    r.witness = Witness{st, combo_str(op.apply(st))};
  } else {
    r.status = Status::zero_on_window;
  }
  return r;
}

// Checks that succeed or fail outright.
InstanceRecord verdict(const Instance& in, Method m, bool ok, std::string detail = {}) {
  InstanceRecord r = base_record(in, m);
  r.status = ok ? Status::proved_zero : Status::failed;
  if (!ok) r.residue = std::move(detail);
  return r;
}

struct RepContext {
  std::vector<NamedParams> sets;
  std::vector<std::unique_ptr<Evaluator>> evals;

  explicit RepContext(const std::vector<NamedParams>& ps) : sets(ps) {
    for (const auto& np : ps) evals.push_back(std::make_unique<Evaluator>(np.params, np.window));
  }

  void check(VerificationReport& out, const Instance& in, const NCPoly& p) {
    for (std::size_t k = 0; k < sets.size(); ++k) {
      auto t0 = Clock::now();
      SparseOperator op = evals[k]->eval(p);
      out.instances.push_back(judge(in, op, sets[k].name, since(t0)));
    }
  }
};

Instance instance_of(const RelationId& id) {
  return {family_name(id.family), id.n, id.payload(), family_anchor(id.family)};
}

void run_families(VerificationReport& out, const std::vector<Family>& fams, int n, Reducer& red, RepContext* rep) {
  for (Family f : fams)
    for (const auto& id : enumerate(f, n)) {
      NCPoly p = relation(id);
      Instance in = instance_of(id);
      out.instances.push_back(symbolic(in, p, red));
      if (rep && n <= 4) rep->check(out, in, p);
    }
}

// The rank-n DD relations with D_klm written as 1/2[P_kl, P_lm], reduced
// without the D.D catalog: they then follow from the P.D relations alone.
NCPoly dd_via_p(const RelationId& id) {
  const int n = id.n;
  const auto& v = id.idx;
  auto half_comm = [n](int a, int b, int c) {
    return Rational(1, 2) * commutator(gen_P(a, b, n), gen_P(b, c, n));
  };
  if (id.family == Family::dd_one_overlap) {
    int i = v[0], j = v[1], k = v[2], l = v[3], m = v[4];
    return commutator(D_of(i, j, k, n), half_comm(k, l, m)) -
           (gen_P(j, k, n) * D_of(l, m, i, n) - gen_P(k, i, n) * D_of(j, l, m, n));
  }
  return commutator(D_of(v[0], v[1], v[2], n), half_comm(v[3], v[4], v[5]));
}

void suite_definitions(VerificationReport& out, int n, RepContext* rep) {
  Reducer red(default_system(n));
  run_families(out, {Family::central, Family::decomposition, Family::quad}, n, red, rep);
}

void suite_bigthm(VerificationReport& out, RepContext* rep) {
  Reducer red(default_system(4));
  run_families(out, {Family::ddef, Family::inner_P, Family::outer_P, Family::dd, Family::pdt}, 4, red, rep);
}

void suite_rn(VerificationReport& out) {
  for (int n : {5, 6}) {
    Reducer plain(default_system(n));
    run_families(out, {Family::ddef, Family::inner_P, Family::outer_P, Family::dd, Family::pdt}, n, plain, nullptr);
    SystemOptions opt;
    opt.dd_catalog = false;
    RewriteSystem rs = build_rewrite_system(n, opt);
    Reducer red(rs);
    for (Family f : {Family::dd_one_overlap, Family::dd_disjoint})
      for (const auto& id : enumerate(f, n)) out.instances.push_back(symbolic(instance_of(id), dd_via_p(id), red));
  }
}

void suite_lemmas(VerificationReport& out, RepContext* rep) {
  Reducer red(default_system(4));
  run_families(out,
               {Family::d_cyclic, Family::quadB, Family::pd_pair, Family::outer_lemma_c, Family::dd_op,
                Family::pd_flip, Family::pd_shift, Family::pd_switch, Family::pdi, Family::pdi_op},
               4, red, rep);
}

void suite_pentagon(VerificationReport& out, RepContext* rep) {
  Reducer red(default_system(4));
  auto suite = pentagon_suite();
  for (const auto& id : suite) {
    NCPoly p = relation(id);
    Instance in = instance_of(id);
    out.instances.push_back(symbolic(in, p, red));
    if (rep) rep->check(out, in, p);
  }
  for (Group g : {Group::D5, Group::P4}) {
    std::map<std::string, std::pair<Instance, std::vector<std::string>>> per_relation;
    for (const auto& rec : verify_relation_invariance(g, suite)) {
      std::string key = family_name(rec.source.family) + " " + rec.source.payload();
      auto& slot = per_relation[key];
      slot.first = {"invariance_" + group_name(g), 4, key,
                    "every group image of the relation is again a relation of the suite"};
      if (!rec.ok()) slot.second.push_back(rec.element);
    }
    for (auto& [key, v] : per_relation) {
      std::string bad;
      for (const auto& e : v.second) bad += (bad.empty() ? "" : ", ") + e;
      out.instances.push_back(verdict(v.first, Method::symbolic_reduce, v.second.empty(), bad));
    }
  }
  std::size_t order = closure_order(Group::All);
  out.instances.push_back(verdict({"closure_order", 4, "all=" + std::to_string(order),
                                   "D5 and P4 together generate a group of order 120 on the 15 C's"},
                                  Method::symbolic_reduce, order == 120));
}

void suite_casimirs(VerificationReport& out, RepContext* rep) {
  {
    Reducer red(default_system(3));
    NCPoly c = casimir_rank1(3);
    const std::pair<const char*, NCPoly> xs[] = {{"C12", gen_C({1, 2}, 3)},
                                                 {"C23", gen_C({2, 3}, 3)},
                                                 {"D123", D_of(1, 2, 3, 3)}};
    for (const auto& [name, x] : xs) {
      Instance in{"casimir_rank1_commutes", 3, std::string("x=") + name, "the rank-1 Casimir commutes with the generators"};
      NCPoly p = commutator(c, x);
      out.instances.push_back(symbolic(in, p, red));
      if (rep) rep->check(out, in, p);
    }
    if (rep) rep->check(out, {"casimir_rank1_zero", 3, "", "the rank-1 Casimir vanishes in the representation"}, c);
  }
  Reducer red(default_system(4));
  for (int i = 0; i < 5; ++i) {
    NCPoly c = casimir_frak(i);
    for (int j = 0; j < 5; ++j) {
      Instance in{"casimir_commutes", 4, "i=" + std::to_string(i) + " x=Om" + std::to_string(j),
                  "the pentagon Casimir commutes with every Omega"};
      out.instances.push_back(symbolic(in, commutator(c, Om(j)), red));
    }
    if (!rep) continue;
    for (std::size_t k = 0; k < rep->sets.size(); ++k) {
      Evaluator& ev = *rep->evals[k];
      auto t0 = Clock::now();
      SparseOperator K = ev.eval(c);
      out.instances.push_back(judge({"casimir_zero", 4, "i=" + std::to_string(i),
                                     "the pentagon Casimir vanishes in the representation"},
                                    K, rep->sets[k].name, since(t0)));
      for (const auto& g : contiguous_basis()) {
        auto t1 = Clock::now();
        const SparseOperator& X = ev.letter(g);
        SparseOperator comm = K * X - X * K;
        out.instances.push_back(judge({"casimir_central", 4, "i=" + std::to_string(i) + " x=" + g.name(),
                                       "the pentagon Casimir commutes with the contiguous generators"},
                                      comm, rep->sets[k].name, since(t1)));
      }
    }
  }
}

void suite_symmetry(VerificationReport& out) {
  for (auto [g, want] : {std::pair{Group::D5, std::size_t{10}}, std::pair{Group::P4, std::size_t{24}}}) {
    std::size_t order = closure_order(g);
    out.instances.push_back(verdict({"closure_order", 4, group_name(g) + "=" + std::to_string(order),
                                     "order of the group generated on the 15 C's"},
                                    Method::symbolic_reduce, order == want));
  }
  // Group law on labels, all 100 pairs.
  bool law = true;
  for (const auto& a : DihedralElement::all())
    for (const auto& b : DihedralElement::all()) {
      NCPoly probe = Om(0) * Ga(1) + om(2) * Om(3) * Ga(4);
      law = law && act_dihedral(a, act_dihedral(b, probe)) == act_dihedral(a.compose(b), probe);
    }
  out.instances.push_back(verdict({"dihedral_group_law", 4, "100 pairs", "act(g, act(h, p)) = act(gh, p)"},
                                  Method::symbolic_reduce, law));
  Reducer red(default_system(4));
  for (const auto& g : DihedralElement::all())
    for (int i = 0; i < 5; ++i) {
      NCPoly diff = act_dihedral(g, casimir_frak(i)) - casimir_frak(g.apply_label(i));
      out.instances.push_back(symbolic({"casimir_covariance", 4, g.str() + " i=" + std::to_string(i),
                                        "the dihedral images of one Casimir are the others"},
                                       diff, red));
    }
}

void suite_rank1(VerificationReport& out, const std::vector<NamedParams>& sets) {
  Reducer red(default_system(3));
  auto pres = presentation_rank1(3);
  NCPoly cas = casimir_rank1(3);
  for (std::size_t k = 0; k < pres.relations.size(); ++k) {
    Instance in{"pres_rank1", 3, "k=" + std::to_string(k + 1), family_anchor(Family::pres_rank1)};
    out.instances.push_back(symbolic(in, pres.relations[k], red));
  }
  for (const auto& np : sets) {
    Evaluator ev(np.params, np.window, true);
    for (std::size_t k = 0; k < pres.relations.size(); ++k) {
      auto t0 = Clock::now();
      out.instances.push_back(judge({"pres_rank1_slice", 3, "k=" + std::to_string(k + 1),
                                     family_anchor(Family::pres_rank1)},
                                    ev.eval(pres.relations[k]), np.name, since(t0)));
    }
    auto t0 = Clock::now();
    out.instances.push_back(judge({"casimir_rank1_slice", 3, "", "the rank-1 Casimir vanishes on the slice"},
                                  ev.eval(cas), np.name, since(t0)));
    Rank1Slice sl = rank1_slice(np.params, np.window);
    bool unit = true;
    for (int j = 0; j < np.window; ++j) {
      auto img = sl.A.apply({j, 0});
      auto it = img.find({j + 1, 0});
      unit = unit && it != img.end() && it->second == Rational(1);
    }
    InstanceRecord r = verdict({"raising_coefficient", 3, "A|j> -> |j+1>", "the raising coefficient of A is 1"},
                               Method::representation_eval, unit);
    r.params = np.name;
    out.instances.push_back(std::move(r));
  }
}

std::string jacobi_case(const GeneratorId& a, const GeneratorId& b, const GeneratorId& c) {
  std::vector<GeneratorId> ps, ds;
  for (const auto& g : {a, b, c}) (g.kind() == Kind::P ? ps : ds).push_back(g);
  if (ds.size() == 3) {
    bool pairwise = true;
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y)
        pairwise = pairwise && std::popcount(static_cast<unsigned>(ds[x].mask() & ds[y].mask())) == 2;
    std::uint16_t all = ds[0].mask() | ds[1].mask() | ds[2].mask();
    if (pairwise && std::popcount(static_cast<unsigned>(all)) == 4) return "D_ijl, D_ijk, D_jkl";
    return "three D's";
  }
  if (ds.size() == 2 && std::popcount(static_cast<unsigned>(ds[0].mask() & ds[1].mask())) == 2 && ps.size() == 1) {
    std::uint16_t shared = ds[0].mask() & ds[1].mask();
    std::uint16_t outer = (ds[0].mask() | ds[1].mask()) & ~shared;
    std::uint16_t p = ps[0].mask();
    if (p == outer) return "P_il, D_ijk, D_jkl";
    if (p == shared) return "P_jk, D_ijk, D_jkl";
    if (std::popcount(static_cast<unsigned>(p & shared)) == 1 && std::popcount(static_cast<unsigned>(p & outer)) == 1)
      return "P_ij, D_ijk, D_jkl";
  }
  return std::to_string(ps.size()) + " P, " + std::to_string(ds.size()) + " D";
}

}  // namespace

std::vector<std::string> all_suites() {
  return {"definitions", "theorem_bigthm", "theorem_rn", "lemmas", "pentagon",
          "casimirs",    "jacobi",         "symmetry",   "rank1"};
}

void validate_config(const SuiteConfig& cfg) {
  if (cfg.rank < 3 || cfg.rank > kMaxRank) throw std::invalid_argument("rank must lie in 3..9");
  if (cfg.window < 0) throw std::invalid_argument("window must be nonnegative");
  auto known = all_suites();
  for (const auto& s : cfg.suites)
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  bool jac = std::find(cfg.suites.begin(), cfg.suites.end(), "jacobi") != cfg.suites.end();
  if (jac && cfg.rank > 5) throw std::invalid_argument("the jacobi suite supports ranks 3..5");
  for (const auto& np : cfg.params)
    if (auto errs = validate_params(np.params, np.window); !errs.empty())
      throw std::invalid_argument("parameter set " + np.name + ": " + errs.front());
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);
  VerificationReport out;
  std::unique_ptr<RepContext> rep;
  if (!cfg.params.empty()) rep = std::make_unique<RepContext>(cfg.params);
  std::set<std::string> want(cfg.suites.begin(), cfg.suites.end());
  if (want.contains("definitions")) suite_definitions(out, cfg.rank, rep.get());
  if (want.contains("theorem_bigthm")) suite_bigthm(out, rep.get());
  if (want.contains("theorem_rn")) suite_rn(out);
  if (want.contains("lemmas")) suite_lemmas(out, rep.get());
  if (want.contains("pentagon")) suite_pentagon(out, rep.get());
  if (want.contains("casimirs")) suite_casimirs(out, rep.get());
  if (want.contains("jacobi")) out.append(jacobi_suite(cfg.rank, cfg.params));
  if (want.contains("symmetry")) suite_symmetry(out);
  if (want.contains("rank1")) suite_rank1(out, cfg.params);
  out.sort();
  return out;
}

VerificationReport jacobi_suite(int n, const std::vector<NamedParams>& params) {
  if (n < 3 || n > 5) throw std::invalid_argument("the jacobi suite supports ranks 3..5");
  std::vector<GeneratorId> gens;
  for (const auto& g : default_system(n).alphabet())
    if (!g.is_central_P()) gens.push_back(g);
  std::unique_ptr<RepContext> rep;
  if (!params.empty() && n <= 4) rep = std::make_unique<RepContext>(params);
  Reducer red(default_system(n));
  VerificationReport out;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      for (std::size_t c = b + 1; c < gens.size(); ++c) {
        NCPoly d = catalog_jacobi_defect(gens[a], gens[b], gens[c], n);
        Instance in{"jacobi", n, gens[a].name() + " " + gens[b].name() + " " + gens[c].name(),
                    "Jacobi identity for {" + jacobi_case(gens[a], gens[b], gens[c]) + "}"};
        out.instances.push_back(symbolic(in, d, red));
        if (rep) rep->check(out, in, d);
      }
  out.sort();
  return out;
}

void VerificationReport::append(VerificationReport other) {
  for (auto& r : other.instances) instances.push_back(std::move(r));
}

void VerificationReport::sort() {
  std::stable_sort(instances.begin(), instances.end(), [](const InstanceRecord& a, const InstanceRecord& b) {
    return std::tie(a.relation, a.rank, a.payload, a.method, a.params) <
           std::tie(b.relation, b.rank, b.payload, b.method, b.params);
  });
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& r : instances) {
    switch (r.status) {
      case Status::proved_zero:
        ++s.proved_zero;
        break;
      case Status::zero_on_window:
        ++s.zero_on_window;
        break;
      case Status::inconclusive:
        ++s.inconclusive;
        break;
      case Status::failed:
        ++s.failed;
        break;
    }
  }
  return s;
}

int VerificationReport::exit_code() const { return summary().failed ? 1 : 0; }

}  // namespace racah
