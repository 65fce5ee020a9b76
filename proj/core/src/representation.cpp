#include "racah/representation.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "racah/relations.hpp"

namespace racah {

Rational RepParams::c(int i) const {
  switch (i) {
    case 1:
      return c1;
    case 2:
      return c2;
    case 3:
      return c3;
    case 4:
      return c4;
    default:
      throw std::out_of_range("c_i needs i in 1..4");
  }
}

Rational RepParams::n(std::initializer_list<int> M) const {
  Rational out = N;
  for (int i : M) out += c(i);
  return out;
}

std::string RepParams::str() const {
  return "c=(" + c1.str() + "," + c2.str() + "," + c3.str() + "," + c4.str() + ") N=" + N.str();
}

std::vector<std::string> validate_params(const RepParams& p, int window) {
  std::vector<std::string> errs;
  if (window < 0) errs.push_back("window must be nonnegative");
  const Rational n123 = p.n({1, 2, 3});
  for (int s = 0; s <= window; ++s) {
    const Rational S(s);
    const std::pair<const char*, Rational> checks[] = {
        {"n123 - s", n123 - S},
        {"n123 - s - 1", n123 - S - Rational(1)},
        {"2 n123 - 2 s + 1", Rational(2) * n123 - Rational(2) * S + Rational(1)},
        {"2 n123 - 2 s - 1", Rational(2) * n123 - Rational(2) * S - Rational(1)},
    };
    for (const auto& [what, v] : checks)
      if (v.is_zero()) errs.push_back(std::string(what) + " vanishes at s=" + std::to_string(s));
  }
  return errs;
}

std::string combo_str(const LinearCombo& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [st, c] : v) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    if (a.sign() < 0) a = -a;
    os << a.str() << "|" << st.str() << ">";
    first = false;
  }
  return os.str();
}

std::optional<RepGen> rep_gen(const GeneratorId& g) {
  if (g.kind() != Kind::C) return std::nullopt;
  if (g.mask() == index_mask({1, 2})) return RepGen::C12;
  if (g.mask() == index_mask({2, 3})) return RepGen::C23;
  if (g.mask() == index_mask({1, 2, 3})) return RepGen::C123;
  if (g.mask() == index_mask({3, 4})) return RepGen::C34;
  if (g.mask() == index_mask({2, 3, 4})) return RepGen::C234;
  return std::nullopt;
}

std::string rep_gen_name(RepGen g) {
  static const char* names[] = {"C12", "C23", "C123", "C34", "C234"};
  return names[static_cast<int>(g)];
}

// ---- coefficients ------------------------------------------------------------

namespace {

struct Env {
  Rational t, s, N, c1, c2, c3, c4, n12, n23, n123, n1234;
  Env(int t_, int s_, const RepParams& p)
      : t(t_), s(s_), N(p.N), c1(p.c1), c2(p.c2), c3(p.c3), c4(p.c4), n12(p.n({1, 2})), n23(p.n({2, 3})),
        n123(p.n({1, 2, 3})), n1234(p.n({1, 2, 3, 4})) {}
};

const Rational one(1), two(2), half(1, 2);

Rational phi(const Env& e) { return (e.s - e.t) * (e.N + one - e.t) * (e.N + two * e.c2 - e.t) * (two * e.n123 - e.t - e.s - one); }

Rational den(const Env& e) {
  Rational a = e.n123 - e.s;
  return Rational(4) * (two * e.n123 - two * e.s + one) * (two * e.n123 - two * e.s - one) * a * a;
}

Rational psi(const Env& e) {
  return half + e.n123 * (e.n123 + two * e.c4 - one) / (two * (e.n123 - e.s) * (e.n123 - e.s - one));
}

// Shared tail of the two six-term diagonals.
Rational diag_tail(const Env& e) {
  return e.n1234 * (e.n1234 - one) / two - (e.n123 - e.s) * (e.n123 - e.s - one) / two;
}

}  // namespace

Rational vartheta_star(int t, int s, const RepParams& p, bool as_printed) {
  Env e(t, s, p);
  Rational lead = as_printed ? e.n123 * (e.n123 - e.t) * (e.n12 - e.c3 - e.t - one)
                             : e.n123 * (e.n123 - e.t - one) * (e.n12 - e.c3 - e.t);
  return -lead * (e.n123 + two * e.c4 - one) / (two * (e.n123 - e.s) * (e.n123 - e.s - one)) + diag_tail(e) +
         (e.n12 - e.t) * (e.n12 - e.t - one) / two + (e.c3 * (e.c3 - one) + e.c4 * (e.c4 - one)) / two;
}

std::map<std::pair<int, int>, Rational> coeff(RepGen gen, int t, int s, const RepParams& p) {
  LatticeState st{t, s};
  if (!st.on_lattice()) throw std::invalid_argument("state |" + st.str() + "> is not on the lattice");
  Env e(t, s, p);
  std::map<std::pair<int, int>, Rational> out;
  auto put = [&](int dt, int ds, const Rational& v) {
    if (!v.is_zero()) out[{dt, ds}] = v;
  };
  switch (gen) {
    case RepGen::C12:
      put(-1, 0, phi(e));
      put(0, 0, (e.n12 - e.t) * (e.n12 - e.t - one));
      break;
    case RepGen::C23:
      put(0, 0, (e.n23 - e.t) * (e.n23 - e.t - one));
      put(1, 0, one);
      break;
    case RepGen::C123:
      put(0, 0, (e.n123 - e.s) * (e.n123 - e.s - one));
      break;
    case RepGen::C34: {
      const Rational lower = e.s * (e.s + two * e.c4 - one) * (two * e.n123 - e.s) * (two * e.n1234 - e.s - one) / den(e);
      put(-1, 1, -(e.s - e.t) * (e.s - e.t + one) * (e.N + one - e.t) * (e.N + two * e.c2 - e.t));
      put(0, 1, -(e.s - e.t) * (e.s - two * e.c3 - e.t + one));
      put(-1, 0, phi(e) * (one - psi(e)));
      put(0, 0, vartheta_star(t, s, p));
      put(-1, -1, -lower * (two * e.n123 - e.t - e.s - one) * (e.N + one - e.t) * (two * e.n123 - e.t - e.s) *
                      (e.N + two * e.c2 - e.t));
      put(0, -1, -lower * (two * e.n123 - e.t - e.s - one) * (two * e.n12 - e.s - e.t));
      break;
    }
    case RepGen::C234: {
      const Rational lower = e.s * (e.s + two * e.c4 - one) * (two * e.n123 - e.s) * (two * e.n1234 - e.s - one) / den(e);
      put(0, 1, (e.s - e.t) * (two * e.n23 - e.s - e.t - one));
      put(1, 1, one);
      put(0, 0, e.n123 * (e.n123 - e.t - one) * (e.n23 - e.c1 - e.t) * (e.n123 + two * e.c4 - one) /
                        (two * (e.n123 - e.s) * (e.n123 - e.s - one)) +
                    diag_tail(e) + (e.n23 - e.t) * (e.n23 - e.t - one) / two +
                    (e.c1 * (e.c1 - one) + e.c4 * (e.c4 - one)) / two);
      put(1, 0, psi(e));
      put(0, -1, lower * (-two * e.c1 + e.s - e.t) * (two * e.n123 - e.t - e.s - one));
      put(1, -1, lower);
      break;
    }
  }
  return out;
}

// ---- sparse operators ----------------------------------------------------------

namespace {

const std::vector<LatticeState>& state_table(int window, bool slice) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<LatticeState>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& v = cache[{window, slice}];
  if (v.empty())
    for (int t = 0; t <= window; ++t)
      for (int s = 0; s <= (slice ? 0 : t); ++s) v.push_back({t, s});
  return v;
}

}  // namespace

SparseOperator::SparseOperator(int window, bool slice) : window_(window), slice_(slice) {
  if (window < 0) throw std::invalid_argument("window must be nonnegative");
  std::size_t d = state_table(window, slice).size();
  cols_.resize(d);
  leak_.assign(d, 0);
}

SparseOperator SparseOperator::scalar(const Rational& c, int window, bool slice) {
  SparseOperator op(window, slice);
  if (!c.is_zero())
    for (std::size_t x = 0; x < op.dim(); ++x) op.cols_[x].emplace(static_cast<std::uint32_t>(x), c);
  return op;
}

const std::vector<LatticeState>& SparseOperator::states() const { return state_table(window_, slice_); }

std::optional<std::size_t> SparseOperator::index_of(const LatticeState& st) const {
  if (!st.on_lattice() || st.t > window_) return std::nullopt;
  if (slice_) {
    if (st.s != 0) return std::nullopt;
    return static_cast<std::size_t>(st.t);
  }
  return static_cast<std::size_t>(st.t * (st.t + 1) / 2 + st.s);
}

void SparseOperator::set(std::size_t col, std::size_t row, const Rational& v) {
  auto& c = cols_.at(col);
  if (v.is_zero())
    c.erase(static_cast<std::uint32_t>(row));
  else
    c[static_cast<std::uint32_t>(row)] = v;
}

void SparseOperator::check_compatible(const SparseOperator& o) const {
  if (window_ != o.window_ || slice_ != o.slice_) throw std::invalid_argument("operators on different windows");
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& o) {
  check_compatible(o);
  for (std::size_t x = 0; x < cols_.size(); ++x) {
    leak_[x] |= o.leak_[x];
    for (const auto& [y, v] : o.cols_[x]) {
      auto [it, inserted] = cols_[x].emplace(y, v);
      if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) cols_[x].erase(it);
      }
    }
  }
  return *this;
}

SparseOperator& SparseOperator::operator*=(const Rational& c) {
  if (c.is_zero()) {
    for (auto& col : cols_) col.clear();
    return *this;
  }
  for (auto& col : cols_)
    for (auto& [y, v] : col) v *= c;
  return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  a.check_compatible(b);
  SparseOperator out(a.window_, a.slice_);
  for (std::size_t x = 0; x < b.cols_.size(); ++x) {
    out.leak_[x] = b.leak_[x];
    auto& col = out.cols_[x];
    for (const auto& [y, v] : b.cols_[x]) {
      if (a.leak_[y]) out.leak_[x] = 1;
      for (const auto& [z, w] : a.cols_[y]) {
        auto [it, inserted] = col.emplace(z, v * w);
        if (!inserted) {
          it->second += v * w;
          if (it->second.is_zero()) col.erase(it);
        }
      }
    }
  }
  return out;
}

LinearCombo SparseOperator::apply(const LatticeState& st, bool* leaked) const {
  auto idx = index_of(st);
  if (!idx) throw std::out_of_range("state |" + st.str() + "> is outside the window");
  LinearCombo out;
  const auto& sts = states();
  for (const auto& [y, v] : cols_[*idx]) out.emplace(sts[y], v);
  if (leaked) *leaked = leak_[*idx] != 0;
  return out;
}

std::size_t SparseOperator::reliable_count() const {
  return static_cast<std::size_t>(std::count(leak_.begin(), leak_.end(), 0));
}

std::optional<std::size_t> SparseOperator::nonzero_reliable_column() const {
  for (std::size_t x = 0; x < cols_.size(); ++x)
    if (!leak_[x] && !cols_[x].empty()) return x;
  return std::nullopt;
}

bool SparseOperator::equal_on_reliable(const SparseOperator& o) const {
  check_compatible(o);
  for (std::size_t x = 0; x < cols_.size(); ++x)
    if (!leak_[x] && !o.leak_[x] && cols_[x] != o.cols_[x]) return false;
  return true;
}

SparseOperator build_operator(const GeneratorId& g, const RepParams& p, int window, bool slice) {
  if (auto errs = validate_params(p, window); !errs.empty())
    throw std::invalid_argument("invalid parameters: " + errs.front());
  if (g.kind() != Kind::C || g.max_index() > 4) throw std::invalid_argument(g.name() + " has no direct matrix");
  const auto idx = g.indices();
  if (idx.size() == 1) return SparseOperator::scalar(p.c(idx[0]) * (p.c(idx[0]) - Rational(1)), window, slice);
  if (idx.size() == 4) {
    Rational n = p.n({1, 2, 3, 4});
    return SparseOperator::scalar(n * (n - Rational(1)), window, slice);
  }
  auto rg = rep_gen(g);
  if (!rg) throw std::invalid_argument(g.name() + " is not a contiguous generator");
  if (slice && (*rg == RepGen::C34 || *rg == RepGen::C234))
    throw std::invalid_argument(g.name() + " does not preserve the rank-1 slice");
  SparseOperator op(window, slice);
  const auto& sts = op.states();
  for (std::size_t x = 0; x < sts.size(); ++x) {
    for (const auto& [d, v] : coeff(*rg, sts[x].t, sts[x].s, p)) {
      LatticeState to{sts[x].t + d.first, sts[x].s + d.second};
      if (!to.on_lattice())
        throw std::logic_error("nonzero coefficient of " + g.name() + " maps |" + sts[x].str() + "> off the lattice");
      if (to.t > window) {
        op.mark_leaky(x);
        continue;
      }
      op.set(x, *op.index_of(to), v);
    }
  }
  return op;
}

std::vector<int> probe_invariant_rows(const RepParams& p, int window) {
  if (auto errs = validate_params(p, window); !errs.empty())
    throw std::invalid_argument("invalid parameters: " + errs.front());
  std::vector<int> rows;
  for (int t = 1; t <= window; ++t) {
    bool closed = true;
    for (int s = 0; s <= t && closed; ++s)
      for (RepGen g : {RepGen::C12, RepGen::C23, RepGen::C123, RepGen::C34, RepGen::C234})
        for (const auto& [d, v] : coeff(g, t, s, p))
          if (d.first < 0) closed = false;
    if (closed) rows.push_back(t);
  }
  return rows;
}

RepParams random_params(std::uint64_t seed, int window) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 23), den(2, 13);
  for (;;) {
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    RepParams p{draw(), draw(), draw(), draw(), draw()};
    if (validate_params(p, window).empty()) return p;
  }
}

std::vector<NamedParams> default_param_sets(std::uint64_t seed, int window) {
  return {
      {"i", RepParams{1, 1, 1, 1, 3}, std::min(window, 4)},
      {"ii", RepParams{Rational(1, 3), Rational(1, 5), Rational(2, 7), Rational(1, 2), 4}, window},
      {"iii", random_params(seed, window), window},
  };
}

}  // namespace racah
