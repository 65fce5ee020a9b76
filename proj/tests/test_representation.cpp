#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "racah/expr.hpp"
#include "racah/relations.hpp"
#include "racah/representation.hpp"
#include "gen.hpp"

using namespace racah;

namespace {

RepParams unit_params() { return {1, 1, 1, 1, 3}; }
RepParams generic_params() { return {Rational(1, 3), Rational(1, 5), Rational(2, 7), Rational(1, 2), 4}; }

Rational at(const std::map<std::pair<int, int>, Rational>& m, int dt, int ds) {
  auto it = m.find({dt, ds});
  return it == m.end() ? Rational(0) : it->second;
}

GeneratorId gid(const char* name) { return parse_generator(name, 4); }

const RepGen kGens[] = {RepGen::C12, RepGen::C23, RepGen::C123, RepGen::C34, RepGen::C234};

}  // namespace

TEST(Representation, ValidateParams) {
  EXPECT_TRUE(validate_params(unit_params(), 4).empty());
  auto errs = validate_params(unit_params(), 6);
  ASSERT_EQ(errs.size(), 2u);
  EXPECT_NE(errs[0].find("s=5"), std::string::npos);
  EXPECT_NE(errs[1].find("s=6"), std::string::npos);
  for (int w : {1, 12, 40}) EXPECT_TRUE(validate_params(generic_params(), w).empty());
  EXPECT_THROW(build_operator(gid("C12"), unit_params(), 6), std::invalid_argument);
}

// Hand evaluation at c = (1,1,1,1), N = 3: n12 = n23 = 5, n123 = 6, n1234 = 7.
TEST(Representation, SpotValues) {
  RepParams p = unit_params();
  EXPECT_EQ(p.n({1, 2}), Rational(5));
  EXPECT_EQ(p.n({1, 2, 3}), Rational(6));
  EXPECT_EQ(p.n({1, 2, 3, 4}), Rational(7));
  for (int s = 0; s <= 2; ++s) EXPECT_EQ(at(coeff(RepGen::C23, 2, s, p), 0, 0), Rational(3 * 2));
  EXPECT_EQ(at(coeff(RepGen::C12, 1, 0, p), -1, 0), Rational(-1 * 3 * 4 * 10));
  for (int t = 0; t <= 4; ++t) EXPECT_EQ(at(coeff(RepGen::C12, t, t, p), -1, 0), Rational(0));
  for (int t = 1; t <= 4; ++t) EXPECT_EQ(at(coeff(RepGen::C123, t, 1, p), 0, 0), Rational(5 * 4));
  // psi = 1/2 + 6*7 / (2*6*5)
  EXPECT_EQ(at(coeff(RepGen::C234, 2, 0, p), 1, 0), Rational(1, 2) + Rational(42, 60));
  EXPECT_EQ(at(coeff(RepGen::C234, 2, 0, p), 1, 0), Rational(6, 5));
  // psi-check at s = 1: 1*2*11*12 / (4*11*9*25)
  EXPECT_EQ(at(coeff(RepGen::C234, 3, 1, p), 1, -1), Rational(264, 9900));
  EXPECT_EQ(Rational(264, 9900), Rational(2, 75));
  for (int t = 0; t <= 4; ++t) {
    EXPECT_EQ(at(coeff(RepGen::C234, t, 0, p), 0, -1), Rational(0));
    EXPECT_EQ(at(coeff(RepGen::C234, t, 0, p), 1, -1), Rational(0));
    EXPECT_EQ(at(coeff(RepGen::C234, t, t, p), 0, 1), Rational(0));
  }
}

TEST(Representation, RaisingAndScalars) {
  RepParams p = unit_params();
  auto c23 = build_operator(gid("C23"), p, 4);
  LinearCombo expect{{{0, 0}, Rational(20)}, {{1, 0}, Rational(1)}};
  EXPECT_EQ(c23.apply({0, 0}), expect);
  EXPECT_EQ(combo_str(c23.apply({0, 0})), "20|0,0> + 1|1,0>");

  RepParams q = generic_params();
  for (int i = 1; i <= 4; ++i) {
    auto op = build_operator(GeneratorId::C({i}), q, 6);
    EXPECT_TRUE(op.equal_on_reliable(SparseOperator::scalar(q.c(i) * (q.c(i) - 1), 6, false)));
  }
  Rational n = q.n({1, 2, 3, 4});
  EXPECT_TRUE(build_operator(gid("C1234"), q, 6).equal_on_reliable(SparseOperator::scalar(n * (n - 1), 6, false)));
}

TEST(Representation, C123DiagonalInS) {
  RepParams p = generic_params();
  auto op = build_operator(gid("C123"), p, 8);
  for (std::size_t x = 0; x < op.dim(); ++x) {
    const auto& st = op.states()[x];
    auto img = op.apply(st);
    ASSERT_EQ(img.size(), 1u);
    EXPECT_EQ(img.begin()->first, st);
    Rational nu = (p.n({1, 2, 3}) - st.s) * (p.n({1, 2, 3}) - st.s - 1);
    EXPECT_EQ(img.begin()->second, nu);
  }
}

// Every nonzero displacement lands on the lattice, including at t = 0, s = 0, s = t.
TEST(Representation, LatticeClosure) {
  std::vector<RepParams> ps{unit_params(), generic_params(), random_params(99, 10)};
  for (const auto& p : ps) {
    int window = p == unit_params() ? 4 : 10;
    for (int t = 0; t <= window; ++t)
      for (int s = 0; s <= t; ++s)
        for (RepGen g : kGens)
          for (const auto& [d, v] : coeff(g, t, s, p)) {
            EXPECT_FALSE(v.is_zero());
            EXPECT_TRUE((LatticeState{t + d.first, s + d.second}.on_lattice()))
                << rep_gen_name(g) << " |" << t << "," << s << ">";
          }
    for (const auto& g : contiguous_basis()) EXPECT_NO_THROW(build_operator(g, p, window));
  }
}

TEST(Representation, CommutingPairs) {
  for (const auto& set : default_param_sets(5, 10)) {
    Evaluator ev(set.params, set.window);
    for (const char* e : {"[C12, C34]", "[C23, C234]", "[C123, C12]", "[C123, C23]"}) {
      auto op = ev.eval(parse_expr(e, 4));
      EXPECT_FALSE(op.nonzero_reliable_column().has_value()) << set.name << " " << e;
      EXPECT_GT(op.reliable_count(), 0u);
    }
  }
}

TEST(Representation, EvalHomomorphism) {
  std::mt19937_64 rng(41);
  auto letters = testgen::c_letters(4);
  Evaluator ev(generic_params(), 8);
  auto one = ev.eval(NCPoly::constant(1, 4));
  EXPECT_TRUE(one.equal_on_reliable(SparseOperator::scalar(1, 8, false)));
  for (int it = 0; it < 100; ++it) {
    NCPoly a = testgen::random_poly(rng, 4, letters, 3, 2), b = testgen::random_poly(rng, 4, letters, 3, 2);
    auto A = ev.eval(a), B = ev.eval(b);
    EXPECT_TRUE(ev.eval(a * b).equal_on_reliable(A * B)) << a.str() << " | " << b.str();
    EXPECT_TRUE(ev.eval(a + b).equal_on_reliable(A + B));
  }
}

TEST(Representation, Leakage) {
  auto c23 = build_operator(gid("C23"), generic_params(), 3);
  bool leaked = false;
  c23.apply({3, 1}, &leaked);
  EXPECT_TRUE(leaked);
  c23.apply({2, 1}, &leaked);
  EXPECT_FALSE(leaked);
  auto sq = c23 * c23;
  EXPECT_TRUE(sq.leaky(*sq.index_of({2, 0})));
  EXPECT_FALSE(sq.leaky(*sq.index_of({1, 0})));
  EXPECT_EQ(sq.reliable_count(), 3u);
}

TEST(Representation, EveryRelationVanishes) {
  for (const auto& set : default_param_sets(13, 8)) {
    Evaluator ev(set.params, set.window);
    for (Family f : all_families())
      for (const auto& id : enumerate(f, 4)) {
        if (f == Family::pres_rank1) continue;
        EXPECT_FALSE(ev.eval(relation(id)).nonzero_reliable_column().has_value())
            << set.name << " " << family_name(f) << " " << id.payload();
      }
  }
}

// The diagonal of C34 with the factors shifted as in the printed display
// breaks [C34, C234] = 0, a nested-pair central relation.
TEST(Representation, VarthetaStarCorrection) {
  RepParams p = generic_params();
  int w = 8;
  auto c234 = build_operator(gid("C234"), p, w);
  auto c34 = build_operator(gid("C34"), p, w);
  auto printed = c34;
  for (std::size_t x = 0; x < printed.dim(); ++x) {
    const auto& st = printed.states()[x];
    printed.set(x, x, vartheta_star(st.t, st.s, p, true));
  }
  EXPECT_NE(vartheta_star(2, 1, p), vartheta_star(2, 1, p, true));
  EXPECT_FALSE((c234 * c34 - c34 * c234).nonzero_reliable_column().has_value());
  EXPECT_TRUE((c234 * printed - printed * c234).nonzero_reliable_column().has_value());
}

TEST(Representation, Rank1Slice) {
  for (const auto& set : default_param_sets(3, 10)) {
    auto sl = rank1_slice(set.params, set.window);
    auto img = sl.A.apply({0, 0});
    EXPECT_EQ(img.at({1, 0}), Rational(1));
    EXPECT_EQ(img.at({0, 0}), at(coeff(RepGen::C23, 0, 0, set.params), 0, 0));
    Evaluator ev(set.params, set.window, true);
    for (const auto& rel : presentation_rank1(4).relations)
      EXPECT_FALSE(ev.eval(rel).nonzero_reliable_column().has_value()) << set.name;
    EXPECT_FALSE(ev.eval(casimir_rank1(4)).nonzero_reliable_column().has_value()) << set.name;
  }
  EXPECT_THROW(build_operator(gid("C34"), generic_params(), 4, true), std::invalid_argument);
}

TEST(Representation, RandomParamsAreValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(validate_params(random_params(seed, 12), 12).empty());
  EXPECT_EQ(random_params(5, 12), random_params(5, 12));
}
