#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "radica/complex.hpp"
#include "radica/corpus.hpp"
#include "radica/errors.hpp"
#include "radica/solvers.hpp"
#include "radica/tower.hpp"
#include "radica/verifier.hpp"

namespace radica {
namespace {

using TE = TowerElement;
using Caps = FieldCapabilities<TE>;

TE q(std::int64_t n, std::int64_t d = 1) { return TE::rational(BigRational(n, d)); }
TE q(const BigRational& r) { return TE::rational(r); }

template <std::size_t N>
std::vector<TE> values(const std::array<LabeledRoot<TE>, N>& roots) {
  std::vector<TE> out;
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

// Multiset equality by exact comparison.
bool same_multiset(std::vector<TE> a, std::vector<TE> b) {
  if (a.size() != b.size()) return false;
  for (const TE& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

bool same_multiset_approx(const std::vector<ComplexD>& a, const std::vector<ComplexD>& b, double tol) {
  return a.size() == b.size() && match_root_multisets(a, b, tol).matched;
}

std::vector<TE> poly(std::initializer_list<std::int64_t> coeffs) {
  std::vector<TE> out;
  for (std::int64_t c : coeffs) out.push_back(q(c));
  return out;
}

void expect_roots_of(const Caps& f, const std::vector<TE>& monic, const std::vector<TE>& roots) {
  for (const TE& r : roots) EXPECT_TRUE(horner_eval<TE>(f, monic, r).is_zero()) << r.to_string();
  const auto expanded = expand_monic_from_roots<TE>(f, roots);
  ASSERT_EQ(expanded.size(), monic.size());
  for (std::size_t k = 0; k < monic.size(); ++k) EXPECT_EQ(expanded[k], monic[k]) << "coefficient " << k;
}

class ExactSolvers : public ::testing::Test {
 protected:
  TowerField field;
  Caps f = field.capabilities();
};

TEST_F(ExactSolvers, QuadraticMonicExamples) {
  const auto r = solve_quadratic_monic(f, q(-3), q(2));
  EXPECT_EQ(r[0], q(2));
  EXPECT_EQ(r[1], q(1));
  const auto s = solve_quadratic_monic(f, q(0), q(-5));
  EXPECT_EQ(s[0] * s[0], q(5));
  EXPECT_EQ(s[1], -s[0]);
  EXPECT_GT(tower_to_complex(s[0]).real(), 0.0);
  const auto z = solve_quadratic_monic(f, q(0), q(0));
  EXPECT_TRUE(z[0].is_zero());
  EXPECT_TRUE(z[1].is_zero());
}

TEST_F(ExactSolvers, QuadraticGeneralExamples) {
  const auto r = solve_quadratic_general(f, q(2), q(-6), q(4));
  EXPECT_EQ(r[0], q(2));
  EXPECT_EQ(r[1], q(1));
  const auto s = solve_quadratic_general(f, q(1), q(0), q(-4));
  EXPECT_EQ(s[0], q(2));
  EXPECT_EQ(s[1], q(-2));
  try {
    solve_quadratic_general(f, q(0), q(1), q(1));
    FAIL();
  } catch (const DegenerateLeadingCoefficient& e) {
    EXPECT_STREQ(e.what(), "degenerate leading coefficient");
  }
}

TEST_F(ExactSolvers, DepressCubicExamples) {
  const auto a = depress_cubic(f, q(3), q(0), q(0));
  EXPECT_EQ(a.c, q(-3));
  EXPECT_EQ(a.d, q(2));
  EXPECT_EQ(a.shift, q(1));
  const auto b = depress_cubic(f, q(0), q(-7, 3), q(5));
  EXPECT_EQ(b.c, q(-7, 3));
  EXPECT_EQ(b.d, q(5));
  EXPECT_TRUE(b.shift.is_zero());
  const auto c = depress_cubic(f, q(3), q(3), q(1));
  EXPECT_TRUE(c.c.is_zero());
  EXPECT_TRUE(c.d.is_zero());
}

TEST_F(ExactSolvers, CardanoWorkedExamples) {
  EXPECT_EQ(cardano_root(f, {q(-6), q(-9), q(0)}, CubeRootBranch::plain), q(3));
  EXPECT_EQ(cardano_root(f, {q(-3), q(-2), q(0)}, CubeRootBranch::plain), q(2));
  const TE w = cardano_root(f, {q(-6), q(-9), q(0)}, CubeRootBranch::omega);
  EXPECT_TRUE((w * w + q(3) * w + q(3)).is_zero());
  EXPECT_THROW(cardano_root(f, {q(0), q(-8), q(0)}, CubeRootBranch::plain), UnsupportedCase);
}

TEST_F(ExactSolvers, CubicTotalExamples) {
  const auto a = values(cubic_roots_depressed_total(f, q(0), q(-8)));
  EXPECT_EQ(a[0], q(2));
  const TE w = omega(f);
  EXPECT_TRUE(same_multiset(a, {q(2), q(2) * w, q(2) * w * w}));
  expect_roots_of(f, poly({1, 0, 0, -8}), a);

  const auto b = values(cubic_roots_depressed_total(f, q(-4), q(0)));
  EXPECT_TRUE(same_multiset(b, {q(0), q(2), q(-2)}));

  const auto c = cubic_roots_depressed_total(f, q(-6), q(-9));
  EXPECT_EQ(c[0].value, q(3));
  EXPECT_EQ(c[0].label, "cardano-A");
  EXPECT_EQ(c[1].label, "cardano-B");
  EXPECT_EQ(c[2].label, "cardano-C");
  for (int i = 1; i < 3; ++i) {
    const TE r = c[i].value;
    EXPECT_TRUE((r * r + q(3) * r + q(3)).is_zero());
    EXPECT_NEAR(tower_to_complex(r).real(), -1.5, 1e-12);
  }
  expect_roots_of(f, poly({1, 0, -6, -9}), values(c));
}

TEST_F(ExactSolvers, SolveCubicExamples) {
  const auto a = values(solve_cubic(f, q(1), q(3), q(0), q(0)));
  EXPECT_TRUE(same_multiset(a, {q(0), q(0), q(-3)}));
  const auto b = values(solve_cubic(f, q(1), q(0), q(-6), q(-9)));
  expect_roots_of(f, poly({1, 0, -6, -9}), b);
  const auto c = values(solve_cubic(f, q(2), q(0), q(-12), q(-18)));
  EXPECT_TRUE(same_multiset(b, c));
  EXPECT_THROW(solve_cubic(f, q(0), q(1), q(2), q(3)), DegenerateLeadingCoefficient);
}

TEST_F(ExactSolvers, StrictCubicRejectsExcludedInputs) {
  EXPECT_THROW(solve_cubic_strict(f, q(1), q(0), q(0), q(-8)), UnsupportedCase);
  EXPECT_THROW(solve_cubic_strict(f, q(1), q(0), q(-4), q(0)), UnsupportedCase);
  EXPECT_THROW(solve_cubic_strict(f, q(1), q(3), q(3), q(1)), UnsupportedCase);
  const auto r = values(solve_cubic_strict(f, q(1), q(0), q(-6), q(-9)));
  expect_roots_of(f, poly({1, 0, -6, -9}), r);
}

TEST_F(ExactSolvers, DepressQuarticExamples) {
  const auto a = depress_quartic(f, q(4), q(0), q(0), q(0));
  EXPECT_EQ(a.c, q(-6));
  EXPECT_EQ(a.d, q(8));
  EXPECT_EQ(a.e, q(-3));
  EXPECT_EQ(a.shift, q(1));
  const auto b = depress_quartic(f, q(0), q(2), q(-1, 2), q(7));
  EXPECT_EQ(b.c, q(2));
  EXPECT_EQ(b.d, q(-1, 2));
  EXPECT_EQ(b.e, q(7));
  const auto c = depress_quartic(f, q(4), q(6), q(4), q(1));
  EXPECT_TRUE(c.c.is_zero());
  EXPECT_TRUE(c.d.is_zero());
  EXPECT_TRUE(c.e.is_zero());
}

TEST_F(ExactSolvers, ResolventExamples) {
  const auto a = resolvent_coeffs(f, q(2), q(1), q(2));
  EXPECT_EQ(a.b, q(4));
  EXPECT_EQ(a.c, q(-4));
  EXPECT_EQ(a.d, q(-1));
  // P = 1 is a root
  EXPECT_TRUE((q(1) + a.b + a.c + a.d).is_zero());
  const auto b = resolvent_coeffs(f, q(0), q(0), q(5));
  EXPECT_TRUE(b.b.is_zero());
  EXPECT_EQ(b.c, q(-20));
  EXPECT_TRUE(b.d.is_zero());
}

TEST_F(ExactSolvers, SplitFromEitherSquareRoot) {
  const auto a = quartic_split_from_p(f, q(2), q(1), q(1));
  EXPECT_EQ(a.q, q(1));
  EXPECT_EQ(a.s, q(2));
  const auto b = quartic_split_from_p(f, q(2), q(1), q(-1));
  EXPECT_EQ(b.q, q(2));
  EXPECT_EQ(b.s, q(1));
  for (const auto& split : {a, b}) {
    const std::vector<TE> left{q(1), split.p, split.q};
    const std::vector<TE> right{q(1), -split.p, split.s};
    const auto product = poly_mul<TE>(f, left, right);
    const auto target = poly({1, 0, 2, 1, 2});
    for (std::size_t k = 0; k < target.size(); ++k) EXPECT_EQ(product[k], target[k]);
  }
}

TEST_F(ExactSolvers, SplitDepressed) {
  const auto split = quartic_split_depressed(f, q(2), q(1), q(2));
  const std::vector<TE> left{q(1), split.p, split.q};
  const std::vector<TE> right{q(1), -split.p, split.s};
  const auto product = poly_mul<TE>(f, left, right);
  const auto target = poly({1, 0, 2, 1, 2});
  for (std::size_t k = 0; k < target.size(); ++k) EXPECT_EQ(product[k], target[k]);
  try {
    quartic_split_depressed(f, q(3), q(0), q(1));
    FAIL();
  } catch (const UnsupportedCase& e) {
    EXPECT_NE(std::string(e.what()).find("biquadratic case"), std::string::npos);
  }
}

TEST_F(ExactSolvers, QuarticTotalExamples) {
  const auto a = quartic_roots_depressed_total(f, q(-5), q(0), q(4));
  EXPECT_TRUE(same_multiset(values(a), {q(1), q(-1), q(2), q(-2)}));
  const auto b = values(quartic_roots_depressed_total(f, q(2), q(1), q(2)));
  expect_roots_of(f, poly({1, 0, 2, 1, 2}), b);
  // The resolvent's rational root is reached through a cube root that already
  // lies in the lower level, so this tower has zero divisors: the product of
  // the two factors vanishes exactly but each factor is only zero under the
  // embedding.
  int first_factor = 0;
  for (const TE& r : b) first_factor += std::abs(tower_to_complex(r * r + r + q(1))) < 1e-9 ? 1 : 0;
  EXPECT_EQ(first_factor, 2);
  const auto c = values(quartic_roots_depressed_total(f, q(0), q(0), q(0)));
  for (const TE& r : c) EXPECT_TRUE(r.is_zero());
}

TEST_F(ExactSolvers, SolveQuarticExamples) {
  const auto a = values(solve_quartic(f, q(1), q(4), q(0), q(0), q(0)));
  EXPECT_TRUE(same_multiset(a, {q(0), q(0), q(0), q(-4)}));
  const auto b = values(solve_quartic(f, q(1), q(0), q(2), q(1), q(2)));
  expect_roots_of(f, poly({1, 0, 2, 1, 2}), b);
  const auto c = values(solve_quartic(f, q(3), q(0), q(6), q(3), q(6)));
  EXPECT_TRUE(same_multiset(b, c));
  EXPECT_THROW(solve_quartic(f, q(0), q(1), q(0), q(0), q(1)), DegenerateLeadingCoefficient);
}

TEST_F(ExactSolvers, StrictQuarticRejectsExcludedInputs) {
  EXPECT_THROW(solve_quartic_strict(f, q(1), q(0), q(-5), q(0), q(4)), UnsupportedCase);
  EXPECT_THROW(solve_quartic_strict(f, q(1), q(0), q(1), q(1), q(0)), UnsupportedCase);
  EXPECT_THROW(solve_quartic_strict(f, q(1), q(0), q(6), q(1), q(-3)), UnsupportedCase);
  const auto r = values(solve_quartic_strict(f, q(1), q(0), q(2), q(1), q(2)));
  expect_roots_of(f, poly({1, 0, 2, 1, 2}), r);
  // default mode handles each rejected input
  expect_roots_of(f, poly({1, 0, 6, 1, -3}), values(solve_quartic(f, q(1), q(0), q(6), q(1), q(-3))));
  expect_roots_of(f, poly({1, 0, 1, 1, 0}), values(solve_quartic(f, q(1), q(0), q(1), q(1), q(0))));
}

BigRational eval_rational(const std::vector<BigRational>& coeffs, const BigRational& x) {
  BigRational acc(0);
  for (const BigRational& c : coeffs) acc = acc * x + c;
  return acc;
}

TEST_F(ExactSolvers, DepressRoundTripProperty) {
  Rng rng(seed_from_environment(404));
  for (int i = 0; i < 300; ++i) {
    const BigRational b = random_rational(rng, 20), c = random_rational(rng, 20), d = random_rational(rng, 20),
                      e = random_rational(rng, 20), u = random_rational(rng, 20);
    const auto dc = depress_cubic(f, q(b), q(c), q(d));
    const BigRational shift3 = dc.shift.constant_term();
    ASSERT_EQ(eval_rational({1, b, c, d}, u - shift3),
              eval_rational({1, 0, dc.c.constant_term(), dc.d.constant_term()}, u));
    const auto dq = depress_quartic(f, q(b), q(c), q(d), q(e));
    const BigRational shift4 = dq.shift.constant_term();
    ASSERT_EQ(eval_rational({1, b, c, d, e}, u - shift4),
              eval_rational({1, 0, dq.c.constant_term(), dq.d.constant_term(), dq.e.constant_term()}, u));
  }
}

TEST_F(ExactSolvers, ScaleInvariance) {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    TowerField field;
    const Caps f = field.capabilities();
    const TE k = q(random_nonzero_rational(rng, 9));
    const TE b = q(random_rational(rng, 9)), c = q(random_rational(rng, 9)), d = q(random_rational(rng, 9));
    const auto plain = values(solve_cubic(f, q(1), b, c, d));
    const auto scaled = values(solve_cubic(f, k, k * b, k * c, k * d));
    ASSERT_TRUE(same_multiset(plain, scaled));
  }
}

TEST_F(ExactSolvers, OffRootPointsHaveNonzeroResidual) {
  Rng rng(12);
  const auto cubic = poly({1, 0, -6, -9});
  for (int i = 0; i < 50; ++i) {
    const TE x = q(random_rational(rng, 40)) + q(random_rational(rng, 5)) * omega(f);
    if (x == q(3)) continue;
    const TE w = x;
    ASSERT_FALSE(horner_eval<TE>(f, cubic, w).is_zero()) << w.to_string();
  }
}

TEST(ComplexSolvers, BranchTotalityUnderNegatedSqrt) {
  const auto f = complex_capabilities();
  auto g = f;
  g.sqrt = [](const ComplexD& z) { return -csqrt_principal(z); };
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const ComplexD c = random_complex(rng, 5.0), d = random_complex(rng, 5.0);
    const DepressedCubic<ComplexD> dc{c, d, {}};
    std::vector<ComplexD> a, b;
    for (auto branch : {CubeRootBranch::plain, CubeRootBranch::omega, CubeRootBranch::omega_squared}) {
      a.push_back(cardano_root(f, dc, branch));
      b.push_back(cardano_root(g, dc, branch));
    }
    ASSERT_TRUE(same_multiset_approx(a, b, 1e-8)) << c << " " << d;
  }
}

TEST(ComplexSolvers, QuarticResidualsOnRandomInputs) {
  const auto f = complex_capabilities();
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    std::vector<ComplexD> coeffs{1.0};
    for (int k = 0; k < 4; ++k) coeffs.push_back(random_complex(rng, 5.0));
    const auto roots = solve_quartic(f, coeffs[0], coeffs[1], coeffs[2], coeffs[3], coeffs[4]);
    for (const auto& r : roots) {
      double scale = 0.0;
      for (std::size_t k = 0; k < coeffs.size(); ++k) scale += std::abs(coeffs[k]) * std::pow(std::abs(r.value), 4 - k);
      ASSERT_LE(std::abs(horner_eval<ComplexD>(f, coeffs, r.value)), 1e-9 * scale) << r.label;
    }
  }
}

// Builds original coefficients from depressed ones so that the zero cases of
// every condition occur often.
struct CubicTuple {
  BigRational a, b, c, d;
  BigRational dep_c, dep_d;
};

CubicTuple random_cubic_tuple(Rng& rng) {
  const BigRational dep_c = rng() % 3 == 0 ? BigRational(0) : random_rational(rng, 9);
  const BigRational dep_d = rng() % 3 == 0 ? BigRational(0) : random_rational(rng, 9);
  const BigRational s = random_rational(rng, 9);  // x = u - s, u = x + s
  const BigRational a = random_nonzero_rational(rng, 9);
  // a * ((x+s)^3 + dep_c (x+s) + dep_d)
  return {a, a * 3 * s, a * (3 * s * s + dep_c), a * (s * s * s + dep_c * s + dep_d), dep_c, dep_d};
}

TEST_F(ExactSolvers, CubicConditionEquivalence) {
  Rng rng(55);
  int zeros = 0;
  for (int i = 0; i < 500; ++i) {
    const CubicTuple t = random_cubic_tuple(rng);
    const auto cond = cubic_conditions(f, q(t.a), q(t.b), q(t.c), q(t.d));
    const auto inv = q(t.a.inverse());
    const auto dc = depress_cubic(f, q(t.b) * inv, q(t.c) * inv, q(t.d) * inv);
    ASSERT_EQ(dc.c, q(t.dep_c));
    ASSERT_EQ(dc.d, q(t.dep_d));
    ASSERT_EQ(cond.linear.is_zero(), dc.c.is_zero());
    ASSERT_EQ(cond.constant.is_zero(), dc.d.is_zero());
    zeros += cond.linear.is_zero() || cond.constant.is_zero();
  }
  EXPECT_GT(zeros, 100);
}

TEST_F(ExactSolvers, QuarticConditionEquivalence) {
  Rng rng(56);
  int zeros = 0;
  for (int i = 0; i < 500; ++i) {
    BigRational dc = random_rational(rng, 6);
    const BigRational dd = rng() % 3 == 0 ? BigRational(0) : random_rational(rng, 6);
    BigRational de = rng() % 3 == 0 ? BigRational(0) : random_rational(rng, 6);
    if (rng() % 4 == 0) de = -(dc * dc) / 12;
    const BigRational s = random_rational(rng, 6);
    // (x+s)^4 + dc (x+s)^2 + dd (x+s) + de
    const BigRational b = 4 * s, c = 6 * s * s + dc, d = 4 * s * s * s + 2 * dc * s + dd,
                      e = s * s * s * s + dc * s * s + dd * s + de;
    const auto cond = quartic_conditions(f, q(b), q(c), q(d), q(e));
    const auto dq = depress_quartic(f, q(b), q(c), q(d), q(e));
    ASSERT_EQ(dq.c, q(dc));
    ASSERT_EQ(dq.d, q(dd));
    ASSERT_EQ(dq.e, q(de));
    ASSERT_EQ(cond.linear.is_zero(), dq.d.is_zero());
    ASSERT_EQ(cond.constant.is_zero(), dq.e.is_zero());
    ASSERT_EQ(cond.resolvent.is_zero(), (dq.c * dq.c + q(12) * dq.e).is_zero());
    zeros += cond.resolvent.is_zero();
  }
  EXPECT_GT(zeros, 50);
}

}  // namespace
}  // namespace radica
