#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "radica/complex.hpp"
#include "radica/corpus.hpp"
#include "radica/errors.hpp"
#include "radica/solve.hpp"
#include "radica/tower.hpp"
#include "radica/verifier.hpp"

namespace radica {
namespace {

const ComplexD kR{-1.5, std::sqrt(3.0) / 2.0};  // root of u^2 + 3u + 3

TEST(Horner, Examples) {
  const auto f = complex_capabilities();
  const std::vector<ComplexD> p{1.0, 0.0, -6.0, -9.0};
  EXPECT_EQ(horner_eval<ComplexD>(f, p, 3.0), ComplexD(0.0));
  EXPECT_EQ(horner_eval<ComplexD>(f, p, 0.0), ComplexD(-9.0));
  const std::vector<ComplexD> constant{5.0};
  EXPECT_EQ(horner_eval<ComplexD>(f, constant, {1.7, -2.0}), ComplexD(5.0));
  // 3.1^3 - 6*3.1 - 9 = 29.791 - 18.6 - 9
  EXPECT_NEAR(horner_eval<ComplexD>(f, p, 3.1).real(), 2.191, 1e-12);
}

TEST(ExpandMonic, Examples) {
  const auto f = complex_capabilities();
  const std::vector<ComplexD> a{1.0, 2.0};
  const auto pa = expand_monic_from_roots<ComplexD>(f, a);
  ASSERT_EQ(pa.size(), 3u);
  EXPECT_EQ(pa[0], ComplexD(1.0));
  EXPECT_EQ(pa[1], ComplexD(-3.0));
  EXPECT_EQ(pa[2], ComplexD(2.0));

  const std::vector<ComplexD> b{3.0, kR, std::conj(kR)};
  const auto pb = expand_monic_from_roots<ComplexD>(f, b);
  const std::vector<ComplexD> expected{1.0, 0.0, -6.0, -9.0};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_LE(std::abs(pb[k] - expected[k]), 1e-12);

  const std::vector<ComplexD> zeros{0.0, 0.0, 0.0};
  const auto pc = expand_monic_from_roots<ComplexD>(f, zeros);
  EXPECT_EQ(pc, (std::vector<ComplexD>{1.0, 0.0, 0.0, 0.0}));
}

TEST(ExpandMonic, ExactCardanoRoots) {
  TowerField field;
  const auto f = field.capabilities();
  const auto out = solve_polynomial(Coefficients::from_rationals({1, 0, -6, -9}));
  std::vector<TowerElement> roots;
  for (const auto& r : out.roots) roots.push_back(*r.exact);
  const auto p = expand_monic_from_roots<TowerElement>(f, roots);
  const std::vector<std::int64_t> expected{1, 0, -6, -9};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(p[k], TowerElement::rational(expected[k]));
}

bool contains_close(const std::vector<ComplexD>& roots, ComplexD z, double tol) {
  for (const ComplexD& r : roots) {
    if (std::abs(r - z) <= tol) return true;
  }
  return false;
}

TEST(DurandKerner, Examples) {
  const auto a = durand_kerner(std::vector<ComplexD>{1.0, -3.0, 2.0});
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(contains_close(a, 1.0, 1e-9));
  EXPECT_TRUE(contains_close(a, 2.0, 1e-9));
  const auto b = durand_kerner(std::vector<ComplexD>{1.0, -5.0});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_LE(std::abs(b[0] - 5.0), 1e-12);
  const auto c = durand_kerner(std::vector<ComplexD>{1.0, 0.0, -6.0, -9.0});
  EXPECT_TRUE(contains_close(c, 3.0, 1e-9));
  EXPECT_TRUE(contains_close(c, kR, 1e-9));
  EXPECT_TRUE(contains_close(c, std::conj(kR), 1e-9));
}

TEST(DurandKerner, NonConvergenceCarriesLastIterate) {
  try {
    durand_kerner(std::vector<ComplexD>{1.0, 0.0, -6.0, -9.0}, 1e-12, 1);
    FAIL();
  } catch (const OracleNonConvergence& e) {
    EXPECT_EQ(e.last_iterate().size(), 3u);
  }
  EXPECT_THROW(durand_kerner(std::vector<ComplexD>{0.0, 1.0}), DegenerateLeadingCoefficient);
}

TEST(DurandKerner, OracleSoundnessOnSeparatedRoots) {
  Rng rng(seed_from_environment(21));
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const int degree = 1 + i % 4;
    std::vector<ComplexD> roots;
    for (int k = 0; k < degree; ++k) roots.push_back(random_complex(rng, 3.0));
    if (root_separation(roots) < 1e-3) continue;
    const auto f = complex_capabilities();
    auto coeffs = expand_monic_from_roots<ComplexD>(f, roots);
    const ComplexD lead = random_complex(rng, 4.0) + ComplexD{5.0, 0.0};
    for (auto& c : coeffs) c *= lead;
    const auto z = durand_kerner(coeffs);
    for (const ComplexD& x : z) {
      double scale = 0.0;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        scale += std::abs(coeffs[k]) * std::pow(std::abs(x), static_cast<double>(coeffs.size() - 1 - k));
      }
      ASSERT_LE(std::abs(horner_eval<ComplexD>(f, coeffs, x)), 1e-8 * scale);
    }
    ASSERT_TRUE(match_root_multisets(z, roots, 1e-6).matched);
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST(MatchRootMultisets, Examples) {
  const std::vector<ComplexD> a{1.0, 2.0}, b{2.0, 1.0}, c{1.0, 3.0};
  const auto ab = match_root_multisets(a, b, 1e-9);
  EXPECT_TRUE(ab.matched);
  EXPECT_EQ(ab.permutation, (std::vector<std::size_t>{1, 0}));
  const auto ac = match_root_multisets(a, c, 1e-9);
  EXPECT_FALSE(ac.matched);
  EXPECT_DOUBLE_EQ(ac.max_distance, 1.0);
  const std::vector<ComplexD> zeros{0.0, 0.0}, near{1e-13, -1e-13};
  EXPECT_TRUE(match_root_multisets(zeros, near, 1e-9).matched);
}

TEST(RootSeparation, Basics) {
  EXPECT_TRUE(std::isinf(root_separation(std::vector<ComplexD>{1.0})));
  EXPECT_DOUBLE_EQ(root_separation(std::vector<ComplexD>{0.0, 0.5}), 0.5);
  EXPECT_DOUBLE_EQ(root_separation(std::vector<ComplexD>{100.0, 101.0}), 1.0 / 101.0);
}

TEST(VerifySolution, CardanoExampleExact) {
  const Coefficients input = Coefficients::from_rationals({1, 0, -6, -9});
  const auto out = solve_polynomial(input);
  const auto report = verify_solution(input, out.roots, Backend::exact);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.residuals_ok);
  for (bool z : report.residual_exact_zero) EXPECT_TRUE(z);
  for (double r : report.residuals) EXPECT_EQ(r, 0.0);
  ASSERT_TRUE(report.factorization_exact.has_value());
  EXPECT_TRUE(*report.factorization_exact);
  EXPECT_TRUE(report.oracle.matched);
  EXPECT_LE(report.oracle.max_distance, 1e-9);
}

TEST(VerifySolution, UnitCircleByHand) {
  const Coefficients input = Coefficients::from_complex({1.0, 0.0, 1.0});
  std::vector<RootRecord> roots{{std::nullopt, {0.0, 1.0}, RadicalExpr::number({0.0, 1.0}), "i"},
                                {std::nullopt, {0.0, -1.0}, RadicalExpr::number({0.0, -1.0}), "-i"}};
  const auto report = verify_solution(input, roots, Backend::complex);
  EXPECT_TRUE(report.pass);
  EXPECT_FALSE(report.factorization_exact.has_value());
}

TEST(VerifySolution, TamperedRootFails) {
  const Coefficients input = Coefficients::from_rationals({1, 0, -6, -9});
  auto out = solve_polynomial(input);
  // float records
  auto tampered = out.roots;
  tampered[0].exact.reset();
  tampered[1].exact.reset();
  tampered[2].exact.reset();
  tampered[0].approx = 3.1;
  const auto report = verify_solution(input, tampered, Backend::complex);
  EXPECT_FALSE(report.pass);
  EXPECT_FALSE(report.residuals_ok);
  EXPECT_NEAR(report.residuals[0], 2.191, 1e-9);
  EXPECT_FALSE(report.oracle.matched);
  // exact record
  auto exact = out.roots;
  exact[0].exact = TowerElement::rational(BigRational(31, 10));
  exact[0].approx = 3.1;
  const auto exact_report = verify_solution(input, exact, Backend::exact);
  EXPECT_FALSE(exact_report.pass);
  EXPECT_FALSE(exact_report.residual_exact_zero[0]);
  EXPECT_NEAR(exact_report.residuals[0], 2.191, 1e-9);
  ASSERT_TRUE(exact_report.factorization_exact.has_value());
  EXPECT_FALSE(*exact_report.factorization_exact);
}

TEST(VerifySolution, ClusteredRootsAreInformational) {
  // (x - 1)^3: the oracle converges slowly and lands near but not on 1.
  const Coefficients input = Coefficients::from_rationals({1, -3, 3, -1});
  const auto out = solve_polynomial(input);
  const auto report = verify_solution(input, out.roots, Backend::exact);
  EXPECT_TRUE(report.oracle_clustered);
  EXPECT_TRUE(report.pass);
}

// Real cube root on the real axis, principal elsewhere; a valid provider.
ComplexD real_axis_cbrt(const ComplexD& z) {
  if (z.imag() == 0.0) return {std::cbrt(z.real()), 0.0};
  return ccbrt_principal(z);
}

FieldCapabilities<ComplexD> with_cbrt(std::function<ComplexD(const ComplexD&)> cbrt) {
  auto f = complex_capabilities();
  f.cbrt = std::move(cbrt);
  return f;
}

TEST(NegativeExhibit, BenignWithRealCubeRoots) {
  const auto f = with_cbrt(real_axis_cbrt);
  const auto ex = negative_exhibit_two_cbrts<ComplexD>(f, -6.0, -9.0);
  EXPECT_LE(std::abs(ex.naive_root - 3.0), 1e-12);
  EXPECT_LE(std::abs(ex.naive_residual), 1e-12);
  EXPECT_LE(std::abs(ex.corrected_residual), 1e-12);
}

TEST(NegativeExhibit, OmegaTimesTBreaksNaiveFormula) {
  const ComplexD w{-0.5, std::sqrt(3.0) / 2.0};
  // Still a cube root of its argument: omega times the real cube root on the
  // negative real axis.
  const auto f = with_cbrt([w](const ComplexD& z) {
    const ComplexD r = real_axis_cbrt(z);
    return z.imag() == 0.0 && z.real() < 0.0 ? w * r : r;
  });
  const ComplexD t = f.cbrt(-1.0);
  EXPECT_LE(std::abs(t * t * t + 1.0), 1e-12);
  const auto ex = negative_exhibit_two_cbrts<ComplexD>(f, -6.0, -9.0);
  EXPECT_GT(std::abs(ex.naive_residual), 1.0);
  EXPECT_LE(std::abs(ex.corrected_residual), 1e-12);
}

TEST(NegativeExhibit, CorrectedFormulaAlwaysVanishes) {
  const ComplexD w{-0.5, std::sqrt(3.0) / 2.0};
  Rng rng(8);
  int naive_failures = 0;
  for (int i = 0; i < 500; ++i) {
    const auto f = with_cbrt([w, i](const ComplexD& z) {
      const ComplexD r = ccbrt_principal(z);
      return (i + (z.real() > 0.0)) % 3 == 0 ? r : (i % 3 == 1 ? w * r : w * w * r);
    });
    const ComplexD c = random_complex(rng, 10.0), d = random_complex(rng, 10.0);
    if (std::abs(c) < 1e-3) continue;
    const auto ex = negative_exhibit_two_cbrts<ComplexD>(f, c, d);
    const double scale = std::pow(std::abs(ex.corrected_root), 3) + std::abs(c * ex.corrected_root) + std::abs(d);
    ASSERT_LE(std::abs(ex.corrected_residual), 1e-9 * scale);
    naive_failures += std::abs(ex.naive_residual) > 1e-6 * scale;
  }
  EXPECT_GT(naive_failures, 0);
}

TEST(NegativeExhibit, IndependentTowerGeneratorsLeaveResidual) {
  // In the tower the two cube roots are independent generators, so nothing
  // forces 3st = c unless t is derived from s.
  Rng rng(2);
  int naive_nonzero = 0;
  for (int i = 0; i < 10; ++i) {
    TowerField field;
    const auto f = field.capabilities();
    const auto c = TowerElement::rational(random_nonzero_rational(rng, 20));
    const auto d = TowerElement::rational(random_nonzero_rational(rng, 20));
    const auto ex = negative_exhibit_two_cbrts<TowerElement>(f, c, d);
    EXPECT_TRUE(ex.corrected_residual.is_zero());
    naive_nonzero += ex.naive_residual.is_zero() ? 0 : 1;
  }
  EXPECT_GT(naive_nonzero, 0);
}

}  // namespace
}  // namespace radica
