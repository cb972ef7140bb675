#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>

#include "chermnykh/errors.hpp"
#include "chermnykh/stability.hpp"

using namespace chermnykh;

namespace {

EquilibriumPoint classical_l4(double mu) {
  return triangular_points(Model(classical_preset(mu))).l4;
}

/// Eigenvalues of the linearised first-order system, sorted by (re, im).
std::vector<std::complex<double>> variational_spectrum(const Hessian& h, double n) {
  Eigen::Matrix4d a;
  a << 0, 0, 1, 0,
       0, 0, 0, 1,
       h.xx, h.xy, 0, 2 * n,
       h.xy, h.yy, -2 * n, 0;
  const Eigen::EigenSolver<Eigen::Matrix4d> es(a, false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + 4);
  return out;
}

bool by_re_im(const std::complex<double>& a, const std::complex<double>& b) {
  if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

TEST(Quartic, ClassicalStableExampleIsPureImaginary) {
  const double mu = 0.01;
  for (const auto& l : solve_quartic(1.0, 6.75 * mu * (1.0 - mu))) {
    EXPECT_EQ(l.real(), 0.0);
    EXPECT_NE(l.imag(), 0.0);
  }
}

TEST(Quartic, NegativeConstantGivesRealPositiveRoot) {
  const auto ls = solve_quartic(0.3, -2.0);
  EXPECT_TRUE(std::any_of(ls.begin(), ls.end(),
                          [](auto l) { return l.real() > 0.0 && l.imag() == 0.0; }));
}

TEST(Quartic, DoubleRootAtMinusOne) {
  for (const auto& l : solve_quartic(2.0, 1.0)) {
    EXPECT_NEAR(l.real(), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(l.imag()), 1.0, 1e-7);
  }
}

TEST(Quartic, RootsComeInExactPairs) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const double p = u(rng);
    const double q = u(rng);
    const auto l = solve_quartic(p, q);
    EXPECT_EQ(l[0], -l[1]);
    EXPECT_EQ(l[2], -l[3]);
    for (const auto& z : l) {
      const auto z2 = z * z;
      EXPECT_LT(std::abs(z2 * z2 + p * z2 + q), 1e-9 * (1.0 + std::abs(p) + std::abs(q)));
    }
  }
}

TEST(Characteristic, ClassicalL4) {
  const double mu = 0.02;
  const Model m(classical_preset(mu));
  const auto pq = characteristic_coefficients(classical_l4(mu), m);
  EXPECT_NEAR(pq.p, 1.0, 1e-12);
  EXPECT_NEAR(pq.q, 6.75 * mu * (1.0 - mu), 1e-12);
}

TEST(Characteristic, CollinearConstantTermIsDiagonalProduct) {
  const Model m(paper_preset());
  for (const auto& p : collinear_points(m)) {
    const auto r = classify(p, m);
    EXPECT_EQ(r.hessian.xy, 0.0);
    EXPECT_EQ(r.quartic.q, r.hessian.xx * r.hessian.yy);
  }
}

TEST(Characteristic, RejectsNonEquilibrium) {
  const Model m(paper_preset());
  EquilibriumPoint bogus;
  bogus.x = 0.3;
  bogus.y = 0.3;
  EXPECT_THROW(characteristic_coefficients(bogus, m), PreconditionError);
}

TEST(Classify, VerdictMatchesMaxRealPart) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int i = 0; i < 200; ++i) {
    const auto l = solve_quartic(u(rng), u(rng));
    double max_re = -INFINITY;
    for (const auto& z : l) max_re = std::max(max_re, z.real());
    const bool stable = max_re <= kMarginalRe;
    // Stable exactly when both lambda^2 roots are real and non-positive.
    const bool squares_negative = std::all_of(l.begin(), l.end(), [](auto z) {
      const auto z2 = z * z;
      return std::abs(z2.imag()) <= 1e-9 * (1.0 + std::abs(z2)) && z2.real() <= 1e-12;
    });
    EXPECT_EQ(stable, squares_negative);
  }
}

TEST(Classify, ClassicalCriticalMassStraddle) {
  EXPECT_EQ(classify(classical_l4(0.03), Model(classical_preset(0.03))).verdict, Verdict::Stable);
  EXPECT_EQ(classify(classical_l4(0.04), Model(classical_preset(0.04))).verdict, Verdict::Unstable);
}

TEST(Classify, PaperCollinearPointsUnstable) {
  const Model m(paper_preset());
  for (const auto& p : collinear_points(m)) {
    if (p.label == PointLabel::L1 || p.label == PointLabel::l1_new) {
      EXPECT_EQ(classify(p, m).verdict, Verdict::Unstable) << to_string(p.label);
    }
  }
}

TEST(Classify, ClassicalCollinearAlwaysUnstable) {
  for (double mu : {1e-4, 0.001, 0.01, 0.1, 0.3, 0.49}) {
    const Model m(classical_preset(mu));
    for (const auto& p : collinear_points(m)) EXPECT_EQ(classify(p, m).verdict, Verdict::Unstable);
  }
}

TEST(Classify, AgreesWithVariationalMatrixSpectrum) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 50) {
    SystemParams p;
    p.mu = 0.001 + 0.1 * u(rng);
    p.q1 = 0.6 + 0.4 * u(rng);
    p.a2 = 0.01 * u(rng);
    p.disk = DiskProfile::from_mass(1.0, 1.0 + u(rng), 1e-4, 0.5 * u(rng), PiMode::Exact);
    const Model m(p);
    std::vector<EquilibriumPoint> pts = collinear_points(m);
    const auto pair = triangular_points(m);
    pts.push_back(pair.l4);
    const auto& e = pts[static_cast<std::size_t>(u(rng) * pts.size())];
    const auto rep = classify(e, m);
    auto mine = std::vector<std::complex<double>>(rep.lambdas.begin(), rep.lambdas.end());
    auto ref = variational_spectrum(rep.hessian, m.n());
    std::sort(mine.begin(), mine.end(), by_re_im);
    std::sort(ref.begin(), ref.end(), by_re_im);
    const double scale = std::max(1.0, std::abs(ref[0]));
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(mine[k].real(), ref[k].real(), 1e-8 * scale);
      EXPECT_NEAR(mine[k].imag(), ref[k].imag(), 1e-8 * scale);
    }
    const double ref_max = std::max_element(ref.begin(), ref.end(), [](auto a, auto b) {
                             return a.real() < b.real();
                           })->real();
    if (std::abs(ref_max) > 1e-9) {
      EXPECT_EQ(rep.verdict, ref_max <= 0.0 ? Verdict::Stable : Verdict::Unstable);
    }
    ++checked;
  }
}

TEST(Classify, TimeRescalingKeepsVerdict) {
  // n -> k n with Omega -> k^2 Omega scales every lambda by k.
  const Model m(paper_preset());
  const auto l4 = triangular_points(m).l4;
  const auto base = classify(l4, m);
  for (double k : {0.5, 2.0, 10.0}) {
    Hessian h = base.hessian;
    h.xx *= k * k;
    h.yy *= k * k;
    h.xy *= k * k;
    const auto pq = characteristic_coefficients(h, k * k * m.n2());
    const auto l = solve_quartic(pq.p, pq.q);
    double max_re = -INFINITY;
    for (const auto& z : l) max_re = std::max(max_re, z.real());
    EXPECT_EQ(max_re <= kMarginalRe, base.verdict == Verdict::Stable);
    EXPECT_NEAR(std::abs(l[0]), k * std::abs(base.lambdas[0]), 1e-9 * k);
  }
}

TEST(L4Terms, ClassicalReduction) {
  const double mu = 0.02;
  const Model m(classical_preset(mu));
  const auto t = l4_condition_terms(m, classical_l4(mu));
  EXPECT_NEAR(t.p_l4, 1.0, 1e-12);
  EXPECT_NEAR(t.q_l4, 6.75 * mu * (1.0 - mu), 1e-12);
  EXPECT_NEAR(t.gamma0, 0.75, 1e-12);
}

TEST(L4Terms, ClosedFormNearHessianWithDisk) {
  const Model m(paper_preset());
  const auto l4 = triangular_points(m).l4;
  const auto t = l4_condition_terms(m, l4);
  const auto pq = characteristic_coefficients(l4, m);
  EXPECT_NEAR(t.p_l4, pq.p, 0.1 * std::abs(pq.p));
  EXPECT_NEAR(t.q_l4, pq.q, 0.1 * std::abs(pq.q));
}

TEST(CriticalMass, ClassicalRouthValue) {
  const auto r = critical_mass(classical_preset(0.01));
  EXPECT_FALSE(r.saturated);
  EXPECT_NEAR(r.mu_c, 0.5 * (1.0 - std::sqrt(23.0 / 27.0)), 1e-10);
  EXPECT_LT(std::abs(r.discriminant), 1e-10);
}

TEST(CriticalMass, IgnoresInputMassRatio) {
  EXPECT_EQ(critical_mass(classical_preset(0.3)).mu_c, critical_mass(classical_preset(0.01)).mu_c);
}

TEST(CriticalMass, SaturatesWithoutSignChange) {
  CriticalMassOptions o;
  o.mu_lo = 0.001;
  o.mu_hi = 0.02;
  const auto r = critical_mass(classical_preset(0.01), o);
  EXPECT_TRUE(r.saturated);
  EXPECT_EQ(r.mu_c, 0.02);
}

TEST(CriticalMass, BracketValidated) {
  CriticalMassOptions o;
  o.mu_hi = 0.6;
  EXPECT_THROW(critical_mass(classical_preset(0.01), o), ModelError);
}

TEST(CriticalMassCurve, SortedAndBounded) {
  SystemParams p = paper_preset();
  p.q1 = 1.0;
  p.a2 = 0.0;
  const auto curve = critical_mass_curve(p, 1.0, 2.0, 0.25, DiskHold::Mass, 0.4);
  ASSERT_EQ(curve.samples.size(), 5u);
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    EXPECT_GT(curve.samples[i].mu_c, 0.0);
    EXPECT_LE(curve.samples[i].mu_c, 0.5);
    if (i) {
      EXPECT_GT(curve.samples[i].b, curve.samples[i - 1].b);
    }
  }
  // b = a removes the disk and leaves the classical value.
  EXPECT_NEAR(curve.samples.front().mu_c, 0.0385208965, 1e-9);
}

TEST(CriticalMassCurve, DeterministicAcrossRuns) {
  SystemParams p = paper_preset();
  const auto a = critical_mass_curve(p, 1.1, 1.5, 0.1, DiskHold::Mass, 0.4);
  const auto b = critical_mass_curve(p, 1.1, 1.5, 0.1, DiskHold::Mass, 0.4);
  for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].mu_c, b.samples[i].mu_c);
}

TEST(OuterRadius, HoldMassOrDensity) {
  const SystemParams base = paper_preset();
  const auto m = with_outer_radius(base, 1.8, DiskHold::Mass, 0.4);
  EXPECT_NEAR(m.disk.mass(m.pi_mode), 0.4, 1e-12);
  const auto d = with_outer_radius(base, 1.8, DiskHold::Density, 1910.83);
  EXPECT_EQ(d.disk.c, 1910.83);
  EXPECT_EQ(d.disk.b, 1.8);
}

TEST(BandScan, ClassicalLimitHasNoStableWidth) {
  BandOptions o;
  o.b_lo = 1.0;
  o.b_hi = 1.0 + 1e-9;
  o.step = 1e-9;
  o.held_value = 0.0;
  for (auto label : {PointLabel::L1, PointLabel::L2, PointLabel::L3}) {
    const auto scan = stability_band_scan(label, classical_preset(0.01), o);
    EXPECT_TRUE(scan.stable.empty());
    EXPECT_TRUE(scan.gaps.empty());
  }
}

TEST(BandScan, SamplesCoverRangeAndRecordPointPosition) {
  BandOptions o;
  o.b_lo = 1.0;
  o.b_hi = 1.1;
  o.step = 0.01;
  const auto scan = stability_band_scan(PointLabel::L2, paper_preset(), o);
  ASSERT_EQ(scan.samples.size(), 11u);
  EXPECT_DOUBLE_EQ(scan.samples.front().b, 1.0);
  EXPECT_DOUBLE_EQ(scan.samples.back().b, 1.1);
  for (const auto& s : scan.samples) {
    ASSERT_TRUE(s.verdict);
    EXPECT_GT(s.x, 0.0);
    EXPECT_LT(s.x, 1.0);
  }
}

TEST(BandScan, RejectsTriangularLabel) {
  EXPECT_THROW(stability_band_scan(PointLabel::L4, paper_preset(), BandOptions{}), ModelError);
}

TEST(BandScan, EndpointRefinedBetweenSamples) {
  // A deep reference radius raises the mean motion enough for L2 to become
  // stable once the disk is wide enough at fixed density.
  SystemParams p = paper_preset();
  p.r_ref = 0.3;
  BandOptions o;
  o.b_lo = 1.0;
  o.b_hi = 3.0;
  o.step = 0.01;
  o.hold = DiskHold::Density;
  o.held_value = 800.0;
  const auto scan = stability_band_scan(PointLabel::L2, p, o);
  ASSERT_EQ(scan.stable.size(), 1u);
  const double lo = scan.stable[0].lo;
  EXPECT_DOUBLE_EQ(scan.stable[0].hi, 3.0);
  auto verdict_at = [&](double b) {
    const Model m(with_outer_radius(p, b, DiskHold::Density, 800.0));
    const auto pts = collinear_points(m);
    return classify(pts[1], m).verdict;
  };
  EXPECT_EQ(verdict_at(lo + 1e-4), Verdict::Stable);
  EXPECT_EQ(verdict_at(lo - 1e-4), Verdict::Unstable);
}
