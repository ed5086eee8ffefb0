// Copyright 2026 The tiq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "tiq/circuit.hpp"
#include "tiq/density_matrix.hpp"
#include "tiq/eig.hpp"
#include "tiq/gates.hpp"
#include "tiq/pauli.hpp"
#include "tiq/rng.hpp"
#include "tiq/vqe.hpp"

namespace {

using tiq::Circuit;
using tiq::CompileMode;
using tiq::ComplexMatrix;
using tiq::cplx;
using tiq::DensityMatrix;
using tiq::ExpectationSet;
using tiq::kPi;
using tiq::MeasureBasis;
using tiq::Mitigation;
using tiq::MsNoiseParams;
using tiq::SqNoiseParams;

double analytic_energy(double alpha, CompileMode mode, const SqNoiseParams& sq,
                       const MsNoiseParams& ms) {
  return tiq::energy(
      tiq::measure_expectations(tiq::ansatz(alpha, mode), sq, ms, 0, 0),
      tiq::h2_hamiltonian());
}

// Golden-section refinement of a unimodal 1-D minimum.
double refine_minimum(double lo, double hi, CompileMode mode,
                      const SqNoiseParams& sq, const MsNoiseParams& ms) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = analytic_energy(c, mode, sq, ms);
  double fd = analytic_energy(d, mode, sq, ms);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = analytic_energy(c, mode, sq, ms);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = analytic_energy(d, mode, sq, ms);
    }
  }
  return (a + b) / 2.0;
}

TEST(H2HamiltonianTest, VerbatimCoefficients) {
  const tiq::PauliHamiltonian h = tiq::h2_hamiltonian();
  ASSERT_EQ(h.terms.size(), 6u);
  EXPECT_EQ(h.terms[0].second.label, "II");
  EXPECT_EQ(h.terms[0].first, 0.304794);
  EXPECT_EQ(h.terms[1].second.label, "IZ");
  EXPECT_EQ(h.terms[1].first, 0.3555426);
  EXPECT_EQ(h.terms[2].second.label, "ZI");
  EXPECT_EQ(h.terms[2].first, -0.485486);
  EXPECT_EQ(h.terms[3].second.label, "ZZ");
  EXPECT_EQ(h.terms[3].first, 0.581232);
  EXPECT_EQ(h.terms[4].second.label, "XX");
  EXPECT_EQ(h.terms[4].first, 0.089500);
  EXPECT_EQ(h.terms[5].second.label, "YY");
  EXPECT_EQ(h.terms[5].first, 0.089500);
}

TEST(ExactGroundEnergyTest, TrivialHamiltonians) {
  tiq::PauliHamiltonian ii;
  ii.terms = {{1.0, tiq::PauliString("II")}};
  EXPECT_NEAR(tiq::exact_ground_energy(ii), 1.0, 1e-12);

  tiq::PauliHamiltonian zz;
  zz.terms = {{1.0, tiq::PauliString("ZZ")}};
  EXPECT_NEAR(tiq::exact_ground_energy(zz), -1.0, 1e-12);
}

TEST(ExactGroundEnergyTest, MatchesOneParticleBlockOracle) {
  // H restricted to span{|01>, |10>} is [[a, c], [c, d]]; its lowest
  // eigenvalue is the molecular ground energy.
  const double a = 0.304794 - 0.3555426 - 0.485486 - 0.581232;
  const double d = 0.304794 + 0.3555426 + 0.485486 - 0.581232;
  const double c = 2.0 * 0.089500;
  const double oracle =
      (a + d) / 2.0 - std::sqrt((a - d) * (a - d) / 4.0 + c * c);
  const double e0 = tiq::exact_ground_energy(tiq::h2_hamiltonian());
  EXPECT_NEAR(e0, oracle, 1e-9);
  EXPECT_NEAR(e0, -1.1363, 5e-4);
}

TEST(EnergyTest, PaperArithmetic) {
  const tiq::PauliHamiltonian h = tiq::h2_hamiltonian();
  ExpectationSet hf;
  hf.iz = -1.0;
  hf.zi = 1.0;
  hf.zz = -1.0;
  EXPECT_NEAR(tiq::energy(hf, h), -1.1174666, 1e-12);

  EXPECT_NEAR(tiq::energy(ExpectationSet{}, h), 0.304794, 1e-12);

  // Expectations of the exact ground eigenvector reproduce its eigenvalue.
  const tiq::EigResult eig =
      tiq::eig_herm(tiq::hamiltonian_matrix(h));
  DensityMatrix ground;
  ground.n_qubits = 2;
  ground.mat = ComplexMatrix(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      ground.mat(i, j) = eig.vectors(i, 0) * std::conj(eig.vectors(j, 0));
    }
  }
  ExpectationSet g;
  g.iz = tiq::expectation(ground, tiq::PauliString("IZ"));
  g.zi = tiq::expectation(ground, tiq::PauliString("ZI"));
  g.zz = tiq::expectation(ground, tiq::PauliString("ZZ"));
  g.xx = tiq::expectation(ground, tiq::PauliString("XX"));
  g.yy = tiq::expectation(ground, tiq::PauliString("YY"));
  EXPECT_NEAR(tiq::energy(g, h), eig.values[0], 1e-9);
}

TEST(EnergyTest, RejectsUnsupportedTerm) {
  tiq::PauliHamiltonian h;
  h.terms = {{1.0, tiq::PauliString("XY")}};
  EXPECT_THROW(tiq::energy(ExpectationSet{}, h), std::invalid_argument);
}

TEST(ClampExpectationsTest, FlagsOutOfRangeShots) {
  ExpectationSet e;
  e.zz = 1.01;  // discreteness overshoot
  bool moved = false;
  const ExpectationSet c = tiq::clamp_expectations(e, &moved);
  EXPECT_TRUE(moved);
  EXPECT_EQ(c.zz, 1.0);
  bool untouched = true;
  tiq::clamp_expectations(ExpectationSet{}, &untouched);
  EXPECT_FALSE(untouched);
}

TEST(AnsatzTest, RejectsOutOfRangeAlpha) {
  EXPECT_THROW(tiq::ansatz(kPi / 2 + 0.01, CompileMode::standard),
               std::invalid_argument);
  EXPECT_NO_THROW(tiq::ansatz(-kPi / 2, CompileMode::hidden_inverse));
}

TEST(AnsatzTest, HartreeFockPointAtZeroAlpha) {
  const ExpectationSet e = tiq::measure_expectations(
      tiq::ansatz(0.0, CompileMode::standard), SqNoiseParams{},
      tiq::ideal_ms_params(), 0, 0);
  EXPECT_NEAR(e.iz, -1.0, 1e-9);
  EXPECT_NEAR(e.zi, 1.0, 1e-9);
  EXPECT_NEAR(e.zz, -1.0, 1e-9);
  EXPECT_NEAR(tiq::energy(e, tiq::h2_hamiltonian()), -1.1174666, 1e-6);
}

TEST(AnsatzTest, ModesEquivalentNoiselessly) {
  for (const double alpha : {-1.5, -0.7, -0.2097, 0.0, 0.4, kPi / 2}) {
    const DensityMatrix std_dm =
        tiq::simulate(tiq::ansatz(alpha, CompileMode::standard),
                      SqNoiseParams{}, tiq::ideal_ms_params(),
                      tiq::dm_new(2, 0));
    const DensityMatrix hi_dm =
        tiq::simulate(tiq::ansatz(alpha, CompileMode::hidden_inverse),
                      SqNoiseParams{}, tiq::ideal_ms_params(),
                      tiq::dm_new(2, 0));
    EXPECT_NEAR(std_dm.mat.max_abs_diff(hi_dm.mat), 0.0, 1e-10);
  }
  // Analytic energies agree across a dense alpha grid.
  for (const double alpha : tiq::uniform_alphas(101)) {
    EXPECT_NEAR(analytic_energy(alpha, CompileMode::standard, SqNoiseParams{},
                                tiq::ideal_ms_params()),
                analytic_energy(alpha, CompileMode::hidden_inverse,
                                SqNoiseParams{}, tiq::ideal_ms_params()),
                1e-9);
  }
}

TEST(AnsatzTest, NoiselessMinimumReachesExactGroundEnergy) {
  // Coarse scan to bracket the minimum, then golden-section refinement.
  double best_alpha = 0.0, best = 1e9;
  for (const double alpha : tiq::uniform_alphas(201)) {
    const double e = analytic_energy(alpha, CompileMode::standard,
                                     SqNoiseParams{}, tiq::ideal_ms_params());
    if (e < best) {
      best = e;
      best_alpha = alpha;
    }
  }
  const double step = kPi / 200.0;
  const double alpha_star = refine_minimum(best_alpha - step,
                                           best_alpha + step,
                                           CompileMode::standard,
                                           SqNoiseParams{},
                                           tiq::ideal_ms_params());
  const double e_min = analytic_energy(alpha_star, CompileMode::standard,
                                       SqNoiseParams{},
                                       tiq::ideal_ms_params());
  EXPECT_NEAR(e_min, tiq::exact_ground_energy(tiq::h2_hamiltonian()), 1e-9);
  EXPECT_LT(alpha_star, 0.0);  // the minimum sits at negative alpha
}

TEST(MeasureSetTest, ComputationalBasisState) {
  Circuit c;
  c.n_qubits = 2;  // leaves |00>
  const tiq::BasisEstimates z = tiq::measure_set(
      c, SqNoiseParams{}, tiq::ideal_ms_params(), 0, 0, MeasureBasis::ZZ);
  EXPECT_NEAR(z.parity, 1.0, 1e-12);
  EXPECT_NEAR(z.z_q0, 1.0, 1e-12);
  EXPECT_NEAR(z.z_q1, 1.0, 1e-12);
}

TEST(MeasureSetTest, EntangledStatesAgainstDirectExpectationOracle) {
  // xx(pi/2)|00> = (|00> - i|11>)/sqrt(2): XX and YY parities vanish while
  // ZZ stays +1. The oracle evaluates Tr(P rho) directly.
  Circuit ms_circ;
  ms_circ.n_qubits = 2;
  ms_circ.append({tiq::GateKind::XX, kPi / 2, 0, 1});
  const DensityMatrix rho = tiq::simulate(ms_circ, SqNoiseParams{},
                                          tiq::ideal_ms_params(),
                                          tiq::dm_new(2, 0));
  const std::vector<std::pair<MeasureBasis, std::string>> bases = {
      {MeasureBasis::ZZ, "ZZ"}, {MeasureBasis::XX, "XX"},
      {MeasureBasis::YY, "YY"}};
  for (const auto& [basis, label] : bases) {
    const tiq::BasisEstimates est =
        tiq::measure_set(ms_circ, SqNoiseParams{}, tiq::ideal_ms_params(), 0,
                         0, basis);
    EXPECT_NEAR(est.parity,
                tiq::expectation(rho, tiq::PauliString(label)), 1e-12);
  }

  // The (|00> + |11>)/sqrt(2) state reads XX = +1, YY = -1, ZZ = +1.
  Circuit bell;
  bell.n_qubits = 2;
  bell.append({tiq::GateKind::RY, kPi / 2, 0});
  bell.append(tiq::cnot_native(0, 1));
  EXPECT_NEAR(tiq::measure_set(bell, SqNoiseParams{}, tiq::ideal_ms_params(),
                               0, 0, MeasureBasis::XX)
                  .parity,
              1.0, 1e-9);
  EXPECT_NEAR(tiq::measure_set(bell, SqNoiseParams{}, tiq::ideal_ms_params(),
                               0, 0, MeasureBasis::YY)
                  .parity,
              -1.0, 1e-9);
  EXPECT_NEAR(tiq::measure_set(bell, SqNoiseParams{}, tiq::ideal_ms_params(),
                               0, 0, MeasureBasis::ZZ)
                  .parity,
              1.0, 1e-9);
}

TEST(MeasureSetTest, SeededRunsReproduce) {
  const Circuit c = tiq::ansatz(-0.2, CompileMode::standard);
  MsNoiseParams ms = tiq::ideal_ms_params();
  ms.nbar = 0.05;
  ms.depol_p = 0.02;
  ms.eta = 0.62;

  const tiq::BasisEstimates a = tiq::measure_set(
      c, SqNoiseParams{}, ms, 200, 17, MeasureBasis::ZZ);
  const tiq::BasisEstimates b = tiq::measure_set(
      c, SqNoiseParams{}, ms, 200, 17, MeasureBasis::ZZ);
  EXPECT_EQ(a.parity, b.parity);
  EXPECT_EQ(a.z_q0, b.z_q0);
  EXPECT_EQ(a.z_q1, b.z_q1);

  // Per-shot trajectory sampling is deterministic too.
  MsNoiseParams sampled = ms;
  sampled.mode = MsNoiseParams::Mode::sampled;
  const tiq::BasisEstimates s1 = tiq::measure_set(
      c, SqNoiseParams{}, sampled, 50, 23, MeasureBasis::XX);
  const tiq::BasisEstimates s2 = tiq::measure_set(
      c, SqNoiseParams{}, sampled, 50, 23, MeasureBasis::XX);
  EXPECT_EQ(s1.parity, s2.parity);

  // Analytic estimates refuse the sampled mode (no RNG-free trajectory).
  EXPECT_THROW(tiq::measure_set(c, SqNoiseParams{}, sampled, 0, 0,
                                MeasureBasis::ZZ),
               std::invalid_argument);
}

TEST(RcTest, NoiselessMatchesDefaultCircuit) {
  const double alpha = -0.3;
  const double direct = analytic_energy(alpha, CompileMode::standard,
                                        SqNoiseParams{},
                                        tiq::ideal_ms_params());
  const double rc = tiq::rc_energy(alpha, SqNoiseParams{},
                                   tiq::ideal_ms_params(), 0, 256, 5);
  EXPECT_NEAR(rc, direct, 1e-9);
}

TEST(RcTest, FullFrameAverageEqualsAveragedStateEnergy) {
  // Energy is linear, so averaging per-twirl expectations must equal the
  // expectations of the uniformly averaged twirled state.
  const double alpha = 0.4;
  MsNoiseParams ms = tiq::ideal_ms_params();
  ms.nbar = 0.05;
  ms.overrotation = 0.09;
  ms.depol_p = 0.02;
  ms.eta = 0.62;

  const double rc = tiq::rc_energy(alpha, SqNoiseParams{}, ms, 0, 256, 5);

  ComplexMatrix avg(4, 4);
  const auto twirls =
      tiq::enumerate_twirls(tiq::ansatz(alpha, CompileMode::standard));
  for (const Circuit& tw : twirls) {
    avg += tiq::simulate(tw, SqNoiseParams{}, ms, tiq::dm_new(2, 0)).mat;
  }
  DensityMatrix mean;
  mean.n_qubits = 2;
  mean.mat = (1.0 / 256.0) * avg;
  ExpectationSet e;
  e.iz = tiq::expectation(mean, tiq::PauliString("IZ"));
  e.zi = tiq::expectation(mean, tiq::PauliString("ZI"));
  e.zz = tiq::expectation(mean, tiq::PauliString("ZZ"));
  e.xx = tiq::expectation(mean, tiq::PauliString("XX"));
  e.yy = tiq::expectation(mean, tiq::PauliString("YY"));
  EXPECT_NEAR(rc, tiq::energy(e, tiq::h2_hamiltonian()), 1e-9);
}

TEST(RcTest, SeedReproducibilityAndValidation) {
  MsNoiseParams ms = tiq::ideal_ms_params();
  ms.nbar = 0.05;
  ms.depol_p = 0.02;
  ms.eta = 0.62;
  const double a = tiq::rc_energy(0.1, SqNoiseParams{}, ms, 200, 10, 77);
  const double b = tiq::rc_energy(0.1, SqNoiseParams{}, ms, 200, 10, 77);
  EXPECT_EQ(a, b);
  const double c = tiq::rc_energy(0.1, SqNoiseParams{}, ms, 200, 10, 78);
  EXPECT_NE(a, c);  // different twirl subset and shots

  EXPECT_THROW(tiq::rc_energy(0.1, SqNoiseParams{}, ms, 201, 10, 1),
               std::invalid_argument);
  EXPECT_THROW(tiq::rc_energy(0.1, SqNoiseParams{}, ms, 0, 257, 1),
               std::invalid_argument);
  EXPECT_THROW(tiq::rc_energy(0.1, SqNoiseParams{}, ms, 0, 0, 1),
               std::invalid_argument);
}

TEST(PurifyTest, HartreeFockPointIsFixed) {
  ExpectationSet hf;
  hf.iz = -1.0;
  hf.zi = 1.0;
  hf.zz = -1.0;
  bool degenerate = true;
  const ExpectationSet p = tiq::purify(hf, &degenerate);
  EXPECT_FALSE(degenerate);
  EXPECT_NEAR(p.iz, -1.0, 1e-12);
  EXPECT_NEAR(p.zi, 1.0, 1e-12);
  EXPECT_NEAR(p.xx, 0.0, 1e-12);
  EXPECT_NEAR(p.yy, 0.0, 1e-12);
  EXPECT_EQ(p.zz, -1.0);
}

TEST(PurifyTest, NoisyPointImprovesVariationally) {
  ExpectationSet noisy;
  noisy.iz = -0.9;
  noisy.zi = 0.9;
  noisy.xx = 0.05;
  noisy.yy = 0.05;
  noisy.zz = -0.9;
  const ExpectationSet p = tiq::purify(noisy);
  const tiq::PauliHamiltonian h = tiq::h2_hamiltonian();
  EXPECT_LT(tiq::energy(p, h), tiq::energy(noisy, h));

  // Rank-1 readback: the implied 2x2 density matrix is a projector.
  const double p00 = (1.0 - p.iz) / 2.0;
  const double p11 = (1.0 - p.zi) / 2.0;
  const double p01 = (p.xx + p.yy) / 4.0;
  EXPECT_NEAR(p00 + p11, 1.0, 1e-12);
  EXPECT_NEAR(p00 * p11, p01 * p01, 1e-12);
}

TEST(PurifyTest, IdempotentAndProjectorOnRandomInputs) {
  tiq::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    ExpectationSet e;
    e.iz = rng.uniform(-1.1, 1.1);  // allow shot-noise overshoot
    e.zi = rng.uniform(-1.1, 1.1);
    e.xx = rng.uniform(-1.0, 1.0);
    e.yy = rng.uniform(-1.0, 1.0);
    e.zz = rng.uniform(-1.0, 1.0);
    const ExpectationSet p = tiq::purify(e);
    const ExpectationSet pp = tiq::purify(p);
    EXPECT_NEAR(pp.iz, p.iz, 1e-10);
    EXPECT_NEAR(pp.zi, p.zi, 1e-10);
    EXPECT_NEAR(pp.xx, p.xx, 1e-10);
    EXPECT_NEAR(pp.yy, p.yy, 1e-10);
    EXPECT_EQ(pp.zz, -1.0);

    const double p00 = (1.0 - p.iz) / 2.0;
    const double p11 = (1.0 - p.zi) / 2.0;
    const double p01 = (p.xx + p.yy) / 4.0;
    // rho^2 = rho entrywise for the real symmetric 2x2 projector.
    EXPECT_NEAR(p00 * p00 + p01 * p01, p00, 1e-10);
    EXPECT_NEAR(p01 * (p00 + p11), p01, 1e-10);
    EXPECT_NEAR(p11 * p11 + p01 * p01, p11, 1e-10);
  }
}

TEST(PurifyTest, PureStatesInOneParticleSectorAreFixedPoints) {
  for (const double t : {0.0, 0.3, 1.0, 2.2, -0.8}) {
    const double v0 = std::cos(t), v1 = std::sin(t);
    ExpectationSet pure;
    pure.iz = 1.0 - 2.0 * v0 * v0;
    pure.zi = 1.0 - 2.0 * v1 * v1;
    pure.xx = 2.0 * v0 * v1;
    pure.yy = 2.0 * v0 * v1;
    pure.zz = -1.0;
    const ExpectationSet p = tiq::purify(pure);
    EXPECT_NEAR(p.iz, pure.iz, 1e-10);
    EXPECT_NEAR(p.zi, pure.zi, 1e-10);
    EXPECT_NEAR(p.xx + p.yy, pure.xx + pure.yy, 1e-10);
  }
}

TEST(PurifyTest, DegenerateInputFlaggedWithCanonicalTieBreak) {
  ExpectationSet flat;  // a = d = 0.5, c = 0: fully degenerate
  flat.iz = 0.0;
  flat.zi = 0.0;
  bool degenerate = false;
  const ExpectationSet p = tiq::purify(flat, &degenerate);
  EXPECT_TRUE(degenerate);
  EXPECT_NEAR(p.iz, -1.0, 1e-12);  // canonical (1, 0) eigenvector
  EXPECT_NEAR(p.zi, 1.0, 1e-12);
}

TEST(LandscapeTest, NoiselessPurifiedEqualsRaw) {
  const std::vector<double> alphas = tiq::uniform_alphas(21);
  const auto pts =
      tiq::landscape(alphas, CompileMode::standard, Mitigation::none,
                     SqNoiseParams{}, tiq::ideal_ms_params(), 0, 0);
  ASSERT_EQ(pts.size(), alphas.size() * 2);
  for (std::size_t i = 0; i < pts.size(); i += 2) {
    EXPECT_FALSE(pts[i].purified);
    EXPECT_TRUE(pts[i + 1].purified);
    EXPECT_EQ(pts[i].alpha, pts[i + 1].alpha);
    EXPECT_NEAR(pts[i].energy, pts[i + 1].energy, 1e-9);
  }
}

TEST(LandscapeTest, VariationalBoundHoldsUnderNoise) {
  const double e0 = tiq::exact_ground_energy(tiq::h2_hamiltonian());
  MsNoiseParams ms = tiq::ideal_ms_params();
  ms.nbar = 0.05;
  ms.overrotation = -0.45;
  ms.depol_p = 0.02;
  ms.eta = 0.62;
  const std::vector<double> alphas = tiq::uniform_alphas(21);
  for (const CompileMode mode :
       {CompileMode::standard, CompileMode::hidden_inverse}) {
    for (const Mitigation mit : {Mitigation::none, Mitigation::rc}) {
      const auto pts = tiq::landscape(alphas, mode, mit, SqNoiseParams{}, ms,
                                      0, 0);
      for (const tiq::LandscapePoint& p : pts) {
        EXPECT_GE(p.energy, e0 - 1e-9)
            << "alpha " << p.alpha << " purified " << p.purified;
      }
    }
  }
}

TEST(LandscapeTest, HiddenInverseBeatsDefaultUnderSymmetricUnderRotation) {
  // 0.5-radian symmetric under-rotation of the MS drive: the second CNOT of
  // the HI circuit runs XX(-pi/2 - (-0.5)) and its error cancels against the
  // first CNOT's, while the default circuit accumulates it twice.
  const double e0 = tiq::exact_ground_energy(tiq::h2_hamiltonian());
  MsNoiseParams ms = tiq::ideal_ms_params();
  ms.overrotation = -0.5;

  const double alpha_star =
      refine_minimum(-0.4, 0.0, CompileMode::standard, SqNoiseParams{},
                     tiq::ideal_ms_params());
  const double e_default = analytic_energy(alpha_star, CompileMode::standard,
                                           SqNoiseParams{}, ms);
  const double e_hi = analytic_energy(alpha_star, CompileMode::hidden_inverse,
                                      SqNoiseParams{}, ms);
  EXPECT_LT(std::abs(e_hi - e0), std::abs(e_default - e0));

  // Purification preserves the ordering and never de-purifies the winner.
  const auto purified_energy = [&](CompileMode mode) {
    const ExpectationSet e = tiq::measure_expectations(
        tiq::ansatz(alpha_star, mode), SqNoiseParams{}, ms, 0, 0);
    return tiq::energy(tiq::purify(e), tiq::h2_hamiltonian());
  };
  EXPECT_LE(std::abs(purified_energy(CompileMode::hidden_inverse) - e0),
            std::abs(e_hi - e0) + 1e-9);
  EXPECT_LE(std::abs(purified_energy(CompileMode::standard) - e0),
            std::abs(e_default - e0) + 1e-9);
}

TEST(LandscapeTest, CsvFormat) {
  const auto pts = tiq::landscape({0.0, 0.5}, CompileMode::hidden_inverse,
                                  Mitigation::none, SqNoiseParams{},
                                  tiq::ideal_ms_params(), 0, 0);
  const std::string csv = tiq::write_landscape_csv(pts);
  EXPECT_EQ(csv.rfind("alpha_rad,energy_hartree,mode,mitigation,purified,shots\n",
                      0),
            0u);
  EXPECT_NE(csv.find(",hi,none,0,0\n"), std::string::npos);
  EXPECT_NE(csv.find(",hi,none,1,0\n"), std::string::npos);
}

TEST(UniformAlphasTest, SymmetricInclusiveGrid) {
  const std::vector<double> a = tiq::uniform_alphas(41);
  ASSERT_EQ(a.size(), 41u);
  EXPECT_EQ(a.front(), -kPi / 2);
  EXPECT_EQ(a.back(), kPi / 2);
  EXPECT_EQ(a[20], 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], -a[a.size() - 1 - i]);
  }
  EXPECT_THROW(tiq::uniform_alphas(1), std::invalid_argument);
}

TEST(ExactEnergyJsonTest, WellFormed) {
  const nlohmann::json j =
      nlohmann::json::parse(tiq::exact_energy_json(tiq::h2_hamiltonian()));
  EXPECT_NEAR(j.at("ground_energy_hartree").get<double>(),
              tiq::exact_ground_energy(tiq::h2_hamiltonian()), 0.0);
}

}  // namespace
