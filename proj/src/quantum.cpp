#include "eprgame/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eprgame/errors.hpp"

namespace eprgame {

namespace {

using Operator = Eigen::Matrix<Complex, 8, 8>;

// Kronecker product A (x) B (x) C of single-qubit operators.
Operator kron3(const Projector& a, const Projector& b, const Projector& c) {
  Operator out;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      out(i, j) = a(i >> 2, j >> 2) * b((i >> 1) & 1, (j >> 1) & 1) * c(i & 1, j & 1);
    }
  }
  return out;
}

// (A (x) B (x) C) psi by contracting one qubit index at a time.
StateVector apply3(const Projector& a, const Projector& b, const Projector& c,
                   const StateVector& psi) {
  StateVector t1 = StateVector::Zero();
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 2; ++k) t1(i) += c(i & 1, k) * psi((i & ~1) | k);
  }
  StateVector t2 = StateVector::Zero();
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 2; ++k) t2(i) += b((i >> 1) & 1, k) * t1((i & ~2) | (k << 1));
  }
  StateVector t3 = StateVector::Zero();
  for (int i = 0; i < 8; ++i) {
    for (int k = 0; k < 2; ++k) t3(i) += a(i >> 2, k) * t2((i & ~4) | (k << 2));
  }
  return t3;
}

double clamp_probability(double v) {
  if (!std::isfinite(v) || v < -kClampTol || v > 1 + kClampTol) {
    throw NumericalError("Born probability " + to_string(v) + " outside [0,1]");
  }
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

Direction direction_from_angles(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

MeasurementSetup uniform_setup(const Direction& direction) {
  MeasurementSetup setup;
  for (auto& pair : setup.directions) pair = {direction, direction};
  return setup;
}

TripartiteState ghz_state() {
  StateVector psi = StateVector::Zero();
  psi(0) = psi(7) = Complex(1.0 / std::numbers::sqrt2, 0.0);
  return {psi};
}

DensityMatrix density_from_pure(const StateVector& psi) { return psi * psi.adjoint(); }

StateReport validate_state(const TripartiteState& state) {
  StateReport report;
  if (const auto* psi = std::get_if<StateVector>(&state.value)) {
    if (!psi->allFinite()) report.failures.emplace_back("amplitudes must be finite");
    report.norm_residual = std::abs(psi->squaredNorm() - 1.0);
    if (!(report.norm_residual <= kStateTol)) {
      report.failures.push_back("squared amplitudes sum to " + to_string(psi->squaredNorm()));
    }
  } else {
    const auto& rho = std::get<DensityMatrix>(state.value);
    if (!rho.allFinite()) {
      report.failures.emplace_back("density entries must be finite");
      return report;
    }
    report.hermiticity_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (!(report.hermiticity_residual <= kStateTol)) {
      report.failures.push_back("density is not Hermitian (residual " +
                                to_string(report.hermiticity_residual) + ")");
    }
    const Complex trace = rho.trace();
    report.trace_residual = std::abs(trace - Complex(1.0, 0.0));
    if (!(report.trace_residual <= kStateTol)) {
      report.failures.push_back("trace is " + to_string(trace.real()));
    }
    const DensityMatrix hermitian_part = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<DensityMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
    report.min_eigenvalue = solver.eigenvalues().minCoeff();
    if (!(report.min_eigenvalue >= kEigenvalueFloor)) {
      report.failures.push_back("negative eigenvalue " + to_string(report.min_eigenvalue));
    }
  }
  report.pass = report.failures.empty();
  return report;
}

void validate_setup(const MeasurementSetup& setup) {
  static const char* const kLabels[3][2] = {{"alice[0]", "alice[1]"},
                                            {"bob[0]", "bob[1]"},
                                            {"chris[0]", "chris[1]"}};
  std::vector<std::string> failures;
  for (std::size_t p = 0; p < 3; ++p) {
    for (std::size_t s = 0; s < 2; ++s) {
      const Direction& n = setup.directions[p][s];
      const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
      if (!(std::abs(norm - 1.0) <= kDirectionTol)) {
        failures.push_back(std::string(kLabels[p][s]) + " has norm " + to_string(norm));
      }
    }
  }
  if (!failures.empty()) {
    throw InvalidSetup("directions must be unit vectors: " + join_details(failures), failures);
  }
}

Projector spin_projector(const Direction& n, int sign) {
  const double s = sign > 0 ? 0.5 : -0.5;
  Projector out;
  out(0, 0) = Complex(0.5 + s * n[2], 0.0);
  out(1, 1) = Complex(0.5 - s * n[2], 0.0);
  out(0, 1) = Complex(s * n[0], -s * n[1]);
  out(1, 0) = Complex(s * n[0], s * n[1]);
  return out;
}

JointProbabilitySet<double> born_joint_probabilities(const TripartiteState& state,
                                                     const MeasurementSetup& setup) {
  const StateReport report = validate_state(state);
  if (!report.pass) {
    throw InvalidState("invalid state: " + join_details(report.failures), report.failures);
  }
  validate_setup(setup);

  std::array<double, kEntryCount> out{};
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    const PureProfile& profile = kCanonicalProfiles[ctx];
    for (std::size_t o = 0; o < kOutcomeCount; ++o) {
      const OutcomeTriple& outcome = kCanonicalOutcomes[o];
      const Projector a = spin_projector(setup.direction(Player::kAlice, profile.alice), outcome.alice);
      const Projector b = spin_projector(setup.direction(Player::kBob, profile.bob), outcome.bob);
      const Projector c = spin_projector(setup.direction(Player::kChris, profile.chris), outcome.chris);
      double probability = 0.0;
      if (const auto* psi = std::get_if<StateVector>(&state.value)) {
        probability = apply3(a, b, c, *psi).squaredNorm();
      } else {
        const auto& rho = std::get<DensityMatrix>(state.value);
        probability = (kron3(a, b, c) * rho).trace().real();
      }
      out[ctx * kOutcomeCount + o] = clamp_probability(probability);
    }
  }
  return JointProbabilitySet<double>(out);
}

}  // namespace eprgame
