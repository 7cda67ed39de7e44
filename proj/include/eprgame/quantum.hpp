#pragma once

#include <array>
#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "eprgame/behavior.hpp"

namespace eprgame {

using Complex = std::complex<double>;
// Basis |abc> has index 4a + 2b + c with Alice's qubit most significant;
// |0> is the +1 eigenvector of sigma_z.
using StateVector = Eigen::Matrix<Complex, 8, 1>;
using DensityMatrix = Eigen::Matrix<Complex, 8, 8>;
using Projector = Eigen::Matrix<Complex, 2, 2>;
using Direction = std::array<double, 3>;

struct TripartiteState {
  std::variant<StateVector, DensityMatrix> value;

  bool is_pure() const { return std::holds_alternative<StateVector>(value); }
};

// Directions indexed [player][setting]: Alice S1, S2; Bob S1', S2'; Chris S1'', S2''.
struct MeasurementSetup {
  std::array<std::array<Direction, 2>, 3> directions{};

  const Direction& direction(Player player, Setting setting) const {
    return directions[static_cast<std::size_t>(player)][static_cast<std::size_t>(setting)];
  }
};

// Unit vector with polar angle theta from +z and azimuth phi from +x.
Direction direction_from_angles(double theta, double phi);

// Same direction for every player and setting.
MeasurementSetup uniform_setup(const Direction& direction);

// (|000> + |111>) / sqrt(2).
TripartiteState ghz_state();

// |psi><psi|.
DensityMatrix density_from_pure(const StateVector& psi);

struct StateReport {
  bool pass = false;
  double norm_residual = 0.0;         // pure: |<psi|psi> - 1|
  double hermiticity_residual = 0.0;  // density: max |rho - rho^dagger|
  double trace_residual = 0.0;        // density: |tr rho - 1|
  double min_eigenvalue = 0.0;        // density
  std::vector<std::string> failures;
};

inline constexpr double kStateTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kDirectionTol = 1e-12;
inline constexpr double kClampTol = 1e-10;

StateReport validate_state(const TripartiteState& state);

// Throws InvalidSetup when a direction is not a unit vector within kDirectionTol.
void validate_setup(const MeasurementSetup& setup);

// (I + sign n.sigma) / 2.
Projector spin_projector(const Direction& n, int sign);

// Born-rule probabilities of every outcome triple in every context. Pure
// states contract the state vector with the projectors, density operators
// use tr(P rho). Values within kClampTol outside [0, 1] are clamped; larger
// excursions throw NumericalError. Throws InvalidState or InvalidSetup.
JointProbabilitySet<double> born_joint_probabilities(const TripartiteState& state,
                                                     const MeasurementSetup& setup);

}  // namespace eprgame
