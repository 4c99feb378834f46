#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>

#include "qkd/rng.hpp"

namespace qkd {

// Entangled atom-photon pair mixed with white noise:
//   rho = V |psi><psi| + (1 - V) I/4,
// around the pure state |psi> = (|00> - |11>)/sqrt(2) in the
// |atom,photon> product basis.
struct TwoQubitState {
  double visibility = 1.0;

  Eigen::Matrix4cd density() const;
  static Eigen::Vector4cd pure_state();
};

// Projective measurement axes on the Bloch sphere, Alice (atom) first.
struct MeasurementSetting {
  Eigen::Vector3d alice_axis;
  Eigen::Vector3d bob_axis;

  static Eigen::Vector3d axis_x() { return {1.0, 0.0, 0.0}; }
  static Eigen::Vector3d axis_y() { return {0.0, 1.0, 0.0}; }
  static Eigen::Vector3d axis_z() { return {0.0, 0.0, 1.0}; }
  static Eigen::Vector3d axis_y_minus_x();
  static Eigen::Vector3d axis_y_plus_x();
};

// Joint probabilities over outcome bits (x, y); bit 0 is the +1 eigenvalue.
struct OutcomeDistribution {
  std::array<double, 4> p{};  // index = x*2 + y

  double& at(int x, int y) { return p[x * 2 + y]; }
  double at(int x, int y) const { return p[x * 2 + y]; }
  double p_same() const { return p[0] + p[3]; }
};

// Eigenprojector (I + (-1)^bit axis.sigma)/2 for a unit Bloch axis.
Eigen::Matrix2cd bloch_projector(const Eigen::Vector3d& axis, int bit);

// Born-rule joint distribution P(x,y) = Tr[rho Pi_x(a) (x) Pi_y(b)].
// Throws std::invalid_argument for non-unit axes (1e-12 tolerance).
OutcomeDistribution joint_distribution(const TwoQubitState& state,
                                       const MeasurementSetting& setting);

std::pair<int, int> sample_outcome(const OutcomeDistribution& dist, Rng& rng);

// V = 2F - 1. Throws for F outside [0, 1].
double visibility_from_fidelity(double fidelity);

// CHSH value 2*sqrt(2)*V predicted by the white-noise model.
double expected_chsh(double visibility);

// The four CHSH settings, indexed by (a << 1) | b:
// Alice measures (y-x)/sqrt2 for a=0, (y+x)/sqrt2 for a=1;
// Bob measures y for b=0, x for b=1.
std::array<MeasurementSetting, 4> chsh_settings();

// Protocol settings: sigma_z when the basis bit is 0, sigma_y when 1.
MeasurementSetting protocol_setting(int alice_bit, int bob_bit);

}  // namespace qkd
