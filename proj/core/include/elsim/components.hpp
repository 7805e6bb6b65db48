#pragma once

// =============================================================================
// elsim - per-mode quadratic energy/dissipation data over generalized
// charge coordinates, and the evaluation of energies and their gradients.
//
// A circuit mode is described by
//   magnetic co-energy      T(qd)   = 1/2 qd' M qd          (M in henry)
//   electric field energy   V_f(q)  = 1/2 (Pq)' diag(1/C) (Pq)
//   source/forcing term     V_s(q)  = -q' Bw w              (w in volt)
//   Rayleigh dissipation    D(qd)   = 1/2 qd' R qd          (R in ohm)
// so the Euler-Lagrange equations read  M qdd + R qd + P'diag(1/C)P q = Bw w.
// =============================================================================

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "elsim/linalg.hpp"
#include "elsim/types.hpp"

namespace elsim {

struct ELComponents {
    Mat inductance;    ///< M(u), n x n symmetric PSD, henry
    Mat resistance;    ///< R(u), n x n symmetric PSD, ohm
    Mat charge_map;    ///< P, m x n; capacitor charges p = P q
    Vec elastance;     ///< 1/C per capacitor, m entries, strictly positive
    Mat input_map;     ///< Bw(u), n x p; affine generalized force Bw(u) w
    std::vector<std::string> capacitor_names;  ///< voltage label per charge-map row
    std::vector<std::string> input_names;      ///< exogenous inputs w, volt

    [[nodiscard]] Eigen::Index coords() const { return inductance.rows(); }
    [[nodiscard]] Eigen::Index capacitors() const { return charge_map.rows(); }
    [[nodiscard]] Eigen::Index inputs() const { return input_map.cols(); }

    /// Assembled stiffness P' diag(1/C) P, 1/farad.
    [[nodiscard]] Mat stiffness() const;

    /// Dimensions, symmetry, positive semidefiniteness, elastance positivity.
    void validate() const;
};

/// 1/2 qd' M qd, joule. Nonnegative for valid components.
double kinetic_energy(const ELComponents& c, const Vec& qdot);

/// 1/2 (Pq)' diag(1/C) (Pq) - q' Bw w, joule. Sources and diode drops enter
/// through the input map; there is no separate forcing vector.
double potential_energy(const ELComponents& c, const Vec& q, const Vec& w);

/// Rayleigh dissipation function 1/2 qd' R qd, watt.
double rayleigh_dissipation(const ELComponents& c, const Vec& qdot);

struct EnergyGradients {
    Vec d_kinetic_d_current;      ///< M qd
    Vec d_potential_d_charge;     ///< P'diag(1/C)P q - Bw w
    Vec d_dissipation_d_current;  ///< R qd
};

EnergyGradients energy_gradients(const ELComponents& c, const Vec& q, const Vec& qdot,
                                 const Vec& w);

/// Named linear combination of coordinate currents, e.g. the load voltage
/// R_o (i - i_Ls - i_Lc) of the boost converter.
struct DerivedOutput {
    std::string name;
    std::vector<std::pair<std::string, double>> current_weights;  ///< (current label, coefficient)
};

struct CircuitDescription {
    std::string name;
    CoordinateSet coords;
    std::vector<std::string> bit_names;      ///< switch-bit order shared by all modes
    std::map<ModeVector, ELComponents> modes;
    std::vector<std::pair<std::string, double>> parameters;  ///< resolved SI values
    std::vector<std::string> notes;          ///< defaulted/ambiguous parameter remarks
    std::vector<DerivedOutput> outputs;

    [[nodiscard]] const ELComponents& mode(const ModeVector& u) const;

    /// Identical coordinate/input ordering across modes; every mode validates.
    void validate() const;
};

}  // namespace elsim
