#pragma once

// =============================================================================
// elsim - assembly of per-mode Euler-Lagrange equations and their reduction
// to regular (A, B) or descriptor (E, A, B) state-space models.
//
// States are ordered canonically: coordinate currents that survive reduction
// (in coordinate order), then capacitor voltages (in charge-map row order).
// Tests that compare against externally printed matrices align by label.
// =============================================================================

#include <map>
#include <string>
#include <vector>

#include "elsim/components.hpp"

namespace elsim {

/// One mode's equations M qdd + R qd + S q = Bw w, exactly as assembled.
struct SecondOrderForm {
    ModeVector mode;
    Mat inductance;   ///< M(u)
    Mat resistance;   ///< R(u)
    Mat stiffness;    ///< P' diag(1/C) P
    Mat input_map;    ///< Bw(u)
    std::vector<std::string> coordinate_names;
    std::vector<std::string> input_names;
};

/// Re-packages one mode of the circuit as its second-order EL form.
SecondOrderForm assemble(const CircuitDescription& c, const ModeVector& u);

/// Index split by inductance-row structure: i is inertial iff row i of M is
/// nonzero. Non-inertial coordinates contribute first-order rows only.
struct Partition {
    std::vector<int> inertial;
    std::vector<int> noninertial;
};

Partition partition(const SecondOrderForm& f);

enum class ModelKind { Regular, Descriptor };

struct ReducedModel {
    ModelKind kind = ModelKind::Regular;
    Mat A;            ///< state matrix
    Mat B;            ///< input matrix
    Vec e_diag;       ///< diagonal of E; all ones for Regular, {0,1} for Descriptor
    std::vector<std::string> state_labels;  ///< currents first, then voltages
    std::vector<std::string> input_labels;
    int current_states = 0;  ///< leading states that are coordinate currents

    // Derived views consumed by the simulator and by residual checks.
    Mat storage;           ///< Q with stored energy = 1/2 x'Qx (block M_II, then C)
    Mat qdot_from_state;   ///< n_coords x n_states: full coordinate currents from x
    Mat qdot_from_input;   ///< n_coords x n_inputs
    Mat coord_resistance;  ///< R(u) over coordinates
    Mat coord_input_map;   ///< Bw(u) over coordinates

    [[nodiscard]] Eigen::Index states() const { return A.rows(); }
    [[nodiscard]] int state_index(const std::string& label) const;
};

/// Eliminates non-inertial coordinates through their resistive rows.
/// A coordinate whose inductance row, resistance row and charge-map column all
/// vanish in this mode gets a zero descriptor row (E_ii = 0) instead of an
/// invented equation; a nonzero forcing row or a singular resistive block that
/// couples other coordinates raises ReductionError naming the coordinate.
ReducedModel reduce(const SecondOrderForm& f, const CircuitDescription& c);

struct SwitchedModel {
    std::string circuit_name;
    std::vector<std::string> bit_names;
    std::vector<std::string> state_labels;
    std::vector<std::string> input_labels;
    std::map<ModeVector, ReducedModel> modes;
    std::vector<DerivedOutput> outputs;   ///< carried over from the circuit
    std::vector<std::pair<std::string, double>> parameters;

    [[nodiscard]] const ReducedModel& mode(const ModeVector& u) const;
};

/// Reduces every reachable mode and checks label/dimension consistency.
SwitchedModel build_switched_model(const CircuitDescription& c);

/// The flawed single-Lagrangian diode-circuit model (states i_L, v_C):
///   A(u) = [[-R_s/L_s, -u/L_s], [u/C, -1/(R C)]],  B(u) = [u/L_s, 0]'.
/// Correct at u=1, wrong at u=0 (its first row keeps the inductor dynamics the
/// mode no longer has). Kept as a test fixture for comparison against the
/// per-mode derivation.
struct IdealDiodeCircuitParams;  // circuits.hpp
SwitchedModel erroneous_reference_model();
SwitchedModel erroneous_reference_model(const IdealDiodeCircuitParams& p);

/// Text dump, one block per mode: label header lines, then E (descriptor only),
/// then A and B row-major with 17 significant digits.
std::string dump_matrices(const SwitchedModel& m);

}  // namespace elsim
