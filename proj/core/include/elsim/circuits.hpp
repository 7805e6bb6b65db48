#pragma once

// =============================================================================
// elsim - parameterized constructors for the built-in circuits, with
// validated parameter records for the high-fidelity element models.
//
// High-fidelity equivalents: an inductor carries series R_L (and an unused
// self-capacitance C_L); a capacitor carries ESR R_c and ESL L_c; the diode is
// piecewise-linear (R_d(u), V_D(u) = u V_d_on) with junction capacitance C_d;
// the MOSFET channel is R_s(u_m) with package L_s and C_s.
// =============================================================================

#include "elsim/components.hpp"

namespace elsim {

struct HFDiodeParams {
    double r_d_on = 0.05;   ///< ohm
    double r_d_off = 10e3;  ///< ohm
    double c_d = 10e-9;     ///< farad, junction capacitance
    double v_d_on = 0.7;    ///< volt, forward drop when conducting
    void validate() const;
};

struct HFMosfetParams {
    double r_s_on = 0.2;   ///< ohm
    double r_s_off = 2e6;  ///< ohm
    double l_s = 20e-9;    ///< henry, package inductance
    double c_s = 200e-12;  ///< farad, output capacitance
    void validate() const;
};

struct HFInductorParams {
    double l = 1.6e-3;   ///< henry, bulk inductance
    double r_l = 0.1;    ///< ohm, winding resistance
    double c_l = 1e-12;  ///< farad, self-capacitance; accepted but unused
    void validate() const;
};

struct HFCapacitorParams {
    double c = 42e-6;    ///< farad, bulk capacitance
    double r_c = 0.4;    ///< ohm, ESR
    double l_c = 100e-12;  ///< henry, ESL
    void validate() const;
};

struct SquareWaveSpec {
    double amplitude = 12.0;   ///< volt
    double frequency = 1e3;    ///< hertz
    void validate() const;
};

/// Elements of the plain series diode circuit (switch bit u_d): source, R_s,
/// L_s, ideal diode, then load R parallel to C.
struct IdealDiodeCircuitParams {
    double l_s = 10e-6;
    double r_s = 0.01;
    double r = 10.0;
    double c = 1e-3;
    void validate() const;
};

struct TwoSourceParams {
    double l1 = 1e-3;
    double l2 = 1e-3;
    double c = 1e-6;
    double r = 10.0;
    double e1 = 5.0;
    double e2 = 3.0;
    void validate() const;
};

struct LcCircuitParams {
    double l1 = 1e-3;
    double l2 = 1e-3;
    double c1 = 1e-6;
    double e = 0.0;  ///< source may be zero (free oscillation)
    void validate() const;
};

struct RectifierParams {
    SquareWaveSpec source{12.0, 1e3};
    double r_s = 0.01;
    double l_s = 10e-6;
    HFDiodeParams diode{0.05, 10e3, 10e-9, 0.7};
    // The smoothing capacitor's ESL is listed ambiguously in the source data
    // (10 uH and 10 nH); the ESL-scale 10 nH is the default, overridable.
    HFCapacitorParams cap{1e-3, 1.0, 10e-9};
    double r_load = 10.0;
    void validate() const;
};

struct BoostParams {
    double v_i = 10.0;
    HFInductorParams inductor{1.6e-3, 0.1, 1e-12};
    HFMosfetParams mosfet{0.2, 2e6, 20e-9, 200e-12};
    // C_d defaults to 15 nF; the quoted 15 mF is not a plausible junction
    // capacitance. Overridable through the parameter file.
    HFDiodeParams diode{0.05, 40e6, 15e-9, 0.7};
    HFCapacitorParams cap{42e-6, 0.4, 100e-12};
    double r_o = 17.0;   ///< load; resolve via calibrate_boost_load() when unknown
    double duty = 0.5;
    double f_sw = 50e3;
    void validate() const;
};

// --- constructors -----------------------------------------------------------

/// Two coordinates (q_L, q_C); modes u_d in {0,1}. At u_d=0 the inductor
/// branch is disconnected: its kinetic and dissipation terms vanish and the
/// reduction yields a descriptor model with E = diag(0, 1).
CircuitDescription ideal_diode_circuit(const IdealDiodeCircuitParams& p = {});

/// Single-mode, three-coordinate circuit with two sources; the E2 branch
/// current is q_C - q_L1 + q_L2, so E2 enters several input-map rows.
CircuitDescription two_source_circuit(const TwoSourceParams& p);

/// Lossless two-inductor/one-capacitor loop; charge map P = [1, -1]
/// (the capacitor charge is q_L1 - q_L2), dissipation identically zero.
CircuitDescription lc_circuit(const LcCircuitParams& p);

/// H-F diode rectifier: coordinates (q_s, q_Lc, q_cd), modes u_d in {0,1},
/// inputs (V_i, V_d_on). States after reduction: (i, i_Lc, v_d, v_c).
CircuitDescription hf_rectifier(const RectifierParams& p);

/// H-F boost converter: coordinates (q_1..q_5), complementary switching --
/// reachable modes are exactly (u_m=1,u_d=0) and (u_m=0,u_d=1). States after
/// reduction: (i, i_Ls, i_Lc, v_c, v_cs, v_d).
CircuitDescription hf_boost(const BoostParams& p);

/// DC companion of the boost for load calibration: same conduction-loss
/// elements (R_L, R_s(u_m), R_d(u_d), V_d_on, R_c, C, R_o) with the switch
/// energy-storage parasitics (L_s, C_s, C_d, L_c) removed. Mode-averaging its
/// two modes is the classic state-space average, which is valid only without
/// the fast switch states.
CircuitDescription boost_dc_companion(const BoostParams& p);

}  // namespace elsim
