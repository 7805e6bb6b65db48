#include "elsim/circuits.hpp"

namespace elsim {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ParamError(std::string("parameter '") + name + "' must be strictly positive");
    }
}

/// R += r * (sum_k c_k e_k)(...)' for one resistor carrying the branch current
/// sum_k c_k qd_k.
void add_branch_resistor(Mat& r_matrix, double r,
                         std::initializer_list<std::pair<int, double>> branch) {
    Vec v = Vec::Zero(r_matrix.rows());
    for (const auto& [idx, coeff] : branch) v[idx] = coeff;
    r_matrix += r * v * v.transpose();
}

}  // namespace

void HFDiodeParams::validate() const {
    require_positive(r_d_on, "R_d_on");
    require_positive(r_d_off, "R_d_off");
    require_positive(c_d, "C_d");
    require_positive(v_d_on, "V_d_on");
    if (!(r_d_off > r_d_on)) throw ParamError("diode: R_d_off must exceed R_d_on");
}

void HFMosfetParams::validate() const {
    require_positive(r_s_on, "R_s_on");
    require_positive(r_s_off, "R_s_off");
    require_positive(l_s, "L_s");
    require_positive(c_s, "C_s");
    if (!(r_s_off > r_s_on)) throw ParamError("mosfet: R_s_off must exceed R_s_on");
}

void HFInductorParams::validate() const {
    require_positive(l, "L");
    require_positive(r_l, "R_L");
    require_positive(c_l, "C_L");
}

void HFCapacitorParams::validate() const {
    require_positive(c, "C");
    require_positive(r_c, "R_c");
    require_positive(l_c, "L_c");
}

void SquareWaveSpec::validate() const {
    require_positive(amplitude, "amplitude");
    require_positive(frequency, "frequency");
}

void IdealDiodeCircuitParams::validate() const {
    require_positive(l_s, "L_s");
    require_positive(r_s, "R_s");
    require_positive(r, "R");
    require_positive(c, "C");
}

void TwoSourceParams::validate() const {
    require_positive(l1, "L1");
    require_positive(l2, "L2");
    require_positive(c, "C");
    require_positive(r, "R");
    if (!std::isfinite(e1) || !std::isfinite(e2)) throw ParamError("E1/E2 must be finite");
}

void LcCircuitParams::validate() const {
    require_positive(l1, "L1");
    require_positive(l2, "L2");
    require_positive(c1, "C1");
    if (!std::isfinite(e)) throw ParamError("E must be finite");
}

void RectifierParams::validate() const {
    source.validate();
    require_positive(r_s, "R_s");
    require_positive(l_s, "L_s");
    diode.validate();
    cap.validate();
    require_positive(r_load, "R_L");
}

void BoostParams::validate() const {
    require_positive(v_i, "V_i");
    inductor.validate();
    mosfet.validate();
    diode.validate();
    cap.validate();
    require_positive(r_o, "R_o");
    require_positive(f_sw, "f_sw");
    if (!(duty > 0.0 && duty < 1.0)) throw ParamError("duty must lie in (0, 1)");
}

CircuitDescription ideal_diode_circuit(const IdealDiodeCircuitParams& p) {
    p.validate();
    CircuitDescription c;
    c.name = "ideal-diode";
    c.coords = {{"q_L", "q_C"}, {"i_L", "i_C"}};
    c.bit_names = {"u_d"};
    c.parameters = {{"L_s", p.l_s}, {"R_s", p.r_s}, {"R", p.r}, {"C", p.c}};
    for (int u = 0; u <= 1; ++u) {
        ELComponents el;
        el.inductance = Mat::Zero(2, 2);
        el.inductance(0, 0) = u ? p.l_s : 0.0;  // T = 1/2 L_s (u qd_L)^2
        el.resistance = Mat::Zero(2, 2);
        if (u) {
            add_branch_resistor(el.resistance, p.r_s, {{0, 1.0}});
            add_branch_resistor(el.resistance, p.r, {{0, 1.0}, {1, -1.0}});
        } else {
            add_branch_resistor(el.resistance, p.r, {{1, -1.0}});
        }
        el.charge_map = Mat{{0.0, 1.0}};
        el.elastance = Vec::Constant(1, 1.0 / p.c);
        el.capacitor_names = {"v_C"};
        el.input_map = Mat{{double(u)}, {0.0}};
        el.input_names = {"V_i"};
        c.modes.emplace(ModeVector({"u_d"}, {u}), std::move(el));
    }
    return c;
}

CircuitDescription two_source_circuit(const TwoSourceParams& p) {
    p.validate();
    CircuitDescription c;
    c.name = "two-source";
    c.coords = {{"q_L1", "q_L2", "q_C"}, {"i_L1", "i_L2", "i_C"}};
    c.bit_names = {};
    c.parameters = {{"L1", p.l1}, {"L2", p.l2}, {"C", p.c},
                    {"R", p.r},   {"E1", p.e1}, {"E2", p.e2}};

    ELComponents el;
    el.inductance = Vec{{p.l1, p.l2, 0.0}}.asDiagonal();
    el.resistance = Mat::Zero(3, 3);
    add_branch_resistor(el.resistance, p.r, {{0, 1.0}, {2, -1.0}});  // R carries i_L1 - i_C
    el.charge_map = Mat{{0.0, 0.0, 1.0}};
    el.elastance = Vec::Constant(1, 1.0 / p.c);
    el.capacitor_names = {"v_C"};
    // V(q) = q_C^2/2C - E1 q_L1 - E2 (q_C - q_L1 + q_L2): the E2 branch
    // current is a combination of coordinates, so its force spreads over rows.
    el.input_map = Mat{{1.0, -1.0}, {0.0, 1.0}, {0.0, 1.0}};
    el.input_names = {"E_1", "E_2"};
    c.modes.emplace(ModeVector({}, {}), std::move(el));
    return c;
}

CircuitDescription lc_circuit(const LcCircuitParams& p) {
    p.validate();
    CircuitDescription c;
    c.name = "lc";
    c.coords = {{"q_L1", "q_L2"}, {"i_L1", "i_L2"}};
    c.bit_names = {};
    c.parameters = {{"L1", p.l1}, {"L2", p.l2}, {"C1", p.c1}, {"E", p.e}};

    ELComponents el;
    el.inductance = Vec{{p.l1, p.l2}}.asDiagonal();
    el.resistance = Mat::Zero(2, 2);
    el.charge_map = Mat{{1.0, -1.0}};  // capacitor charge q_L1 - q_L2
    el.elastance = Vec::Constant(1, 1.0 / p.c1);
    el.capacitor_names = {"v_C1"};
    el.input_map = Mat{{1.0}, {0.0}};
    el.input_names = {"E"};
    c.modes.emplace(ModeVector({}, {}), std::move(el));
    return c;
}

CircuitDescription hf_rectifier(const RectifierParams& p) {
    p.validate();
    CircuitDescription c;
    c.name = "hf-rectifier";
    c.coords = {{"q_s", "q_Lc", "q_cd"}, {"i", "i_Lc", "i_cd"}};
    c.bit_names = {"u_d"};
    c.parameters = {{"amplitude", p.source.amplitude},
                    {"frequency", p.source.frequency},
                    {"R_s", p.r_s},
                    {"L_s", p.l_s},
                    {"R_d_on", p.diode.r_d_on},
                    {"R_d_off", p.diode.r_d_off},
                    {"C_d", p.diode.c_d},
                    {"V_d_on", p.diode.v_d_on},
                    {"C", p.cap.c},
                    {"R_c", p.cap.r_c},
                    {"L_c", p.cap.l_c},
                    {"R_L", p.r_load}};
    c.notes = {"L_c defaulted to 10 nH (source lists both 10 uH and 10 nH); override via L_c",
               "R_L appears twice in the source parameter list; treated as the single "
               "load branch between the q_s and q_Lc loops"};
    c.outputs = {{"v_out", {{"i", p.r_load}, {"i_Lc", -p.r_load}}}};

    for (int u = 0; u <= 1; ++u) {
        const double r_d = u ? p.diode.r_d_on : p.diode.r_d_off;
        ELComponents el;
        el.inductance = Vec{{p.l_s, p.cap.l_c, 0.0}}.asDiagonal();
        el.resistance = Mat::Zero(3, 3);
        add_branch_resistor(el.resistance, p.r_s, {{0, 1.0}});
        add_branch_resistor(el.resistance, p.cap.r_c, {{1, 1.0}});
        add_branch_resistor(el.resistance, r_d, {{0, 1.0}, {2, -1.0}});
        add_branch_resistor(el.resistance, p.r_load, {{0, 1.0}, {1, -1.0}});
        el.charge_map = Mat{{0.0, 0.0, 1.0},   // C_d holds q_cd
                            {0.0, 1.0, 0.0}};  // C holds q_Lc
        el.elastance = Vec{{1.0 / p.diode.c_d, 1.0 / p.cap.c}};
        el.capacitor_names = {"v_d", "v_c"};
        // V(q,u) = ... - V_i q_s + u V_d_on (q_s - q_cd)
        el.input_map = Mat{{1.0, -double(u)}, {0.0, 0.0}, {0.0, double(u)}};
        el.input_names = {"V_i", "V_d_on"};
        c.modes.emplace(ModeVector({"u_d"}, {u}), std::move(el));
    }
    return c;
}

namespace {

ELComponents boost_mode_components(const BoostParams& p, int u_m, int u_d) {
    const double r_s = u_m ? p.mosfet.r_s_on : p.mosfet.r_s_off;
    const double r_d = u_d ? p.diode.r_d_on : p.diode.r_d_off;
    ELComponents el;
    el.inductance =
        Vec{{p.inductor.l, p.mosfet.l_s, p.cap.l_c, 0.0, 0.0}}.asDiagonal();
    el.resistance = Mat::Zero(5, 5);
    add_branch_resistor(el.resistance, p.inductor.r_l, {{0, 1.0}});
    add_branch_resistor(el.resistance, r_s, {{1, 1.0}, {3, -1.0}});
    add_branch_resistor(el.resistance, p.cap.r_c, {{2, 1.0}});
    add_branch_resistor(el.resistance, r_d, {{0, 1.0}, {1, -1.0}, {4, -1.0}});
    add_branch_resistor(el.resistance, p.r_o, {{0, 1.0}, {1, -1.0}, {2, -1.0}});
    el.charge_map = Mat::Zero(3, 5);
    el.charge_map(0, 2) = 1.0;  // C    holds q_3
    el.charge_map(1, 3) = 1.0;  // C_s  holds q_4
    el.charge_map(2, 4) = 1.0;  // C_d  holds q_5
    el.elastance = Vec{{1.0 / p.cap.c, 1.0 / p.mosfet.c_s, 1.0 / p.diode.c_d}};
    el.capacitor_names = {"v_c", "v_cs", "v_d"};
    // V(q,u_d) = ... - V_i q_1 + u_d V_d_on (q_1 - q_2 - q_5)
    el.input_map = Mat::Zero(5, 2);
    el.input_map(0, 0) = 1.0;
    el.input_map(0, 1) = -double(u_d);
    el.input_map(1, 1) = double(u_d);
    el.input_map(4, 1) = double(u_d);
    el.input_names = {"V_i", "V_d_on"};
    return el;
}

}  // namespace

CircuitDescription hf_boost(const BoostParams& p) {
    p.validate();
    CircuitDescription c;
    c.name = "hf-boost";
    c.coords = {{"q_1", "q_2", "q_3", "q_4", "q_5"},
                {"i", "i_Ls", "i_Lc", "i_cs", "i_cd"}};
    c.bit_names = {"u_m", "u_d"};
    c.parameters = {{"V_i", p.v_i},
                    {"L", p.inductor.l},
                    {"R_L", p.inductor.r_l},
                    {"C_L", p.inductor.c_l},
                    {"R_s_on", p.mosfet.r_s_on},
                    {"R_s_off", p.mosfet.r_s_off},
                    {"L_s", p.mosfet.l_s},
                    {"C_s", p.mosfet.c_s},
                    {"R_d_on", p.diode.r_d_on},
                    {"R_d_off", p.diode.r_d_off},
                    {"C_d", p.diode.c_d},
                    {"V_d_on", p.diode.v_d_on},
                    {"C", p.cap.c},
                    {"R_c", p.cap.r_c},
                    {"L_c", p.cap.l_c},
                    {"R_o", p.r_o},
                    {"d", p.duty},
                    {"f_sw", p.f_sw}};
    c.notes = {"C_d defaulted to 15 nF (quoted 15 mF is not a junction-capacitance scale); "
               "override via C_d",
               "C_L accepted but unused: no worked high-fidelity derivation includes it"};
    c.outputs = {{"v_out", {{"i", p.r_o}, {"i_Ls", -p.r_o}, {"i_Lc", -p.r_o}}}};

    // Complementary switching: only (1,0) and (0,1) are reachable.
    c.modes.emplace(ModeVector({"u_m", "u_d"}, {1, 0}), boost_mode_components(p, 1, 0));
    c.modes.emplace(ModeVector({"u_m", "u_d"}, {0, 1}), boost_mode_components(p, 0, 1));
    return c;
}

CircuitDescription boost_dc_companion(const BoostParams& p) {
    p.validate();
    CircuitDescription c;
    c.name = "hf-boost-dc-companion";
    c.coords = {{"q_1", "q_2", "q_3"}, {"i", "i_sw", "i_c"}};
    c.bit_names = {"u_m", "u_d"};
    c.parameters = {{"V_i", p.v_i}, {"R_o", p.r_o}, {"d", p.duty}};
    c.outputs = {{"v_out", {{"i", p.r_o}, {"i_sw", -p.r_o}, {"i_c", -p.r_o}}}};

    for (const auto& [u_m, u_d] : {std::pair{1, 0}, std::pair{0, 1}}) {
        const double r_s = u_m ? p.mosfet.r_s_on : p.mosfet.r_s_off;
        const double r_d = u_d ? p.diode.r_d_on : p.diode.r_d_off;
        ELComponents el;
        el.inductance = Vec{{p.inductor.l, 0.0, 0.0}}.asDiagonal();
        el.resistance = Mat::Zero(3, 3);
        add_branch_resistor(el.resistance, p.inductor.r_l, {{0, 1.0}});
        add_branch_resistor(el.resistance, r_s, {{1, 1.0}});
        add_branch_resistor(el.resistance, p.cap.r_c, {{2, 1.0}});
        add_branch_resistor(el.resistance, r_d, {{0, 1.0}, {1, -1.0}});
        add_branch_resistor(el.resistance, p.r_o, {{0, 1.0}, {1, -1.0}, {2, -1.0}});
        el.charge_map = Mat{{0.0, 0.0, 1.0}};
        el.elastance = Vec::Constant(1, 1.0 / p.cap.c);
        el.capacitor_names = {"v_c"};
        el.input_map = Mat::Zero(3, 2);
        el.input_map(0, 0) = 1.0;
        el.input_map(0, 1) = -double(u_d);
        el.input_map(1, 1) = double(u_d);
        el.input_names = {"V_i", "V_d_on"};
        c.modes.emplace(ModeVector({"u_m", "u_d"}, {u_m, u_d}), std::move(el));
    }
    return c;
}

}  // namespace elsim
