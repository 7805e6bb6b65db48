#include "elsim/reduction.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "elsim/circuits.hpp"

namespace elsim {

SecondOrderForm assemble(const CircuitDescription& c, const ModeVector& u) {
    const ELComponents& el = c.mode(u);
    SecondOrderForm f;
    f.mode = u;
    f.inductance = el.inductance;
    f.resistance = el.resistance;
    f.stiffness = el.stiffness();
    f.input_map = el.input_map;
    f.coordinate_names = c.coords.charge_names;
    f.input_names = el.input_names;
    return f;
}

Partition partition(const SecondOrderForm& f) {
    Partition p;
    for (int i = 0; i < f.inductance.rows(); ++i) {
        if (f.inductance.row(i).cwiseAbs().maxCoeff() > 0.0) {
            p.inertial.push_back(i);
        } else {
            p.noninertial.push_back(i);
        }
    }
    return p;
}

int ReducedModel::state_index(const std::string& label) const {
    const auto it = std::find(state_labels.begin(), state_labels.end(), label);
    if (it == state_labels.end()) {
        throw DimensionError("ReducedModel: no state labelled '" + label + "'");
    }
    return static_cast<int>(it - state_labels.begin());
}

namespace {

Mat select(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    Mat out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(rows[i], cols[j]);
        }
    }
    return out;
}

Mat select_rows(const Mat& m, const std::vector<int>& rows) {
    Mat out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.row(static_cast<Eigen::Index>(i)) = m.row(rows[i]);
    }
    return out;
}

Mat select_cols(const Mat& m, const std::vector<int>& cols) {
    Mat out(m.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        out.col(static_cast<Eigen::Index>(j)) = m.col(cols[j]);
    }
    return out;
}

}  // namespace

ReducedModel reduce(const SecondOrderForm& f, const CircuitDescription& c) {
    const ELComponents& el = c.mode(f.mode);
    const int n = static_cast<int>(f.inductance.rows());
    const int m = static_cast<int>(el.charge_map.rows());
    const int p = static_cast<int>(f.input_map.cols());
    const Partition part = partition(f);

    // Split the non-inertial coordinates: a coordinate with no resistive row
    // and no capacitor attachment has a vacuous EL row in this mode. It keeps
    // its current as a state with a zero descriptor row; anything driving it
    // would make the row inconsistent.
    std::vector<int> degenerate;
    std::vector<int> eliminated;
    for (int i : part.noninertial) {
        const bool r_row_zero = f.resistance.row(i).cwiseAbs().maxCoeff() == 0.0;
        const bool p_col_zero =
            el.charge_map.cols() == 0 || el.charge_map.col(i).cwiseAbs().maxCoeff() == 0.0;
        if (r_row_zero && p_col_zero) {
            if (f.input_map.row(i).cwiseAbs().maxCoeff() != 0.0) {
                throw ReductionError("coordinate '" + f.coordinate_names[i] +
                                         "' has forcing but no dynamics in mode " +
                                         f.mode.to_string(),
                                     f.coordinate_names[i]);
            }
            degenerate.push_back(i);
        } else {
            eliminated.push_back(i);
        }
    }

    // Current states: inertial coordinates plus degenerate ones, coordinate order.
    std::vector<int> current_coords;
    current_coords.reserve(part.inertial.size() + degenerate.size());
    for (int i = 0; i < n; ++i) {
        if (std::find(eliminated.begin(), eliminated.end(), i) == eliminated.end()) {
            current_coords.push_back(i);
        }
    }
    const int nc = static_cast<int>(current_coords.size());
    const int nx = nc + m;

    const std::vector<int>& I = part.inertial;
    const std::vector<int>& N = eliminated;

    const Mat MII = select(f.inductance, I, I);
    const Mat RNN = select(f.resistance, N, N);
    const Mat RNI = select(f.resistance, N, I);
    const Mat RIN = select(f.resistance, I, N);
    const Mat RII = select(f.resistance, I, I);
    const Mat PI = select_cols(el.charge_map, I);
    const Mat PN = select_cols(el.charge_map, N);
    const Mat BI = select_rows(f.input_map, I);
    const Mat BN = select_rows(f.input_map, N);

    // Resistive elimination of the N rows:  qd_N = Wx qd_I + Wv v + Ww w.
    Mat Wx(N.size(), I.size()), Wv(N.size(), m), Ww(N.size(), p);
    if (!N.empty()) {
        CheckedLu lu(RNN);
        if (lu.singular()) {
            const int offender = N[static_cast<std::size_t>(lu.deficient_row())];
            throw ReductionError("resistive block is singular at coordinate '" +
                                     f.coordinate_names[offender] + "' in mode " +
                                     f.mode.to_string() +
                                     "'; the coupling cannot be expressed in descriptor form",
                                 f.coordinate_names[offender]);
        }
        Wx = lu.solve(-RNI);
        Wv = lu.solve(-PN.transpose());
        Ww = lu.solve(BN);
    }

    // Inertial rows after substitution.
    Mat AII, AIv, BIw, MIIinvTmp;
    if (!I.empty()) {
        CheckedLu lum(MII);
        if (lum.singular()) {
            const int offender = I[static_cast<std::size_t>(lum.deficient_row())];
            throw ReductionError("inductance block is singular at coordinate '" +
                                     f.coordinate_names[offender] + "'",
                                 f.coordinate_names[offender]);
        }
        AII = lum.solve(-RII - RIN * Wx);
        AIv = lum.solve(-PI.transpose() - RIN * Wv);
        BIw = lum.solve(BI - RIN * Ww);
    }

    // Voltage rows: vd = diag(1/C) P qd with qd_N substituted.
    const Mat AvI = el.elastance.asDiagonal() * (PI + PN * Wx);
    const Mat Avv = el.elastance.asDiagonal() * (PN * Wv);
    const Mat Bvw = el.elastance.asDiagonal() * (PN * Ww);

    ReducedModel out;
    out.kind = degenerate.empty() ? ModelKind::Regular : ModelKind::Descriptor;
    out.A = Mat::Zero(nx, nx);
    out.B = Mat::Zero(nx, p);
    out.e_diag = Vec::Ones(nx);
    out.current_states = nc;

    std::vector<int> pos_of_coord(n, -1);
    for (int k = 0; k < nc; ++k) pos_of_coord[current_coords[k]] = k;

    for (std::size_t a = 0; a < I.size(); ++a) {
        const int r = pos_of_coord[I[a]];
        for (std::size_t bcol = 0; bcol < I.size(); ++bcol) {
            out.A(r, pos_of_coord[I[bcol]]) = AII(static_cast<Eigen::Index>(a),
                                                  static_cast<Eigen::Index>(bcol));
        }
        out.A.block(r, nc, 1, m) = AIv.row(static_cast<Eigen::Index>(a));
        out.B.row(r) = BIw.row(static_cast<Eigen::Index>(a));
    }
    for (int d : degenerate) {
        out.e_diag[pos_of_coord[d]] = 0.0;  // zero row stays zero in A and B
    }
    for (int j = 0; j < m; ++j) {
        for (std::size_t a = 0; a < I.size(); ++a) {
            out.A(nc + j, pos_of_coord[I[a]]) = AvI(j, static_cast<Eigen::Index>(a));
        }
        out.A.block(nc + j, nc, 1, m) = Avv.row(j);
        out.B.row(nc + j) = Bvw.row(j);
    }

    for (int idx : current_coords) {
        out.state_labels.push_back(c.coords.current_names[idx]);
    }
    for (const auto& nm : el.capacitor_names) out.state_labels.push_back(nm);
    out.input_labels = el.input_names;

    // Storage: currents carry M_II energy, voltages carry their capacitances.
    out.storage = Mat::Zero(nx, nx);
    for (std::size_t a = 0; a < I.size(); ++a) {
        for (std::size_t bcol = 0; bcol < I.size(); ++bcol) {
            out.storage(pos_of_coord[I[a]], pos_of_coord[I[bcol]]) =
                MII(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(bcol));
        }
    }
    for (int j = 0; j < m; ++j) out.storage(nc + j, nc + j) = 1.0 / el.elastance[j];

    // Coordinate-current reconstruction q_dot(x, w).
    out.qdot_from_state = Mat::Zero(n, nx);
    out.qdot_from_input = Mat::Zero(n, p);
    for (int k = 0; k < nc; ++k) out.qdot_from_state(current_coords[k], k) = 1.0;
    for (std::size_t a = 0; a < N.size(); ++a) {
        const int i = N[a];
        for (std::size_t bcol = 0; bcol < I.size(); ++bcol) {
            out.qdot_from_state(i, pos_of_coord[I[bcol]]) =
                Wx(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(bcol));
        }
        out.qdot_from_state.block(i, nc, 1, m) = Wv.row(static_cast<Eigen::Index>(a));
        out.qdot_from_input.row(i) = Ww.row(static_cast<Eigen::Index>(a));
    }
    out.coord_resistance = f.resistance;
    out.coord_input_map = f.input_map;
    return out;
}

const ReducedModel& SwitchedModel::mode(const ModeVector& u) const {
    const auto it = modes.find(u);
    if (it == modes.end()) {
        throw ModeError("switched model '" + circuit_name + "': mode " + u.to_string() +
                        " is not reachable");
    }
    return it->second;
}

SwitchedModel build_switched_model(const CircuitDescription& c) {
    c.validate();
    SwitchedModel sm;
    sm.circuit_name = c.name;
    sm.bit_names = c.bit_names;
    sm.outputs = c.outputs;
    sm.parameters = c.parameters;
    for (const auto& [u, el] : c.modes) {
        ReducedModel rm = reduce(assemble(c, u), c);
        if (sm.modes.empty()) {
            sm.state_labels = rm.state_labels;
            sm.input_labels = rm.input_labels;
        } else {
            if (rm.state_labels != sm.state_labels) {
                throw ReductionError("mode " + u.to_string() +
                                         " produces inconsistent state labels",
                                     "");
            }
            if (rm.input_labels != sm.input_labels) {
                throw ReductionError("mode " + u.to_string() +
                                         " produces inconsistent input labels",
                                     "");
            }
        }
        sm.modes.emplace(u, std::move(rm));
    }
    return sm;
}

SwitchedModel erroneous_reference_model() {
    return erroneous_reference_model(IdealDiodeCircuitParams{});
}

SwitchedModel erroneous_reference_model(const IdealDiodeCircuitParams& p) {
    p.validate();
    SwitchedModel sm;
    sm.circuit_name = "ideal-diode-single-lagrangian";
    sm.bit_names = {"u_d"};
    sm.state_labels = {"i_L", "v_C"};
    sm.input_labels = {"V_i"};
    for (int u = 0; u <= 1; ++u) {
        ReducedModel rm;
        rm.kind = ModelKind::Regular;
        rm.A = Mat{{-p.r_s / p.l_s, -double(u) / p.l_s},
                   {double(u) / p.c, -1.0 / (p.r * p.c)}};
        rm.B = Mat{{double(u) / p.l_s}, {0.0}};
        rm.e_diag = Vec::Ones(2);
        rm.state_labels = sm.state_labels;
        rm.input_labels = sm.input_labels;
        rm.current_states = 1;
        rm.storage = Mat{{p.l_s, 0.0}, {0.0, p.c}};
        rm.qdot_from_state = Mat::Zero(2, 2);
        rm.qdot_from_input = Mat::Zero(2, 1);
        rm.coord_resistance = Mat::Zero(2, 2);
        rm.coord_input_map = Mat::Zero(2, 1);
        sm.modes.emplace(ModeVector({"u_d"}, {u}), std::move(rm));
    }
    return sm;
}

std::string dump_matrices(const SwitchedModel& m) {
    std::ostringstream out;
    auto put = [&out](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf;
    };
    auto put_matrix = [&](const Mat& a) {
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            for (Eigen::Index cidx = 0; cidx < a.cols(); ++cidx) {
                if (cidx) out << ' ';
                put(a(r, cidx));
            }
            out << '\n';
        }
    };
    out << "circuit " << m.circuit_name << '\n';
    for (const auto& [u, rm] : m.modes) {
        out << "mode " << u.to_string() << '\n';
        out << "states";
        for (const auto& s : rm.state_labels) out << ' ' << s;
        out << "\ninputs";
        for (const auto& s : rm.input_labels) out << ' ' << s;
        out << "\nkind " << (rm.kind == ModelKind::Regular ? "regular" : "descriptor") << '\n';
        if (rm.kind == ModelKind::Descriptor) {
            out << "E";
            for (Eigen::Index i = 0; i < rm.e_diag.size(); ++i) {
                out << ' ';
                put(rm.e_diag[i]);
            }
            out << '\n';
        }
        out << "A\n";
        put_matrix(rm.A);
        out << "B\n";
        put_matrix(rm.B);
    }
    return out.str();
}

}  // namespace elsim
