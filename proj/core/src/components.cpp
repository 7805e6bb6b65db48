#include "elsim/components.hpp"

namespace elsim {

Mat ELComponents::stiffness() const {
    return charge_map.transpose() * elastance.asDiagonal() * charge_map;
}

void ELComponents::validate() const {
    const Eigen::Index n = coords();
    if (inductance.cols() != n || resistance.rows() != n || resistance.cols() != n) {
        throw DimensionError("ELComponents: M and R must be n x n over the same coordinates");
    }
    if (charge_map.cols() != n) {
        throw DimensionError("ELComponents: charge map must have n columns");
    }
    if (elastance.size() != charge_map.rows()) {
        throw DimensionError("ELComponents: one elastance per charge-map row");
    }
    if (static_cast<Eigen::Index>(capacitor_names.size()) != charge_map.rows()) {
        throw DimensionError("ELComponents: one capacitor name per charge-map row");
    }
    if (input_map.rows() != n || static_cast<Eigen::Index>(input_names.size()) != input_map.cols()) {
        throw DimensionError("ELComponents: input map must be n x |inputs|");
    }
    if (!is_symmetric_psd(inductance)) {
        throw ParamError("ELComponents: inductance matrix must be symmetric PSD");
    }
    if (!is_symmetric_psd(resistance)) {
        throw ParamError("ELComponents: resistance matrix must be symmetric PSD");
    }
    for (Eigen::Index i = 0; i < elastance.size(); ++i) {
        if (!(elastance[i] > 0.0)) {
            throw ParamError("ELComponents: elastance entries must be strictly positive");
        }
    }
}

namespace {
void require_length(const Vec& v, Eigen::Index n, const char* what) {
    if (v.size() != n) {
        throw DimensionError(std::string("ELComponents: ") + what + " has wrong length");
    }
}
}  // namespace

double kinetic_energy(const ELComponents& c, const Vec& qdot) {
    require_length(qdot, c.coords(), "qdot");
    return 0.5 * qdot.dot(c.inductance * qdot);
}

double potential_energy(const ELComponents& c, const Vec& q, const Vec& w) {
    require_length(q, c.coords(), "q");
    require_length(w, c.inputs(), "w");
    const Vec p = c.charge_map * q;
    return 0.5 * p.dot(c.elastance.asDiagonal() * p) - q.dot(c.input_map * w);
}

double rayleigh_dissipation(const ELComponents& c, const Vec& qdot) {
    require_length(qdot, c.coords(), "qdot");
    return 0.5 * qdot.dot(c.resistance * qdot);
}

EnergyGradients energy_gradients(const ELComponents& c, const Vec& q, const Vec& qdot,
                                 const Vec& w) {
    require_length(q, c.coords(), "q");
    require_length(qdot, c.coords(), "qdot");
    require_length(w, c.inputs(), "w");
    EnergyGradients g;
    g.d_kinetic_d_current = c.inductance * qdot;
    g.d_potential_d_charge =
        c.charge_map.transpose() * (c.elastance.asDiagonal() * (c.charge_map * q)) -
        c.input_map * w;
    g.d_dissipation_d_current = c.resistance * qdot;
    return g;
}

const ELComponents& CircuitDescription::mode(const ModeVector& u) const {
    const auto it = modes.find(u);
    if (it == modes.end()) {
        throw ModeError("circuit '" + name + "': mode " + u.to_string() + " is not reachable");
    }
    return it->second;
}

void CircuitDescription::validate() const {
    coords.validate();
    if (modes.empty()) {
        throw ParamError("circuit '" + name + "': no modes declared");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(coords.size());
    const ELComponents* first = nullptr;
    for (const auto& [u, c] : modes) {
        if (u.names() != bit_names) {
            throw ModeError("circuit '" + name + "': mode " + u.to_string() +
                            " does not use the declared bit list");
        }
        c.validate();
        if (c.coords() != n) {
            throw DimensionError("circuit '" + name + "': mode " + u.to_string() +
                                 " has wrong coordinate count");
        }
        if (first == nullptr) {
            first = &c;
        } else {
            if (c.input_names != first->input_names) {
                throw DimensionError("circuit '" + name + "': input ordering differs across modes");
            }
            if (c.capacitor_names != first->capacitor_names) {
                throw DimensionError("circuit '" + name +
                                     "': capacitor ordering differs across modes");
            }
        }
    }
}

}  // namespace elsim
