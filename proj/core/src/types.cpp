#include "elsim/types.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace elsim {

ModeVector::ModeVector(std::vector<std::string> names, std::vector<int> bits)
    : names_(std::move(names)), bits_(std::move(bits)) {
    if (names_.size() != bits_.size()) {
        throw DimensionError("ModeVector: name/bit count mismatch");
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] != 0 && bits_[i] != 1) {
            throw ParamError("ModeVector: bit '" + names_[i] + "' must be 0 or 1");
        }
    }
}

ModeVector ModeVector::parse(const std::string& text) {
    std::vector<std::string> names;
    std::vector<int> bits;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("ModeVector: expected name=value, got '" + token + "'");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string name = trim(token.substr(0, eq));
        const std::string value = trim(token.substr(eq + 1));
        if (name.empty() || (value != "0" && value != "1")) {
            throw ConfigError("ModeVector: bad token '" + token + "'");
        }
        names.push_back(name);
        bits.push_back(value == "1" ? 1 : 0);
    }
    return ModeVector(std::move(names), std::move(bits));
}

int ModeVector::bit(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw ModeError("ModeVector: no bit named '" + name + "'");
    }
    return bits_[static_cast<std::size_t>(it - names_.begin())];
}

bool ModeVector::has_bit(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

ModeVector ModeVector::with_bit(const std::string& name, int value) const {
    ModeVector out = *this;
    const auto it = std::find(out.names_.begin(), out.names_.end(), name);
    if (it == out.names_.end()) {
        throw ModeError("ModeVector: no bit named '" + name + "'");
    }
    if (value != 0 && value != 1) {
        throw ParamError("ModeVector: bit '" + name + "' must be 0 or 1");
    }
    out.bits_[static_cast<std::size_t>(it - out.names_.begin())] = value;
    return out;
}

std::string ModeVector::to_string() const {
    if (names_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) out += ',';
        out += names_[i];
        out += '=';
        out += bits_[i] ? '1' : '0';
    }
    return out;
}

std::strong_ordering operator<=>(const ModeVector& a, const ModeVector& b) {
    if (auto c = a.names_ <=> b.names_; c != 0) return c;
    return a.bits_ <=> b.bits_;
}

int CoordinateSet::index_of_charge(const std::string& name) const {
    const auto it = std::find(charge_names.begin(), charge_names.end(), name);
    if (it == charge_names.end()) {
        throw DimensionError("CoordinateSet: unknown coordinate '" + name + "'");
    }
    return static_cast<int>(it - charge_names.begin());
}

void CoordinateSet::validate() const {
    if (charge_names.size() != current_names.size()) {
        throw DimensionError("CoordinateSet: charge/current name count mismatch");
    }
    std::set<std::string> seen(charge_names.begin(), charge_names.end());
    std::set<std::string> seen_i(current_names.begin(), current_names.end());
    if (seen.size() != charge_names.size() || seen_i.size() != current_names.size()) {
        throw ParamError("CoordinateSet: coordinate names must be unique");
    }
}

}  // namespace elsim
