#pragma once

// =============================================================================
// elsim - core domain types: switch modes, generalized coordinates, errors
// =============================================================================

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace elsim {

// -----------------------------------------------------------------------------
// Error hierarchy. The CLI maps these onto disjoint exit codes.
// -----------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vector/matrix shape disagreement between an operation and its arguments.
struct DimensionError : Error {
    using Error::Error;
};

/// Invalid or out-of-range circuit/configuration parameter.
struct ParamError : Error {
    using Error::Error;
};

/// Request for a switch mode the circuit does not declare reachable.
struct ModeError : Error {
    using Error::Error;
};

/// Reduction to state-space failed; carries the offending coordinate.
struct ReductionError : Error {
    std::string coordinate;
    ReductionError(const std::string& msg, std::string coord)
        : Error(msg), coordinate(std::move(coord)) {}
};

/// Simulation-time failure (bad step, lost event bracket, descriptor mode).
struct SimError : Error {
    using Error::Error;
};

/// Malformed run-configuration or parameter file.
struct ConfigError : Error {
    using Error::Error;
};

// -----------------------------------------------------------------------------
// ModeVector: one discrete switch configuration, e.g. [u_m=1, u_d=0].
// -----------------------------------------------------------------------------

class ModeVector {
public:
    ModeVector() = default;

    /// Bit names and values share one fixed order; every value must be 0 or 1.
    ModeVector(std::vector<std::string> names, std::vector<int> bits);

    /// Parses "u_m=1,u_d=0". Whitespace around tokens is ignored.
    static ModeVector parse(const std::string& text);

    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::vector<int>& bits() const { return bits_; }
    [[nodiscard]] std::size_t size() const { return bits_.size(); }

    [[nodiscard]] int bit(const std::string& name) const;
    [[nodiscard]] bool has_bit(const std::string& name) const;

    /// Copy with one bit replaced.
    [[nodiscard]] ModeVector with_bit(const std::string& name, int value) const;

    /// "u_m=1,u_d=0"; "-" for the empty (switchless) mode.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ModeVector& a, const ModeVector& b) = default;
    friend std::strong_ordering operator<=>(const ModeVector& a, const ModeVector& b);

private:
    std::vector<std::string> names_;
    std::vector<int> bits_;
};

// -----------------------------------------------------------------------------
// CoordinateSet: generalized charge coordinates of the loop formulation.
// Each charge (coulomb) is paired with its current (ampere), the derivative.
// -----------------------------------------------------------------------------

struct CoordinateSet {
    std::vector<std::string> charge_names;
    std::vector<std::string> current_names;

    [[nodiscard]] std::size_t size() const { return charge_names.size(); }
    [[nodiscard]] int index_of_charge(const std::string& name) const;

    /// Unique, pairwise-consistent names.
    void validate() const;
};

}  // namespace elsim
