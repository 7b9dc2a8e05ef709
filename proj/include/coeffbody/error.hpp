#pragma once

#include <stdexcept>
#include <string>

namespace coeffbody {

/// Precondition violation raised by a library operation. `name()` is a stable
/// identifier (e.g. "NotLocallyInvertible") that the CLI reports verbatim.
class DomainError : public std::invalid_argument {
public:
    DomainError(std::string name, const std::string& what)
        : std::invalid_argument(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

namespace errc {
inline constexpr const char* non_finite = "NonFiniteCoefficient";
inline constexpr const char* nonzero_constant = "NonZeroConstantTerm";
inline constexpr const char* not_invertible = "NotLocallyInvertible";
inline constexpr const char* bad_index = "InvalidIndex";
inline constexpr const char* short_input = "InsufficientLength";
inline constexpr const char* bad_parameter = "InvalidParameter";
inline constexpr const char* outside_disk = "OutsideClosedDisk";
inline constexpr const char* unknown_preset = "UnknownPreset";
inline constexpr const char* malformed_complex = "MalformedComplex";
inline constexpr const char* not_identity_phi = "NotIdentityPhi";
inline constexpr const char* no_bound = "NoMatchingBound";
inline constexpr const char* bad_witness = "InapplicableWitness";
inline constexpr const char* excessive_skips = "ExcessiveSkips";
}  // namespace errc

}  // namespace coeffbody
