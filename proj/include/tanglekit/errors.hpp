#pragma once

#include <stdexcept>
#include <string>

namespace tanglekit {

enum class errc {
    degree_exceeded,
    bad_flag,
    out_of_range,
    duplicate_arc,
    not_a_partition,
    too_large,
    odd_ground_set,
    duplicate_entry,
    not_a_corner,
    not_deflatable,
    not_two_regular_partition,
    not_braid,
    inconsistent,
    inexact_division,
    leading_zero,
    unequal_degrees,
    no_dominant_rational_root,
    non_simple_root,
    singular_system,
    insufficient_terms,
    odd_length,
    io_error,
    usage,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::degree_exceeded: return "DegreeExceeded";
        case errc::bad_flag: return "BadFlag";
        case errc::out_of_range: return "OutOfRange";
        case errc::duplicate_arc: return "DuplicateArc";
        case errc::not_a_partition: return "NotAPartition";
        case errc::too_large: return "TooLarge";
        case errc::odd_ground_set: return "OddGroundSet";
        case errc::duplicate_entry: return "DuplicateEntry";
        case errc::not_a_corner: return "NotACorner";
        case errc::not_deflatable: return "NotDeflatable";
        case errc::not_two_regular_partition: return "NotTwoRegularPartition";
        case errc::not_braid: return "NotBraid";
        case errc::inconsistent: return "Inconsistent";
        case errc::inexact_division: return "InexactDivision";
        case errc::leading_zero: return "LeadingZero";
        case errc::unequal_degrees: return "UnequalDegrees";
        case errc::no_dominant_rational_root: return "NoDominantRationalRoot";
        case errc::non_simple_root: return "NonSimpleRoot";
        case errc::singular_system: return "SingularSystem";
        case errc::insufficient_terms: return "InsufficientTerms";
        case errc::odd_length: return "OddLength";
        case errc::io_error: return "IoError";
        case errc::usage: return "Usage";
    }
    return "Unknown";
}

/// Domain error carrying a typed code, thrown by all library operations.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace tanglekit
