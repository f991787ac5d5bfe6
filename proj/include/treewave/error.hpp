#pragma once

#include <stdexcept>
#include <string>

namespace treewave {

/// Machine-readable failure categories. Every error surfaced by the library
/// (and relayed by the CLI) carries exactly one of these codes.
enum class ErrorCode {
    bad_params,           // invalid q, R, k, ... at an API boundary
    invalid_index,        // vertex index outside the ball
    sphere_out_of_range,  // requested sphere pokes outside the ball
    domain_too_small,     // function domain cannot absorb the operator shrink
    insufficient_radius,  // ambient ball too small for a solver's construction
    zero_top_coefficient, // mu-combination with vanishing top coefficient
    non_divisible,        // exact polynomial division left a remainder
    both_zero,            // gcd/bezout of two zero polynomials
    mismatched_functions, // operands live on different balls / domains
    incompatible_snapshots, // snapshot triple fails its compatibility condition
    condition_violated,   // Pompeiu polynomials share a factor
    incompatible_targets, // two-circle targets violate the necessary condition
    irrational_residue,   // formal sqrt component failed to cancel
    parse_error,          // malformed rational / JSON payload
    io_error,             // file not readable/writable
    unknown_suite,        // verify subcommand got an unknown suite name
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::bad_params: return "bad-params";
    case ErrorCode::invalid_index: return "invalid-index";
    case ErrorCode::sphere_out_of_range: return "sphere-out-of-range";
    case ErrorCode::domain_too_small: return "domain-too-small";
    case ErrorCode::insufficient_radius: return "insufficient-radius";
    case ErrorCode::zero_top_coefficient: return "zero-top-coefficient";
    case ErrorCode::non_divisible: return "non-divisible";
    case ErrorCode::both_zero: return "both-zero";
    case ErrorCode::mismatched_functions: return "mismatched-functions";
    case ErrorCode::incompatible_snapshots: return "incompatible-snapshots";
    case ErrorCode::condition_violated: return "condition-violated";
    case ErrorCode::incompatible_targets: return "incompatible-targets";
    case ErrorCode::irrational_residue: return "irrational-residue";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::unknown_suite: return "unknown-suite";
    }
    return "unknown";
}

/// Distinct nonzero process exit status per code (CLI contract).
inline int error_code_exit_status(ErrorCode c) {
    return 10 + static_cast<int>(c);
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, ErrorCode code, const std::string& message) {
    if (!ok) fail(code, message);
}

} // namespace treewave
