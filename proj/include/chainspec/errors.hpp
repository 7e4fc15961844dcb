#pragma once

#include <stdexcept>
#include <string>

namespace chainspec {

enum class errc {
    empty_input,
    malformed_token,
    not_connected,
    odd_block_count,
    invalid_range,
    size_limit,
    zero_polynomial,
    endpoint_is_root,
    non_real_roots,
    ambiguous_sign,
    no_convergence,
    undecidable,
    precondition_violated,
    cross_check_failed,
    persistence_failure,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "EmptyInput";
        case errc::malformed_token: return "MalformedToken";
        case errc::not_connected: return "NotConnected";
        case errc::odd_block_count: return "OddBlockCount";
        case errc::invalid_range: return "InvalidRange";
        case errc::size_limit: return "SizeLimit";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::endpoint_is_root: return "EndpointIsRoot";
        case errc::non_real_roots: return "NonRealRoots";
        case errc::ambiguous_sign: return "AmbiguousSign";
        case errc::no_convergence: return "NoConvergence";
        case errc::undecidable: return "Undecidable";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::cross_check_failed: return "CrossCheckFailed";
        case errc::persistence_failure: return "PersistenceFailure";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

} // namespace chainspec
