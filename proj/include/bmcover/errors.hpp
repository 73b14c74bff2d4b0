#pragma once

#include <stdexcept>
#include <string>

namespace bmcover {

enum class Errc {
    parse_error,
    macro_arity,
    strand_range,
    strand_mismatch,
    bad_index,
    bad_decomposition,
    rank_mismatch,
    not_invertible,
    non_exact_division,
    zero_polynomial,
    non_reciprocal,
    empty_word,
};

const char* errc_name(Errc c);

/// Thrown by every operation whose precondition is violated. `code` tells the
/// CLI whether the failure is a usage error (parse_error, macro_arity) or a
/// domain precondition.
class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace bmcover
