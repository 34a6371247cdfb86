#pragma once

#include <stdexcept>
#include <string>

namespace lf {

enum class ErrorCode {
    invalid_argument,
    mismatch,
    non_hermitian,
    no_convergence,
    parse,
    io,
    out_of_range,
    ill_conditioned,
    solution_family,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries a code and, where it applies,
// the name of the offending field.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string field = {})
        : std::runtime_error(message), code_(code), field_(std::move(field)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& field() const noexcept { return field_; }

private:
    ErrorCode code_;
    std::string field_;
};

}  // namespace lf
