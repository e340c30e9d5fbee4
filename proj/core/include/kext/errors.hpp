#pragma once

#include <stdexcept>
#include <string>

namespace kext {

enum class errc {
    degenerate_gradient,
    collar_violation,
    non_positive_epsilon,
    level_out_of_range,
    zero_polynomial,
    line_in_variety,
    continuation_ambiguous,
    transversality_violation,
    coincident_nodes,
    off_variety_node,
    radius_too_small,
    quadrature_budget_exceeded,
    insufficient_tail,
    outside_covered_shell,
    step_underflow,
    config_error,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace kext
