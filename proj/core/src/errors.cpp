#include "kext/errors.hpp"

namespace kext {

const char* errc_name(errc code) {
    switch (code) {
        case errc::degenerate_gradient: return "DegenerateGradient";
        case errc::collar_violation: return "CollarViolation";
        case errc::non_positive_epsilon: return "NonPositiveEpsilon";
        case errc::level_out_of_range: return "LevelOutOfRange";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::line_in_variety: return "LineInVariety";
        case errc::continuation_ambiguous: return "ContinuationAmbiguous";
        case errc::transversality_violation: return "TransversalityViolation";
        case errc::coincident_nodes: return "CoincidentNodes";
        case errc::off_variety_node: return "OffVarietyNode";
        case errc::radius_too_small: return "RadiusTooSmall";
        case errc::quadrature_budget_exceeded: return "QuadratureBudgetExceeded";
        case errc::insufficient_tail: return "InsufficientTail";
        case errc::outside_covered_shell: return "OutsideCoveredShell";
        case errc::step_underflow: return "StepUnderflow";
        case errc::config_error: return "ConfigError";
        case errc::io_error: return "IoError";
    }
    return "UnknownError";
}

}  // namespace kext
