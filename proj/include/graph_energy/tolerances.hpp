#pragma once

namespace graph_energy {

/// Every numeric threshold used to classify floating-point results.
struct Tolerances {
    /// |lambda| above this counts as nonzero; lambda above this counts as positive.
    double zero_eigenvalue = 1e-7;
    /// Slack for non-strict inequalities and equality bands (E = rank, E = 2 chi, ...).
    double inequality_slack = 1e-6;
    /// Residual bound factor: ||A v - lambda v|| <= residual * max(1, ||A||_2).
    double residual = 1e-8;
    /// Slack for strict inequalities quoted with an explicit margin; applied against the claim.
    double strict_slack = 1e-9;
    /// Interlacing comparison slack.
    double interlacing = 1e-7;
};

inline constexpr Tolerances kTolerances{};

}  // namespace graph_energy
