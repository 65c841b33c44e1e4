#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace radii {

/// Bad caller input: dimension mismatches, invalid ranges, violated preconditions.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The solver stalled or lost numerical footing; distinct from an infeasible model.
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured size cap (Minkowski product, tuple enumeration) would be exceeded.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Target point is not in the convex hull; carries a separating direction a
/// with a.target > max_i a.points[i] by at least `margin`.
struct NotInHull : std::runtime_error {
    std::vector<double> separator;
    double margin;
    NotInHull(const std::string& msg, std::vector<double> sep, double m)
        : std::runtime_error(msg), separator(std::move(sep)), margin(m) {}
};

/// Requested a containment certificate where none is defined (radius 0).
struct NoCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A family claimed to be balanced failed the certified selection step.
struct BalanceViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace radii
