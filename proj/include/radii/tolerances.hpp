#pragma once

namespace radii {

// Two tiers: solver noise (feas) vs geometric decisions (cert/eq).
inline constexpr double eps_feas = 1e-9;   // LP feasibility, duality gaps
inline constexpr double eps_cert = 1e-7;   // boundary-touching tests
inline constexpr double eps_eq = 1e-6;     // equality-case detection
inline constexpr double eps_pos = 1e-12;   // strict positivity of weights

}  // namespace radii
