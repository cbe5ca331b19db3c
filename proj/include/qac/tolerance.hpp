#pragma once

namespace qac {

// Multiplier applied to every tolerance in the library. Read once from the
// QAC_TOLERANCE_SCALE environment variable (default 1). Debugging aid only.
double tolerance_scale();

inline double tol(double base) { return base * tolerance_scale(); }

namespace tolerances {
inline constexpr double kState = 1e-10;       // hermiticity, trace, eigenvalue floor
inline constexpr double kSqrt = 1e-9;         // (sqrt m)^2 == m, relative to max-norm
inline constexpr double kIdentity = 1e-10;    // MUB identities, completeness, unitarity
inline constexpr double kMeasure = 1e-10;     // equality of measure routes
inline constexpr double kExact = 1e-12;       // closed-form arithmetic, trace preservation
inline constexpr double kSigmas = 5.0;        // Monte-Carlo agreement in standard errors
}  // namespace tolerances

}  // namespace qac
