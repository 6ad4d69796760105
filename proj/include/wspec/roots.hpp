#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace wspec {

using ScalarFunction = std::function<double(double)>;

/// Interval with a strict sign change: lo < hi, f_lo and f_hi of opposite sign.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;

    double width() const noexcept { return hi - lo; }
};

/// Grid point whose evaluation threw and was skipped.
struct SkippedPoint {
    double x;
    std::string reason;
};

struct ScanResult {
    std::vector<Bracket> brackets;
    std::vector<SkippedPoint> skipped;
    std::size_t evaluations = 0;
};

/// Evaluates f on e_min, e_min + step, ..., e_max and returns one bracket per
/// sign change between consecutive successful, nonzero evaluations. Points
/// where f throws wspec::Error are skipped; ScanUnreliableError is raised when
/// more than half of them fail. `threads` > 1 evaluates the grid concurrently;
/// the result does not depend on it.
ScanResult scan_brackets(const ScalarFunction& f, double e_min, double e_max, double step, unsigned threads = 1);

struct RootEstimate {
    double x = 0.0;
    double f = 0.0;
    double bracket_width = 0.0;
    int evaluations = 0;
    bool used_bisection_fallback = false;
};

/// Brent's method (bisection safeguarded by secant / inverse quadratic steps).
/// The result always lies inside `bracket`. Evaluation failures switch to
/// plain bisection on the surviving sub-bracket.
RootEstimate refine_root(const ScalarFunction& f, const Bracket& bracket, double tol, int max_evaluations = 200);

} // namespace wspec
