#include "wspec/roots.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "wspec/errors.hpp"

namespace wspec {

ScanResult scan_brackets(const ScalarFunction& f, double e_min, double e_max, double step, unsigned threads)
{
    if (!(e_min < e_max)) {
        throw InvalidArgument("scan window requires e_min < e_max");
    }
    if (!(step > 0.0)) {
        throw InvalidArgument("scan step must be positive");
    }

    const auto intervals = static_cast<std::size_t>(std::ceil((e_max - e_min) / step - 1e-9));
    std::vector<double> xs(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        xs[i] = std::min(e_min + static_cast<double>(i) * step, e_max);
    }
    xs.back() = e_max;

    std::vector<std::optional<double>> fs(xs.size());
    std::vector<std::string> errors(xs.size());
    const auto work = [&](std::size_t i) {
        try {
            fs[i] = f(xs[i]);
        } catch (const Error& e) {
            errors[i] = e.what();
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(xs.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            work(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < xs.size(); i = next++) {
                    work(i);
                }
            });
        }
    }

    ScanResult out;
    out.evaluations = xs.size();
    std::optional<std::size_t> previous;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!fs[i] || !std::isfinite(*fs[i])) {
            out.skipped.push_back({xs[i], fs[i] ? "non-finite value" : errors[i]});
            continue;
        }
        if (*fs[i] == 0.0) {
            continue;
        }
        if (previous && std::signbit(*fs[*previous]) != std::signbit(*fs[i])) {
            out.brackets.push_back({xs[*previous], xs[i], *fs[*previous], *fs[i]});
        }
        previous = i;
    }
    if (2 * out.skipped.size() > xs.size()) {
        throw ScanUnreliableError("scan unreliable: " + std::to_string(out.skipped.size()) + " of " +
                                  std::to_string(xs.size()) + " evaluations failed");
    }
    return out;
}

RootEstimate refine_root(const ScalarFunction& f, const Bracket& bracket, double tol, int max_evaluations)
{
    if (!(bracket.lo < bracket.hi) || !std::isfinite(bracket.f_lo) || !std::isfinite(bracket.f_hi) ||
        std::signbit(bracket.f_lo) == std::signbit(bracket.f_hi) || bracket.f_lo == 0.0 || bracket.f_hi == 0.0) {
        throw InvalidArgument("refine_root needs a finite bracket with a strict sign change");
    }

    RootEstimate out;
    // a, b bracket the root; b is the best estimate, c the previous iterate.
    double a = bracket.lo, fa = bracket.f_lo;
    double b = bracket.hi, fb = bracket.f_hi;
    double c = a, fc = fa;
    double d = b - a, e = d;
    bool bisect_only = false;

    const auto finish = [&](double x, double fx) {
        out.x = std::clamp(x, bracket.lo, bracket.hi);
        out.f = fx;
        out.bracket_width = std::abs(b - c);
        out.used_bisection_fallback = bisect_only;
        return out;
    };

    while (out.evaluations < max_evaluations) {
        if (std::signbit(fb) == std::signbit(fc)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) {
            return finish(b, fb);
        }

        if (!bisect_only && std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            }
            p = std::abs(p);
            const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
            const double min2 = std::abs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        double trial = std::abs(d) > tol1 ? b + d : b + std::copysign(tol1, xm);

        std::optional<double> ft;
        for (int attempt = 0; attempt < 3 && !ft; ++attempt) {
            ++out.evaluations;
            try {
                const double v = f(trial);
                if (std::isfinite(v)) {
                    ft = v;
                }
            } catch (const Error&) {
            }
            if (!ft) {
                // Fall back to bisection; nudge off the failing point on retries.
                bisect_only = true;
                const double weight = attempt == 0 ? 0.5 : (attempt == 1 ? 0.375 : 0.625);
                trial = b + weight * (c - b);
                if (out.evaluations >= max_evaluations) {
                    break;
                }
            }
        }
        if (!ft) {
            throw RefineError("evaluation failed repeatedly inside bracket [" + std::to_string(std::min(b, c)) + ", " +
                              std::to_string(std::max(b, c)) + "]");
        }
        b = trial;
        fb = *ft;
        if (bisect_only) {
            d = e = b - a;
        }
    }
    if (std::abs(c - b) <= tol) {
        return finish(b, fb);
    }
    throw RefineError("root refinement exceeded " + std::to_string(max_evaluations) + " evaluations");
}

} // namespace wspec
