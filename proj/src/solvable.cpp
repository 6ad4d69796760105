#include "wspec/solvable.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "wspec/errors.hpp"
#include "wspec/roots.hpp"
#include "wspec/summation.hpp"

namespace wspec::solvable {

namespace {

constexpr int kTermCap = 100000;
constexpr double kTailTolerance = 1e-17;
constexpr double kMorseCancellationLimit = 1e12;

// Three-term recurrence d(n) c_n = p(n) c_{n-1} + q(n) c_{n-2}, c_0 = 1.
struct ThreeTerm {
    std::function<double(int)> d, p, q;
};

struct SeriesPair {
    double plain = 0.0;     // sum c_n t^n
    double weighted = 0.0;  // sum (n + offset) c_n t^n
};

// Sums a Frobenius series and its offset-weighted companion at t.
SeriesPair sum_frobenius(const ThreeTerm& rec, double t, double offset)
{
    CompensatedSum plain, weighted;
    double c_prev2 = 0.0, c_prev = 0.0, c = 1.0;
    double power = 1.0;
    int small = 0;
    for (int n = 0; n < kTermCap; ++n) {
        if (n > 0) {
            c = (rec.p(n) * c_prev + rec.q(n) * c_prev2) / rec.d(n);
            power *= t;
        }
        const double term = c * power;
        plain += term;
        weighted += (n + offset) * term;
        const double scale = std::max(std::abs(plain.value()), std::abs(weighted.value()));
        small = std::abs(term) * std::max(1.0, n + offset) < kTailTolerance * scale ? small + 1 : 0;
        if (small >= 3) {
            return {plain.value(), weighted.value()};
        }
        c_prev2 = c_prev;
        c_prev = c;
    }
    throw NotConvergedError("solvable-model series did not converge", plain.value(), kTermCap);
}

ThreeTerm pt_recurrence(double first, double second, double k2)
{
    const double shift = 0.25 * (k2 + first * (first - 1.0) - second * (second - 1.0));
    return {
        [=](int n) { return n * (n - 0.5 + first); },
        [=](int n) { return (n - 1.0 + 0.5 * first) * (2.0 * n - 2.5 + first) - shift; },
        [=](int n) {
            const double s = n - 2.0 + 0.5 * first;
            return -(s * s - 0.25 * k2);
        },
    };
}

void check_y(double y)
{
    if (!(y > 0.0 && y < 1.0)) {
        throw InvalidArgument("evaluation point must lie in (0, 1)");
    }
}

std::vector<double> locate(const std::function<double(double)>& f, double lo, double hi, double step)
{
    const ScanResult scan = scan_brackets(f, lo, hi, step);
    std::vector<double> out;
    for (const Bracket& b : scan.brackets) {
        out.push_back(refine_root(f, b, 1e-13).x);
    }
    return out;
}

} // namespace

void PoschlTellerSpec::validate() const
{
    if (!(kappa > 1.0 && lambda > 1.0)) {
        throw InvalidArgument("Poschl-Teller needs kappa > 1 and lambda > 1");
    }
}

void ModifiedPTSpec::validate() const
{
    if (!(lambda > 1.0)) {
        throw InvalidArgument("modified Poschl-Teller needs lambda > 1");
    }
    if (parity_mu != 0.0 && parity_mu != 0.5) {
        throw InvalidArgument("parity_mu must be 0 or 1/2");
    }
}

double MorseSpec::y0() const
{
    return 2.0 * gamma_over_alpha * std::exp(alpha);
}

void MorseSpec::validate() const
{
    if (!(alpha > 0.0 && gamma_over_alpha > 0.0)) {
        throw InvalidArgument("Morse needs alpha > 0 and gamma/alpha > 0");
    }
}

double pt_wronskian(const PoschlTellerSpec& spec, double k2, double y)
{
    spec.validate();
    check_y(y);
    const double ka = 0.5 * spec.kappa;
    const double la = 0.5 * spec.lambda;
    // u_reg = y^ka A(y), u1 = (1-y)^la B(1-y).
    const SeriesPair a = sum_frobenius(pt_recurrence(spec.kappa, spec.lambda, k2), y, ka);
    const SeriesPair b = sum_frobenius(pt_recurrence(spec.lambda, spec.kappa, k2), 1.0 - y, la);
    const double u_reg = std::pow(y, ka) * a.plain;
    const double du_reg = std::pow(y, ka - 1.0) * a.weighted;
    const double u1 = std::pow(1.0 - y, la) * b.plain;
    const double du1 = -std::pow(1.0 - y, la - 1.0) * b.weighted;
    return u_reg * du1 - du_reg * u1;
}

std::vector<double> pt_exact_levels(const PoschlTellerSpec& spec, int count)
{
    spec.validate();
    if (count < 1) {
        throw InvalidArgument("count must be at least 1");
    }
    std::vector<double> out;
    for (int n = 0; n < count; ++n) {
        const double root = spec.kappa + spec.lambda + 2.0 * n;
        out.push_back(root * root);
    }
    return out;
}

double mpt_wronskian(const ModifiedPTSpec& spec, double kappa_over_alpha, double y)
{
    spec.validate();
    check_y(y);
    if (!(kappa_over_alpha > 0.0)) {
        throw InvalidArgument("kappa/alpha must be positive");
    }
    const double s = 0.5 * kappa_over_alpha;
    const double mu = spec.parity_mu;
    const double depth = 0.25 * spec.lambda * (spec.lambda - 1.0);
    const double k2 = kappa_over_alpha * kappa_over_alpha;

    const ThreeTerm regular{
        [=](int n) { return n * (n + kappa_over_alpha); },
        [=](int n) { return (n - 1.0 + s) * (n - 0.5 + s) - depth; },
        [](int) { return 0.0; },
    };
    const ThreeTerm boundary{
        [=](int n) { return (n + mu) * (n + mu - 0.5); },
        [=](int n) {
            const double q = n - 1.0 + mu;
            return 2.0 * q * q + 0.25 * k2 - depth;
        },
        [=](int n) { return -((n - 2.0 + mu) * (n - 1.5 + mu) - depth); },
    };
    const SeriesPair a = sum_frobenius(regular, y, s);
    const SeriesPair b = sum_frobenius(boundary, 1.0 - y, mu);
    const double u_reg = std::pow(y, s) * a.plain;
    const double du_reg = std::pow(y, s - 1.0) * a.weighted;
    const double u = std::pow(1.0 - y, mu) * b.plain;
    // d/dy (1-y)^{m+mu} = -(m+mu)(1-y)^{m+mu-1}; for mu = 0 the m = 0 term carries a zero weight.
    const double du = -std::pow(1.0 - y, mu - 1.0) * b.weighted;
    return u_reg * du - du_reg * u;
}

std::vector<double> mpt_exact_levels(const ModifiedPTSpec& spec)
{
    spec.validate();
    const double top = spec.parity_mu == 0.0 ? spec.lambda - 1.0 : spec.lambda - 2.0;
    std::vector<double> out;
    for (double v = top; v > 0.0; v -= 2.0) {
        out.push_back(v);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

MorseValue morse_u_reg(const MorseSpec& spec, double beta_over_alpha, double y)
{
    spec.validate();
    if (!(beta_over_alpha > 0.0)) {
        throw InvalidArgument("beta/alpha must be positive");
    }
    if (!(y >= 0.0)) {
        throw InvalidArgument("y must be nonnegative");
    }
    MorseValue out;
    if (y == 0.0) {
        out.cancellation = 1.0;
        return out;
    }
    // The a_n series equals exp(-y/2) 1F1(a; b; y). Summing it directly cancels
    // like exp(-y/2)'s Taylor series; the 1F1 series only cancels over its
    // first -a terms, and the exponential is applied afterwards.
    const double a = 0.5 + beta_over_alpha - spec.gamma_over_alpha;
    const double b = 1.0 + 2.0 * beta_over_alpha;

    CompensatedSum sum;
    double max_partial = 0.0;
    double term = 1.0;
    int small = 0;
    int n = 0;
    for (; n < kTermCap; ++n) {
        if (n > 0) {
            term *= (a + n - 1) / (b + n - 1) * y / n;
        }
        sum += term;
        const double partial = std::abs(sum.value());
        max_partial = std::max(max_partial, partial);
        small = std::abs(term) < kTailTolerance * partial ? small + 1 : 0;
        if ((small >= 3 && n > y) || term == 0.0) {
            break;
        }
    }
    if (n == kTermCap) {
        throw NotConvergedError("Morse series did not converge", sum.value(), kTermCap);
    }
    const double inner = sum.value();
    out.terms = n + 1;
    out.cancellation = inner != 0.0 ? max_partial / std::abs(inner) : INFINITY;
    const double lost = max_partial / std::max(std::abs(inner), 1.0);
    if (lost > kMorseCancellationLimit) {
        throw PrecisionLossError("Morse series lost too many digits at y = " + std::to_string(y), lost);
    }
    out.value = std::exp(beta_over_alpha * std::log(y) - 0.5 * y) * inner;
    return out;
}

std::vector<double> morse_series_coeffs(const MorseSpec& spec, double beta_over_alpha, int count)
{
    spec.validate();
    std::vector<double> c(static_cast<std::size_t>(std::max(count, 0)));
    const double two_s = 2.0 * beta_over_alpha;
    for (int n = 0; n < count; ++n) {
        const auto i = static_cast<std::size_t>(n);
        if (n == 0) {
            c[i] = 1.0;
            continue;
        }
        const double prev2 = n >= 2 ? c[i - 2] : 0.0;
        c[i] = (-spec.gamma_over_alpha * c[i - 1] + 0.25 * prev2) / (n * (n + two_s));
    }
    return c;
}

double morse_quantization(const MorseSpec& spec, double beta_over_alpha)
{
    return morse_u_reg(spec, beta_over_alpha, spec.y0()).value;
}

std::vector<double> morse_reference_levels(const MorseSpec& spec)
{
    spec.validate();
    std::vector<double> out;
    for (double v = spec.gamma_over_alpha - 0.5; v > 0.0; v -= 1.0) {
        out.push_back(v);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<double> pt_located_levels(const PoschlTellerSpec& spec, int count)
{
    const auto exact = pt_exact_levels(spec, count + 1);
    const double hi = 0.5 * (exact[static_cast<std::size_t>(count) - 1] + exact[static_cast<std::size_t>(count)]);
    auto roots = locate([&](double k2) { return pt_wronskian(spec, k2); }, 0.25, hi, 0.25);
    if (static_cast<int>(roots.size()) > count) {
        roots.resize(static_cast<std::size_t>(count));
    }
    return roots;
}

std::vector<double> mpt_located_levels(const ModifiedPTSpec& spec)
{
    spec.validate();
    return locate([&](double k) { return mpt_wronskian(spec, k); }, 1e-3, spec.lambda, 5e-3);
}

std::vector<double> morse_located_levels(const MorseSpec& spec)
{
    spec.validate();
    const double hi = spec.gamma_over_alpha;
    return locate([&](double b) { return morse_quantization(spec, b); }, 1e-3 * hi, hi, 2.5e-3 * hi);
}

} // namespace wspec::solvable
