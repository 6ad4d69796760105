#include "wspec/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wspec/errors.hpp"

namespace wspec::numerov {

namespace {

constexpr double kDecayExponent = 40.0;
constexpr double kBig = 1e150;

double outer_turning_point(const EvenPolynomialPotential& v, double energy)
{
    double hi = 1.0;
    while (v(hi) < energy) {
        hi *= 2.0;
    }
    // Walk down from hi to the last sign change of V - E.
    double lo = 0.0;
    const int probes = 4000;
    for (int i = probes; i > 0; --i) {
        const double x = hi * (i - 1) / probes;
        if (v(x) < energy) {
            lo = x;
            hi = hi * i / probes;
            break;
        }
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (v(mid) < energy ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Where the integral of sqrt(V - E) past the turning point reaches the cutoff.
double decay_end(const EvenPolynomialPotential& v, double energy, double turning, double limit)
{
    const double dx = 1e-3 * std::max(turning, 0.1);
    double x = turning;
    double s = 0.0;
    while (x < limit && s < kDecayExponent) {
        s += std::sqrt(std::max(0.0, v(x + 0.5 * dx) - energy)) * dx;
        x += dx;
    }
    return std::min(x, limit);
}

} // namespace

double EvenPolynomialPotential::operator()(double x) const
{
    const double x2 = x * x;
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * x2 + *it;
    }
    return acc;
}

double EvenPolynomialPotential::minimum() const
{
    double best = (*this)(0.0);
    double best_x = 0.0;
    for (double x = 0.0; (*this)(x) <= best + 1.0 || x < 1.0; x += 1e-3) {
        if ((*this)(x) < best) {
            best = (*this)(x);
            best_x = x;
        }
    }
    // Golden-section polish around the coarse minimum.
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = std::max(0.0, best_x - 1e-3), b = best_x + 1e-3;
    for (int i = 0; i < 60; ++i) {
        const double c = b - r * (b - a), d = a + r * (b - a);
        if ((*this)(c) < (*this)(d)) {
            b = d;
        } else {
            a = c;
        }
    }
    return std::min(best, (*this)(0.5 * (a + b)));
}

EvenPolynomialPotential EvenPolynomialPotential::anharmonic(double g, int N)
{
    EvenPolynomialPotential v;
    v.coefficients.assign(static_cast<std::size_t>(N) + 1, 0.0);
    v.coefficients[1] += g;
    v.coefficients[static_cast<std::size_t>(N)] += 1.0;
    return v;
}

EvenPolynomialPotential EvenPolynomialPotential::harmonic()
{
    return {{0.0, 1.0}};
}

void GridSpec::validate() const
{
    if (!(x_max > 0.0)) {
        throw GridError("x_max must be positive");
    }
    if (steps < 1000) {
        throw GridError("at least 1000 steps are required");
    }
}

ShootingResult numerov_integrate(const EvenPolynomialPotential& potential, double energy, const GridSpec& grid, int parity)
{
    grid.validate();
    if (parity != 0 && parity != 1) {
        throw InvalidArgument("parity must be 0 or 1");
    }
    if (potential.coefficients.empty() || potential.coefficients.back() <= 0.0) {
        throw InvalidArgument("potential must be confining");
    }

    const double h = grid.spacing();
    const double h2 = h * h;
    const double turning = outer_turning_point(potential, energy);
    if (turning > 0.8 * grid.x_max) {
        throw GridError("turning point " + std::to_string(turning) + " lies beyond 0.8 x_max");
    }
    const double x_end = decay_end(potential, energy, turning, grid.x_max);
    const int last = std::max(static_cast<int>(std::ceil(x_end / h)), 4);
    const int match = std::clamp(static_cast<int>(std::lround(turning / h)), 2, last - 2);

    const auto f = [&](int i) { return potential(i * h) - energy; };
    const auto weight = [&](int i) { return 1.0 - h2 * f(i) / 12.0; };
    if (h2 * f(last) / 12.0 > 0.5) {
        throw GridError("step too coarse for the potential at x = " + std::to_string(last * h));
    }

    ShootingResult out;
    out.energy = energy;
    out.matching_point = match * h;
    out.x_end = last * h;

    // Outward sweep: u'' = f u in the form w_{i+1} = 2 w_i - w_{i-1} + h^2 f_i u_i.
    double u_prev = parity == 0 ? 1.0 : 0.0;
    double u_curr;
    if (parity == 0) {
        // Mirror symmetry u_{-1} = u_1.
        u_curr = (1.0 + 5.0 * h2 * f(0) / 12.0) * u_prev / weight(1);
    } else {
        const double f0 = f(0);
        const double curvature = 2.0 * (potential.coefficients.size() > 1 ? potential.coefficients[1] : 0.0);
        u_curr = h + f0 * h * h2 / 6.0 + (3.0 * curvature + f0 * f0) * h2 * h2 * h / 120.0;
    }
    double out_m_minus = 0.0, out_m = 0.0, out_m_plus = 0.0;
    int nodes = 0;
    for (int i = 1; i < last; ++i) {
        if (i == match - 1) out_m_minus = u_curr;
        if (i == match) out_m = u_curr;
        if (i == match + 1) out_m_plus = u_curr;
        const double w_next = 2.0 * weight(i) * u_curr - weight(i - 1) * u_prev + h2 * f(i) * u_curr;
        const double u_next = w_next / weight(i + 1);
        if ((u_next < 0.0) != (u_curr < 0.0) && u_curr != 0.0) {
            ++nodes;
            if (i + 1 <= match) {
                ++out.node_count;
            }
        }
        u_prev = u_curr;
        u_curr = u_next;
        if (std::abs(u_curr) > kBig) {
            u_prev /= kBig;
            u_curr /= kBig;
            out_m_minus /= i >= match - 1 ? kBig : 1.0;
            out_m /= i >= match ? kBig : 1.0;
            out_m_plus /= i >= match + 1 ? kBig : 1.0;
        }
    }
    out.sign_changes = nodes;

    // Inward sweep from the far end with a WKB decaying seed.
    double v_next = 1e-30;
    double v_curr = v_next * std::exp(h * std::sqrt(std::max(0.0, f(last) )));
    double in_m_minus = 0.0, in_m = 0.0, in_m_plus = 0.0;
    for (int i = last - 1; i > match - 1; --i) {
        if (i == match + 1) in_m_plus = v_curr;
        if (i == match) in_m = v_curr;
        const double w_prev = 2.0 * weight(i) * v_curr - weight(i + 1) * v_next + h2 * f(i) * v_curr;
        const double v_prev = w_prev / weight(i - 1);
        v_next = v_curr;
        v_curr = v_prev;
        if (std::abs(v_curr) > kBig) {
            v_next /= kBig;
            v_curr /= kBig;
            in_m /= kBig;
            in_m_plus /= kBig;
        }
    }
    in_m_minus = v_curr;

    const double d_out = (out_m_plus - out_m_minus) / (2.0 * h * out_m);
    const double d_in = (in_m_plus - in_m_minus) / (2.0 * h * in_m);
    out.log_derivative_mismatch = d_out - d_in;
    return out;
}

double oracle_eigenvalue(const EvenPolynomialPotential& potential, int ordinal, int parity, const GridSpec& grid)
{
    if (ordinal < 0) {
        throw InvalidArgument("ordinal must be nonnegative");
    }
    const double floor = potential.minimum();
    GridSpec g = grid;
    const auto shoot = [&](double e) {
        for (;;) {
            try {
                return numerov_integrate(potential, e, g, parity);
            } catch (const GridError& err) {
                if (outer_turning_point(potential, e) <= 0.8 * g.x_max) {
                    throw;
                }
                // Keep the spacing, push the far end out.
                const double h = g.spacing();
                g.x_max *= 1.5;
                g.steps = static_cast<int>(std::lround(g.x_max / h));
            }
        }
    };

    // Bracket by node count: count(e) is the number of states below e.
    double lo = floor;
    double hi = floor + 1.0;
    int tries = 0;
    while (shoot(hi).sign_changes <= ordinal) {
        lo = hi;
        hi = floor + 2.0 * (hi - floor);
        if (++tries > 60) {
            throw WindowError("no state with " + std::to_string(ordinal) + " nodes found below " + std::to_string(hi));
        }
    }
    while (hi - lo > 1e-3 * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        (shoot(mid).sign_changes <= ordinal ? lo : hi) = mid;
    }

    // The mismatch changes sign at the eigenvalue inside the count bracket.
    double m_lo = shoot(lo).log_derivative_mismatch;
    double m_hi = shoot(hi).log_derivative_mismatch;
    const bool use_mismatch = std::isfinite(m_lo) && std::isfinite(m_hi) && std::signbit(m_lo) != std::signbit(m_hi);
    for (int i = 0; i < 200 && hi - lo > 1e-11; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (use_mismatch) {
            const double m = shoot(mid).log_derivative_mismatch;
            if (std::signbit(m) == std::signbit(m_lo)) {
                lo = mid;
                m_lo = m;
            } else {
                hi = mid;
            }
        } else {
            (shoot(mid).sign_changes <= ordinal ? lo : hi) = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ExtrapolatedEigenvalue richardson_eigenvalue(const EvenPolynomialPotential& potential, int ordinal, int parity,
                                             const GridSpec& grid)
{
    ExtrapolatedEigenvalue out;
    out.coarse = oracle_eigenvalue(potential, ordinal, parity, grid);
    GridSpec fine = grid;
    fine.steps *= 2;
    out.fine = oracle_eigenvalue(potential, ordinal, parity, fine);
    out.extrapolated = (16.0 * out.fine - out.coarse) / 15.0;
    return out;
}

} // namespace wspec::numerov
