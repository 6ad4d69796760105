#pragma once

// Extended-precision reference computations used only by the tests. Nothing
// here calls into the library's series code.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using hp = boost::multiprecision::cpp_bin_float_100;

// b_n of the dressed regular series, straight from the recurrence.
inline std::vector<hp> regular(int N, double g, int nu, double E, std::size_t count)
{
    std::vector<hp> b(count, hp(0));
    const auto at = [&](long i) { return i >= 0 ? b[static_cast<std::size_t>(i)] : hp(0); };
    b[0] = 1;
    for (long n = 2; n < static_cast<long>(count); ++n) {
        const hp d = hp(n + nu) * hp(n + nu - 1);
        const hp rhs = -hp(E) * at(n - 2) + hp(g) * at(n - 4) + hp(2) * (hp(n) - hp(N) / 2 - 1 + nu) * at(n - N - 1);
        b[static_cast<std::size_t>(n)] = rhs / d;
    }
    return b;
}

// h_m of the recessive asymptotic series.
inline std::vector<hp> asymptotic(int N, double g, double E, std::size_t count)
{
    std::vector<hp> h(count, hp(0));
    const auto at = [&](long i) { return i >= 0 ? h[static_cast<std::size_t>(i)] : hp(0); };
    h[0] = 1;
    for (long m = 1; m < static_cast<long>(count); ++m) {
        const hp s = hp(m) - hp(N) / 2;
        const hp rhs = s * (s - 1) * at(m - N - 1) + hp(E) * at(m - N + 1) - hp(g) * at(m - N + 3);
        h[static_cast<std::size_t>(m)] = rhs / hp(-2 * m);
    }
    return h;
}

// gamma_k summed over m < terms.
inline hp gamma_k(int N, double g, int nu, double E, long k, std::size_t terms)
{
    const auto b = regular(N, g, nu, E, static_cast<std::size_t>(k) + terms);
    const auto h = asymptotic(N, g, E, terms);
    const hp mu = -hp(N) / 2;
    hp sum = 0;
    for (std::size_t m = 0; m < terms; ++m) {
        sum += (hp(-2 * static_cast<long>(m) - k - nu) + mu) * b[m + static_cast<std::size_t>(k)] * h[m];
    }
    return sum;
}

// 1F1(a; b; y) by its defining series.
inline hp hyp1f1(double a, double b, double y)
{
    hp sum = 1, term = 1;
    const hp eps = boost::multiprecision::pow(hp(10), -90);
    for (int n = 0; n < 100000; ++n) {
        term *= (hp(a) + n) / (hp(b) + n) * hp(y) / (n + 1);
        sum += term;
        if (n > y && boost::multiprecision::abs(term) < eps * boost::multiprecision::abs(sum)) {
            break;
        }
    }
    return sum;
}

// y^s sum a_n y^n with n(n+2s) a_n = -(gamma/alpha) a_{n-1} + a_{n-2}/4.
inline hp morse_direct(double gamma_over_alpha, double s, double y)
{
    hp sum = 0, a2 = 0, a1 = 0, a = 1, power = 1;
    const hp eps = boost::multiprecision::pow(hp(10), -90);
    for (int n = 0; n < 100000; ++n) {
        if (n > 0) {
            a = (-hp(gamma_over_alpha) * a1 + a2 / 4) / (hp(n) * (hp(n) + 2 * hp(s)));
            power *= hp(y);
        }
        const hp term = a * power;
        sum += term;
        if (n > y && boost::multiprecision::abs(term) < eps * boost::multiprecision::abs(sum)) {
            break;
        }
        a2 = a1;
        a1 = a;
    }
    return boost::multiprecision::pow(hp(y), hp(s)) * sum;
}

// Bisection on morse_direct at y0.
inline double morse_zero(double alpha, double gamma_over_alpha, double lo, double hi)
{
    const double y0 = 2.0 * gamma_over_alpha * std::exp(alpha);
    hp flo = morse_direct(gamma_over_alpha, lo, y0);
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        const hp fm = morse_direct(gamma_over_alpha, mid, y0);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace oracle
