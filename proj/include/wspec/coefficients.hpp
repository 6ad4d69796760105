#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "wspec/oscillator.hpp"

namespace wspec {

/// Records that the power-of-two scale changed starting at `index`.
struct RescaleEvent {
    std::size_t index = 0;
    int exponent = 0;
};

/// Finite prefix of a recurrence-generated sequence.
///
/// Entries are stored as a mantissa and a per-entry power-of-two exponent so
/// that sequences which grow or decay past the double range stay finite. The
/// true coefficient is `mantissa[i] * 2^exponent[i]`. The exponent is piecewise
/// constant and changes only at the indices listed in `rescale_log`.
struct CoefficientSeries {
    std::vector<double> mantissas;
    std::vector<int> exponents;
    double normalization = 1.0;
    int rescale_exponent = 0;
    std::vector<RescaleEvent> rescale_log;

    std::size_t size() const noexcept { return mantissas.size(); }
    /// Highest index held (M); -1 when empty.
    long truncation_order() const noexcept { return static_cast<long>(size()) - 1; }

    /// The coefficient itself. Underflows to 0 or overflows to inf when the
    /// magnitude leaves the double range; use scaled() to compare entries.
    double value(std::size_t i) const { return std::ldexp(mantissas[i], exponents[i]); }

    /// The coefficient divided by 2^reference.
    double scaled(std::size_t i, int reference) const
    {
        return std::ldexp(mantissas[i], exponents[i] - reference);
    }

    /// Values for indices 0..size()-1, in plain doubles.
    std::vector<double> values() const;
};

/// Incrementally extended solution of a linear recurrence of the form
/// d(n) c_n = sum_j w_j(n) c_{n - s_j}, with c_n = 0 for n < 0 and c_0 = 1.
///
/// The row callback receives n and an accessor returning c_{n-s} in the
/// current reference scale; it returns {numerator, denominator}. A zero
/// denominator yields c_n = 0 (the free Frobenius coefficient).
class RecurrenceSeries {
public:
    struct Row {
        double numerator;
        double denominator;
    };
    using Accessor = std::function<double(long)>;
    using RowFunction = std::function<Row(long n, const Accessor& c)>;

    RecurrenceSeries(RowFunction row, std::size_t lookback, const char* label);

    void extend_to(std::size_t count);
    const CoefficientSeries& series() const noexcept { return series_; }

private:
    RowFunction row_;
    std::size_t lookback_;
    const char* label_;
    CoefficientSeries series_;
};

/// Coefficients b_n of exp(x^{N+1}/(N+1)) u_reg(x) = sum b_n x^{n+nu}.
class RegularSeries {
public:
    RegularSeries(const OscillatorSpec& spec, double energy);
    void extend_to(std::size_t count) { engine_.extend_to(count); }
    const CoefficientSeries& series() const noexcept { return engine_.series(); }

private:
    RecurrenceSeries engine_;
};

/// Coefficients h_m of the recessive large-x expansion x^mu sum h_m x^{-m}.
class AsymptoticSeries {
public:
    AsymptoticSeries(const OscillatorSpec& spec, double energy);
    void extend_to(std::size_t count) { engine_.extend_to(count); }
    const CoefficientSeries& series() const noexcept { return engine_.series(); }

private:
    RecurrenceSeries engine_;
};

/// b_0..b_{count-1}. Throws OverflowError if a coefficient cannot be kept finite.
CoefficientSeries regular_series_coeffs(const OscillatorSpec& spec, double energy, std::size_t count);

/// h_0..h_{count-1} for the decaying solution (alpha = -1).
CoefficientSeries asymptotic_coeffs(const OscillatorSpec& spec, double energy, std::size_t count);

/// a_0..a_{count-1} of the undressed regular solution u_reg = sum a_n x^{n+nu}.
CoefficientSeries plain_regular_coeffs(const OscillatorSpec& spec, double energy, std::size_t count);

} // namespace wspec
