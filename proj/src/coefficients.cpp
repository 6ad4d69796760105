#include "wspec/coefficients.hpp"

#include <algorithm>
#include <string>

#include "wspec/errors.hpp"

namespace wspec {

namespace {

// Rescale once the trailing window leaves [2^-830, 2^830] (about 1e+-250).
constexpr int kRescaleBits = 830;

} // namespace

std::vector<double> CoefficientSeries::values() const
{
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = value(i);
    }
    return out;
}

RecurrenceSeries::RecurrenceSeries(RowFunction row, std::size_t lookback, const char* label)
    : row_(std::move(row)), lookback_(std::max<std::size_t>(lookback, 1)), label_(label)
{
    series_.mantissas.push_back(1.0);
    series_.exponents.push_back(0);
}

void RecurrenceSeries::extend_to(std::size_t count)
{
    auto& s = series_;
    if (count <= s.size()) {
        return;
    }
    s.mantissas.reserve(count);
    s.exponents.reserve(count);

    while (s.size() < count) {
        const long n = static_cast<long>(s.size());
        const int reference = s.exponents.back();
        const Accessor at = [&s, reference](long j) -> double {
            if (j < 0) {
                return 0.0;
            }
            return s.scaled(static_cast<std::size_t>(j), reference);
        };
        const Row r = row_(n, at);
        double x = r.denominator == 0.0 ? 0.0 : r.numerator / r.denominator;
        if (!std::isfinite(x)) {
            throw OverflowError(std::string(label_) + ": non-finite coefficient", static_cast<std::size_t>(n));
        }

        double window_max = std::abs(x);
        const std::size_t first = s.size() >= lookback_ ? s.size() - lookback_ : 0;
        for (std::size_t j = first; j < s.size(); ++j) {
            window_max = std::max(window_max, std::abs(s.scaled(j, reference)));
        }

        int exponent = reference;
        if (window_max > 0.0 && (window_max > std::ldexp(1.0, kRescaleBits) || window_max < std::ldexp(1.0, -kRescaleBits))) {
            const int shift = std::ilogb(window_max);
            exponent += shift;
            x = std::ldexp(x, -shift);
            s.rescale_log.push_back({static_cast<std::size_t>(n), exponent});
        }
        s.mantissas.push_back(x);
        s.exponents.push_back(exponent);
        s.rescale_exponent = exponent;
    }
}

namespace {

RecurrenceSeries::RowFunction regular_row(const OscillatorSpec& spec, double energy)
{
    const int N = spec.N;
    const double g = spec.g;
    const int nu = spec.nu();
    return [=](long n, const RecurrenceSeries::Accessor& b) -> RecurrenceSeries::Row {
        const double d = static_cast<double>(n + nu) * static_cast<double>(n + nu - 1);
        const double num = -energy * b(n - 2) + g * b(n - 4) + 2.0 * (n - 0.5 * N - 1.0 + nu) * b(n - N - 1);
        return {num, d};
    };
}

RecurrenceSeries::RowFunction asymptotic_row(const OscillatorSpec& spec, double energy)
{
    const int N = spec.N;
    const double g = spec.g;
    const double alpha = AsymptoticExponents::for_degree(N).alpha1;
    return [=](long m, const RecurrenceSeries::Accessor& h) -> RecurrenceSeries::Row {
        const double shifted = m - 0.5 * N;
        const double num = shifted * (shifted - 1.0) * h(m - N - 1) + energy * h(m - N + 1) - g * h(m - N + 3);
        return {num, 2.0 * alpha * static_cast<double>(m)};
    };
}

RecurrenceSeries::RowFunction plain_row(const OscillatorSpec& spec, double energy)
{
    const int N = spec.N;
    const double g = spec.g;
    const int nu = spec.nu();
    return [=](long n, const RecurrenceSeries::Accessor& a) -> RecurrenceSeries::Row {
        const double d = static_cast<double>(n + nu) * static_cast<double>(n + nu - 1);
        const double num = -energy * a(n - 2) + g * a(n - 4) + a(n - 2 * N - 2);
        return {num, d};
    };
}

void check_inputs(const OscillatorSpec& spec, double energy)
{
    spec.validate();
    if (!std::isfinite(energy)) {
        throw InvalidArgument("energy must be finite");
    }
}

} // namespace

RegularSeries::RegularSeries(const OscillatorSpec& spec, double energy)
    : engine_((check_inputs(spec, energy), regular_row(spec, energy)), static_cast<std::size_t>(spec.N) + 1, "regular series")
{
}

AsymptoticSeries::AsymptoticSeries(const OscillatorSpec& spec, double energy)
    : engine_((check_inputs(spec, energy), asymptotic_row(spec, energy)), static_cast<std::size_t>(spec.N) + 1, "asymptotic series")
{
}

CoefficientSeries regular_series_coeffs(const OscillatorSpec& spec, double energy, std::size_t count)
{
    if (count < 1) {
        throw InvalidArgument("count must be at least 1");
    }
    RegularSeries s(spec, energy);
    s.extend_to(count);
    return s.series();
}

CoefficientSeries asymptotic_coeffs(const OscillatorSpec& spec, double energy, std::size_t count)
{
    if (count < 1) {
        throw InvalidArgument("count must be at least 1");
    }
    AsymptoticSeries s(spec, energy);
    s.extend_to(count);
    return s.series();
}

CoefficientSeries plain_regular_coeffs(const OscillatorSpec& spec, double energy, std::size_t count)
{
    if (count < 1) {
        throw InvalidArgument("count must be at least 1");
    }
    check_inputs(spec, energy);
    RecurrenceSeries s(plain_row(spec, energy), 2 * static_cast<std::size_t>(spec.N) + 2, "plain regular series");
    s.extend_to(count);
    return s.series();
}

} // namespace wspec
