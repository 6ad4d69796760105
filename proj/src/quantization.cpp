#include "wspec/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wspec/errors.hpp"
#include "wspec/special.hpp"
#include "wspec/summation.hpp"

namespace wspec {

namespace {

// Core of the gamma_k sum. `ensure` makes b_{m+k} and h_m available and
// returns false when no further terms can be supplied.
//
// Only m in the residue class {first, first + stride, ...} can give a nonzero
// product b_{m+k} h_m; the remaining terms vanish identically.
template <class Ensure>
GammaSum sum_gamma(const CoefficientSeries& b, const CoefficientSeries& h, long k, int nu, double mu,
                   const TailPolicy& tail, std::size_t first, std::size_t stride, Ensure&& ensure)
{
    GammaSum out;
    CompensatedSum sum;
    double max_partial = 0.0;
    int small_run = 0;
    double run_max_ratio = 0.0;
    int reference = 0;
    bool have_reference = false;

    std::size_t m = first;
    std::size_t used = 0;
    for (; used < tail.term_cap; m += stride) {
        ++used;
        if (!ensure(m)) {
            out.exhausted = true;
            --used;
            break;
        }
        const std::size_t bi = m + static_cast<std::size_t>(k);
        if (!have_reference) {
            reference = b.exponents[bi] + h.exponents[m];
            have_reference = true;
        }
        const double weight = -2.0 * static_cast<double>(m) - static_cast<double>(k) - nu + mu;
        const int exponent = b.exponents[bi] + h.exponents[m] - reference;
        const double term = std::ldexp(weight * b.mantissas[bi] * h.mantissas[m], exponent);
        sum += term;

        const double partial = std::abs(sum.value());
        max_partial = std::max(max_partial, partial);
        if (std::abs(term) < tail.relative_tolerance * partial) {
            ++small_run;
            run_max_ratio = std::max(run_max_ratio, std::abs(term) / partial);
        } else {
            small_run = 0;
            run_max_ratio = 0.0;
        }
        if (small_run >= tail.consecutive_small && max_partial < tail.max_cancellation * partial) {
            out.converged = true;
            break;
        }
    }

    const double total = sum.value();
    out.terms_used = used;
    out.value = have_reference ? std::ldexp(total, reference) : 0.0;
    out.cancellation = total != 0.0 ? max_partial / std::abs(total) : INFINITY;
    out.tail_estimate = out.converged ? run_max_ratio : INFINITY;
    return out;
}

} // namespace

SupportLattice SupportLattice::for_problem(const OscillatorSpec& spec, double energy)
{
    const int N = spec.N;
    // b_n steps by 2 (E), 4 (g) and N+1; h_m by N-1 (E), N-3 (g) and N+1.
    int b_stride = N + 1;
    int h_stride = N + 1;
    if (energy != 0.0) {
        b_stride = std::gcd(b_stride, 2);
        h_stride = std::gcd(h_stride, N - 1);
    }
    if (spec.g != 0.0) {
        b_stride = std::gcd(b_stride, 4);
        h_stride = std::gcd(h_stride, N - 3);
    }
    return {b_stride, h_stride};
}

std::optional<std::pair<std::size_t, std::size_t>> SupportLattice::gamma_terms(long k) const
{
    // m = 0 (mod h_stride) and m + k = 0 (mod b_stride).
    const long step = std::lcm(static_cast<long>(b_stride), static_cast<long>(h_stride));
    for (long m = 0; m < step; m += h_stride) {
        if ((m + k) % b_stride == 0) {
            return std::pair<std::size_t, std::size_t>{static_cast<std::size_t>(m), static_cast<std::size_t>(step)};
        }
    }
    return std::nullopt;
}

std::vector<QuantizationIndex> quantization_indices(int N, int nu, int n)
{
    if (n < 0) {
        throw InvalidArgument("free index n must be nonnegative");
    }
    if (N < 1 || (nu != 0 && nu != 1)) {
        throw InvalidArgument("invalid N or parity");
    }
    const double mu = -0.5 * N;
    std::vector<QuantizationIndex> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (int L = 0; L <= N; ++L) {
        out.push_back({(nu + mu + L) / (N + 1), static_cast<long>(n) * (N + 1) + 1 + L});
    }
    return out;
}

int starting_n(int N, const EscalationPolicy& policy)
{
    if (policy.start_n) {
        return *policy.start_n;
    }
    return (policy.k_threshold + N) / (N + 1);
}

GammaSum sum_gamma_series(const CoefficientSeries& b, const CoefficientSeries& h, long k, int nu, double mu,
                          const TailPolicy& tail)
{
    if (k < 1) {
        throw InvalidArgument("gamma index k must be at least 1");
    }
    const auto ensure = [&](std::size_t m) {
        return m + static_cast<std::size_t>(k) < b.size() && m < h.size();
    };
    return sum_gamma(b, h, k, nu, mu, tail, 0, 1, ensure);
}

QuantizationContext::QuantizationContext(const OscillatorSpec& spec, double energy)
    : spec_(spec), energy_(energy), b_(spec, energy), h_(spec, energy),
      lattice_(SupportLattice::for_problem(spec, energy))
{
}

GammaSum QuantizationContext::gamma(long k, const TailPolicy& tail)
{
    if (k < 1) {
        throw InvalidArgument("gamma index k must be at least 1");
    }
    const auto classes = lattice_.gamma_terms(k);
    if (!classes) {
        GammaSum zero;
        zero.converged = true;
        zero.cancellation = 1.0;
        return zero;
    }
    const auto ensure = [&](std::size_t m) {
        const std::size_t need_b = m + static_cast<std::size_t>(k) + 1;
        if (need_b > b_.series().size()) {
            b_.extend_to(std::max(need_b, 2 * b_.series().size()));
        }
        if (m + 1 > h_.series().size()) {
            h_.extend_to(std::max(m + 1, 2 * h_.series().size()));
        }
        return true;
    };
    // Prime a reasonable prefix so the series vectors do not reallocate term by term.
    b_.extend_to(static_cast<std::size_t>(k) + 256);
    h_.extend_to(256);
    return sum_gamma(b_.series(), h_.series(), k, spec_.nu(), spec_.mu(), tail, classes->first, classes->second,
                     ensure);
}

QuantizationEvaluation QuantizationContext::evaluate(int n, const TailPolicy& tail)
{
    const int N = spec_.N;
    const auto indices = quantization_indices(N, spec_.nu(), n);
    QuantizationEvaluation ev;
    ev.energy = energy_;
    ev.n_index = n;
    ev.converged = true;

    const double base = 0.5 * (N + 1);
    CompensatedSum total;
    for (int L = 0; L <= N; ++L) {
        const auto& [delta, k] = indices[static_cast<std::size_t>(L)];
        const GammaSum gs = gamma(k, tail);
        ev.gamma_values.push_back(gs.value);
        ev.terms_used.push_back(gs.terms_used);
        ev.cancellation.push_back(gs.cancellation);
        ev.converged = ev.converged && gs.converged;
        ev.tail_estimate = std::max(ev.tail_estimate, gs.tail_estimate);

        const double term = gamma_function(n + 1 + delta) * std::pow(base, static_cast<double>(L) / (N + 1)) * gs.value;
        ev.term_scale = std::max(ev.term_scale, std::abs(term));
        total += term;
    }
    ev.value = total.value();
    const double shift = n + (spec_.nu() + spec_.mu()) / (N + 1);
    ev.wronskian = std::pow(base, shift) * ev.value;
    return ev;
}

double QuantizationEvaluation::relative_residual() const noexcept
{
    return term_scale > 0.0 ? std::abs(value) / term_scale : INFINITY;
}

GammaSum wronskian_gamma(const OscillatorSpec& spec, double energy, long k, const TailPolicy& tail)
{
    QuantizationContext ctx(spec, energy);
    GammaSum gs = ctx.gamma(k, tail);
    if (!gs.converged) {
        throw NotConvergedError("gamma_" + std::to_string(k) + " did not converge within " +
                                    std::to_string(tail.term_cap) + " terms",
                                gs.value, gs.terms_used);
    }
    return gs;
}

QuantizationEvaluation quantization_value_at(const OscillatorSpec& spec, double energy, int n, const TailPolicy& tail)
{
    QuantizationContext ctx(spec, energy);
    return ctx.evaluate(n, tail);
}

QuantizationEvaluation quantization_value(const OscillatorSpec& spec, double energy, int n,
                                          const QuantizationPolicy& policy)
{
    const auto& esc = policy.escalation;
    if (n < 0) {
        throw InvalidArgument("free index n must be nonnegative");
    }
    QuantizationContext ctx(spec, energy);
    const double ratio = 2.0 / (spec.N + 1);
    QuantizationEvaluation last;
    for (int current = n; current <= n + esc.max_extra; current += esc.step) {
        last = ctx.evaluate(current, policy.tail);
        if (!last.converged) {
            continue;
        }
        if (!esc.check_ratio_law) {
            return last;
        }
        const QuantizationEvaluation next = ctx.evaluate(current + 1, policy.tail);
        if (!next.converged) {
            continue;
        }
        const double scale = std::max(next.term_scale, ratio * last.term_scale);
        if (std::abs(next.value - ratio * last.value) <= esc.ratio_tolerance * scale) {
            return last;
        }
    }
    throw NotConvergedError("quantization function did not converge at E = " + std::to_string(energy) +
                                " up to n = " + std::to_string(n + esc.max_extra),
                            last.value, last.terms_used.empty() ? 0 : last.terms_used.back());
}

QuantizationEvaluation quantization_value(const OscillatorSpec& spec, double energy, const QuantizationPolicy& policy)
{
    return quantization_value(spec, energy, starting_n(spec.N, policy.escalation), policy);
}

} // namespace wspec
