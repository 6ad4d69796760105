#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wspec/coefficients.hpp"
#include "wspec/oscillator.hpp"

namespace wspec {

/// Termination rule for the Wronskian coefficient sums.
///
/// Summation stops once `consecutive_small` terms in a row satisfy
/// |term| < relative_tolerance * |partial| while the cancellation ratio
/// max|partial| / |partial| is below `max_cancellation`. Reaching `term_cap`
/// first means the sum did not converge.
struct TailPolicy {
    double relative_tolerance = 1e-16;
    int consecutive_small = 5;
    double max_cancellation = 1e6;
    std::size_t term_cap = 50000;
};

/// Choice of the free index n in k_L = n(N+1) + 1 + L.
struct EscalationPolicy {
    int k_threshold = 64;
    int step = 8;
    int max_extra = 80;
    /// Compare F at n and n+1 against the 2/(N+1) law before accepting n.
    bool check_ratio_law = true;
    double ratio_tolerance = 1e-6;
    /// Overrides the starting n derived from k_threshold.
    std::optional<int> start_n;
};

struct QuantizationPolicy {
    TailPolicy tail;
    EscalationPolicy escalation;
};

/// One coefficient gamma_k of the formal Wronskian expansion.
struct GammaSum {
    double value = 0.0;
    std::size_t terms_used = 0;
    /// max over the run of |partial sum|, divided by |final sum|.
    double cancellation = 0.0;
    /// Largest |term| / |sum| among the trailing small terms.
    double tail_estimate = 0.0;
    bool converged = false;
    /// The supplied coefficient prefix ran out before the cap.
    bool exhausted = false;
};

struct QuantizationIndex {
    double delta;
    long k;
};

/// (delta_L, k_L) for L = 0..N.
std::vector<QuantizationIndex> quantization_indices(int N, int nu, int n);

/// Smallest n whose k_0 reaches the policy's k threshold.
int starting_n(int N, const EscalationPolicy& policy);

/// gamma_k summed over the terms present in the two finite prefixes.
GammaSum sum_gamma_series(const CoefficientSeries& b, const CoefficientSeries& h, long k, int nu, double mu,
                          const TailPolicy& tail);

struct QuantizationEvaluation {
    /// F_n(E), the left side of the final quantization condition for this n.
    double value = 0.0;
    double energy = 0.0;
    int n_index = 0;
    std::vector<double> gamma_values;
    std::vector<std::size_t> terms_used;
    std::vector<double> cancellation;
    bool converged = false;
    double tail_estimate = 0.0;
    /// max_L of |Gamma(n+1+delta_L) ((N+1)/2)^{L/(N+1)} gamma_{k_L}|.
    double term_scale = 0.0;
    /// W[u_reg, u1] = ((N+1)/2)^{n + (nu+mu)/(N+1)} F_n(E); independent of n.
    double wronskian = 0.0;

    /// |F| / term_scale.
    double relative_residual() const noexcept;
};

/// Index strides on which b_n and h_m can be nonzero. For odd N, or for
/// E = 0 or g = 0, some recurrence steps drop out and the coefficients
/// vanish off a sublattice.
struct SupportLattice {
    int b_stride = 1;
    int h_stride = 1;

    static SupportLattice for_problem(const OscillatorSpec& spec, double energy);
    /// {first m, stride} of the terms of gamma_k that can be nonzero, or
    /// nullopt when gamma_k vanishes identically.
    std::optional<std::pair<std::size_t, std::size_t>> gamma_terms(long k) const;
};

/// Evaluation context for one (spec, energy). Coefficient prefixes grow on
/// demand and are shared by every gamma_k requested from the same context.
class QuantizationContext {
public:
    QuantizationContext(const OscillatorSpec& spec, double energy);

    GammaSum gamma(long k, const TailPolicy& tail);
    /// F_n without any escalation; `converged` reports whether every gamma did.
    QuantizationEvaluation evaluate(int n, const TailPolicy& tail);

    const OscillatorSpec& spec() const noexcept { return spec_; }
    double energy() const noexcept { return energy_; }
    const CoefficientSeries& regular() const noexcept { return b_.series(); }
    const CoefficientSeries& asymptotic() const noexcept { return h_.series(); }

private:
    OscillatorSpec spec_;
    double energy_;
    RegularSeries b_;
    AsymptoticSeries h_;
    SupportLattice lattice_;
};

/// gamma_k with lazily generated coefficients. Throws NotConvergedError
/// (carrying the best partial sum) when the term cap is hit.
GammaSum wronskian_gamma(const OscillatorSpec& spec, double energy, long k, const TailPolicy& tail = {});

/// F_n(E) for exactly this n; never escalates and never throws on non-convergence.
QuantizationEvaluation quantization_value_at(const OscillatorSpec& spec, double energy, int n, const TailPolicy& tail = {});

/// F(E) starting from n and escalating n until every gamma converges and the
/// n -> n+1 ratio law holds. Throws NotConvergedError when escalation runs out.
QuantizationEvaluation quantization_value(const OscillatorSpec& spec, double energy, int n,
                                          const QuantizationPolicy& policy = {});

/// As above with the policy's default starting n.
QuantizationEvaluation quantization_value(const OscillatorSpec& spec, double energy, const QuantizationPolicy& policy = {});

} // namespace wspec
