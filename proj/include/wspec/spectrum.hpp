#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wspec/oscillator.hpp"
#include "wspec/quantization.hpp"
#include "wspec/roots.hpp"

namespace wspec {

/// The coupling values used for the published tables, in row order.
inline const std::vector<double>& reference_couplings()
{
    static const std::vector<double> g{-20.0, -10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0, 20.0};
    return g;
}

/// g x^2 + x^{2N} without a parity sector.
struct OscillatorFamily {
    double g = 0.0;
    int N = 4;

    OscillatorSpec with_parity(Parity p) const { return {g, N, p}; }
};

struct Eigenvalue {
    double energy = 0.0;
    Parity parity = Parity::even;
    /// 0-based position among the roots of the same parity.
    int ordinal = 0;
    /// 0-based position in the merged, ascending list.
    int index = 0;
    /// |F| / max_L |term_L| at the returned energy.
    double residual = 0.0;
    int n_used = 0;
    std::vector<std::size_t> terms_used;
    double bracket_width = 0.0;
    int evaluations = 0;
};

struct SpectrumPolicy {
    QuantizationPolicy quantization;
    std::optional<double> e_min;
    std::optional<double> e_max;
    double step = 0.05;
    double energy_tolerance = 1e-10;
    /// How many times an automatic window may be extended upward.
    int max_extensions = 6;
    unsigned threads = 1;
    /// Restricts lowest_eigenvalues to one parity sector.
    std::optional<Parity> parity;
};

struct SpectrumResult {
    std::vector<Eigenvalue> eigenvalues;
    bool shortfall = false;
    double e_min = 0.0;
    double e_max = 0.0;
    std::size_t skipped_evaluations = 0;
};

/// Rough semiclassical estimate of the level with the given merged index.
double semiclassical_estimate(const OscillatorFamily& family, int level);

/// Default scan floor: min(0, V_min) - 5.
double default_window_floor(const OscillatorFamily& family);

/// n-independent Wronskian W[u_reg, u1](E) used for root finding.
double quantization_function(const OscillatorSpec& spec, double energy, const QuantizationPolicy& policy = {});

/// Every sign change of the Wronskian for one parity inside [e_min, e_max], refined.
std::vector<Eigenvalue> eigenvalues_in_window(const OscillatorSpec& spec, double e_min, double e_max,
                                              const SpectrumPolicy& policy, std::size_t* skipped = nullptr);

/// The `count` lowest levels of both parities merged in ascending order.
/// `shortfall` is set when the window ran out first.
SpectrumResult lowest_eigenvalues(const OscillatorFamily& family, int count, const SpectrumPolicy& policy = {});

struct SweepRow {
    double g = 0.0;
    std::vector<Eigenvalue> eigenvalues;
    bool shortfall = false;
};

struct SweepResult {
    int N = 4;
    int levels = 4;
    std::vector<SweepRow> rows;
    SpectrumPolicy policy;

    bool shortfall() const noexcept;
};

/// Lowest `levels` eigenvalues for each coupling, rows sorted by g. Rows are
/// independent and computed on up to policy.threads workers.
SweepResult reproduce_table(int N, std::vector<double> g_list, int levels, const SpectrumPolicy& policy = {});

} // namespace wspec
