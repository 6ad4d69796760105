#include "wspec/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "wspec/errors.hpp"

namespace wspec {

namespace {

double potential(const OscillatorFamily& f, double x)
{
    const double x2 = x * x;
    return f.g * x2 + std::pow(x2, f.N);
}

// Outermost turning point of V(x) = E on x > 0.
double outer_turning_point(const OscillatorFamily& f, double energy)
{
    double hi = 1.0;
    while (potential(f, hi) < energy) {
        hi *= 2.0;
    }
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (potential(f, mid) < energy ? lo : hi) = mid;
    }
    return hi;
}

double phase_integral(const OscillatorFamily& f, double energy)
{
    const double xt = outer_turning_point(f, energy);
    constexpr int kPanels = 2000;
    const double h = xt / kPanels;
    double s = 0.0;
    for (int i = 0; i < kPanels; ++i) {
        const double x = (i + 0.5) * h;
        s += std::sqrt(std::max(0.0, energy - potential(f, x)));
    }
    return 2.0 * s * h;
}

} // namespace

double semiclassical_estimate(const OscillatorFamily& family, int level)
{
    const double target = std::numbers::pi * (level + 0.5);
    double lo = potential_minimum(family.g, family.N);
    double hi = std::max(lo, 0.0) + 1.0;
    while (phase_integral(family, hi) < target) {
        hi = lo + 2.0 * (hi - lo);
    }
    for (int i = 0; i < 100 && hi - lo > 1e-9; ++i) {
        const double mid = 0.5 * (lo + hi);
        (phase_integral(family, mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double default_window_floor(const OscillatorFamily& family)
{
    return std::min(0.0, potential_minimum(family.g, family.N)) - 5.0;
}

double quantization_function(const OscillatorSpec& spec, double energy, const QuantizationPolicy& policy)
{
    return quantization_value(spec, energy, policy).wronskian;
}

std::vector<Eigenvalue> eigenvalues_in_window(const OscillatorSpec& spec, double e_min, double e_max,
                                              const SpectrumPolicy& policy, std::size_t* skipped)
{
    spec.validate();
    const ScalarFunction f = [&](double e) { return quantization_function(spec, e, policy.quantization); };
    const ScanResult scan = scan_brackets(f, e_min, e_max, policy.step, policy.threads);
    if (skipped) {
        *skipped += scan.skipped.size();
    }

    std::vector<Eigenvalue> out;
    for (const Bracket& br : scan.brackets) {
        const RootEstimate root = refine_root(f, br, policy.energy_tolerance);
        Eigenvalue ev;
        ev.energy = root.x;
        ev.parity = spec.parity;
        ev.bracket_width = root.bracket_width;
        ev.evaluations = root.evaluations;
        const QuantizationEvaluation q = quantization_value(spec, root.x, policy.quantization);
        ev.residual = q.relative_residual();
        ev.n_used = q.n_index;
        ev.terms_used = q.terms_used;
        out.push_back(std::move(ev));
    }
    return out;
}

SpectrumResult lowest_eigenvalues(const OscillatorFamily& family, int count, const SpectrumPolicy& policy)
{
    if (count < 1) {
        throw InvalidArgument("count must be at least 1");
    }
    family.with_parity(Parity::even).validate();

    SpectrumResult result;
    result.e_min = policy.e_min.value_or(default_window_floor(family));
    if (policy.e_max) {
        result.e_max = *policy.e_max;
    } else {
        const double floor = potential_minimum(family.g, family.N);
        const int top = policy.parity ? 2 * (count - 1) + parity_index(*policy.parity) : count - 1;
        result.e_max = floor + 1.5 * (semiclassical_estimate(family, top) - floor) + 1.0;
    }
    if (!(result.e_min < result.e_max)) {
        throw InvalidArgument("energy window is empty");
    }

    std::vector<Eigenvalue> even, odd;
    double lo = result.e_min;
    double hi = result.e_max;
    for (int extension = 0;; ++extension) {
        for (Parity p : {Parity::even, Parity::odd}) {
            if (policy.parity && *policy.parity != p) {
                continue;
            }
            auto found = eigenvalues_in_window(family.with_parity(p), lo, hi, policy, &result.skipped_evaluations);
            auto& dest = p == Parity::even ? even : odd;
            dest.insert(dest.end(), found.begin(), found.end());
        }
        result.e_max = hi;
        if (static_cast<int>(even.size() + odd.size()) >= count || policy.e_max || extension >= policy.max_extensions) {
            break;
        }
        const double width = hi - lo;
        lo = hi;
        hi += width;
    }

    for (auto* list : {&even, &odd}) {
        for (std::size_t i = 0; i < list->size(); ++i) {
            (*list)[i].ordinal = static_cast<int>(i);
        }
    }
    auto& merged = result.eigenvalues;
    merged = even;
    merged.insert(merged.end(), odd.begin(), odd.end());
    std::sort(merged.begin(), merged.end(), [](const Eigenvalue& a, const Eigenvalue& b) { return a.energy < b.energy; });
    if (static_cast<int>(merged.size()) > count) {
        merged.resize(static_cast<std::size_t>(count));
    }
    for (std::size_t i = 0; i < merged.size(); ++i) {
        merged[i].index = static_cast<int>(i);
    }
    result.shortfall = static_cast<int>(merged.size()) < count;
    return result;
}

bool SweepResult::shortfall() const noexcept
{
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.shortfall; });
}

SweepResult reproduce_table(int N, std::vector<double> g_list, int levels, const SpectrumPolicy& policy)
{
    if (levels < 1) {
        throw InvalidArgument("levels must be at least 1");
    }
    std::sort(g_list.begin(), g_list.end());

    SweepResult out;
    out.N = N;
    out.levels = levels;
    out.policy = policy;
    out.rows.resize(g_list.size());

    SpectrumPolicy row_policy = policy;
    row_policy.threads = 1;
    std::vector<std::exception_ptr> failures(g_list.size());
    const auto work = [&](std::size_t i) {
        try {
            const SpectrumResult r = lowest_eigenvalues({g_list[i], N}, levels, row_policy);
            out.rows[i] = {g_list[i], r.eigenvalues, r.shortfall};
        } catch (...) {
            failures[i] = std::current_exception();
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(policy.threads, static_cast<unsigned>(g_list.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < g_list.size(); ++i) {
            work(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < g_list.size(); i = next++) {
                    work(i);
                }
            });
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return out;
}

} // namespace wspec
