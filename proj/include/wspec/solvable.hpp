#pragma once

#include <variant>
#include <vector>

namespace wspec::solvable {

/// Poschl-Teller well on [0, pi/(2 alpha)]; spectral variable k^2/alpha^2.
struct PoschlTellerSpec {
    double kappa = 2.0;
    double lambda = 3.0;

    void validate() const;
};

/// Modified Poschl-Teller well; spectral variable kappa/alpha > 0.
/// parity_mu = 0 selects even states, 1/2 odd ones.
struct ModifiedPTSpec {
    double lambda = 3.5;
    double parity_mu = 0.0;

    void validate() const;
};

/// Morse potential for l = 0; spectral variable beta/alpha > 0.
struct MorseSpec {
    double alpha = 0.3;
    double gamma_over_alpha = 5.5;

    /// (2 gamma/alpha) e^alpha, the image of r = 0.
    double y0() const;
    void validate() const;
};

using SolvableModelSpec = std::variant<PoschlTellerSpec, ModifiedPTSpec, MorseSpec>;

/// W[u_reg, u1] at y, u_reg regular at y = 0 and u1 at y = 1, with a_0 = b_0 = 1.
/// At y = 1/2 this is the closed product-of-sums expression.
double pt_wronskian(const PoschlTellerSpec& spec, double k2_over_alpha2, double y = 0.5);

/// (kappa + lambda + 2n)^2 for n = 0..count-1.
std::vector<double> pt_exact_levels(const PoschlTellerSpec& spec, int count);

double mpt_wronskian(const ModifiedPTSpec& spec, double kappa_over_alpha, double y = 0.5);

/// Positive lambda - 1 - 2n (even) or lambda - 2 - 2n (odd), ascending.
std::vector<double> mpt_exact_levels(const ModifiedPTSpec& spec);

struct MorseValue {
    double value = 0.0;
    /// max |partial sum| / |final sum| of the inner power series.
    double cancellation = 0.0;
    int terms = 0;
};

/// Regular Morse solution y^{beta/alpha} sum a_n y^n with a_0 = 1, evaluated
/// as y^{beta/alpha} exp(-y/2) 1F1. Throws PrecisionLossError when the 1F1
/// sum's largest partial exceeds 1e12 times max(|sum|, 1).
MorseValue morse_u_reg(const MorseSpec& spec, double beta_over_alpha, double y);

/// u_reg(y0); its zeros in beta/alpha are the bound states.
/// a_0..a_{count-1} from n(n + 2 beta/alpha) a_n = -(gamma/alpha) a_{n-1} + a_{n-2}/4.
std::vector<double> morse_series_coeffs(const MorseSpec& spec, double beta_over_alpha, int count);

double morse_quantization(const MorseSpec& spec, double beta_over_alpha);

/// Positive gamma/alpha - n - 1/2, ascending: where 1F1 terminates. These
/// are reference values, not exact roots at finite y0.
std::vector<double> morse_reference_levels(const MorseSpec& spec);

/// Zeros of pt_wronskian in k^2/alpha^2, the lowest `count`.
std::vector<double> pt_located_levels(const PoschlTellerSpec& spec, int count);

/// Zeros of mpt_wronskian in kappa/alpha over (0, lambda), ascending.
std::vector<double> mpt_located_levels(const ModifiedPTSpec& spec);

/// Zeros of morse_quantization in beta/alpha over (0, gamma/alpha), ascending.
std::vector<double> morse_located_levels(const MorseSpec& spec);

} // namespace wspec::solvable
