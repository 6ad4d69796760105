#pragma once

#include <vector>

namespace wspec::numerov {

/// V(x) = sum_j c_j x^{2j}. Shares nothing with the series machinery.
struct EvenPolynomialPotential {
    std::vector<double> coefficients;

    double operator()(double x) const;
    /// Minimum over x >= 0, located numerically.
    double minimum() const;

    static EvenPolynomialPotential anharmonic(double g, int N);
    static EvenPolynomialPotential harmonic();
};

/// Uniform grid on [0, x_max] with spacing x_max / steps.
struct GridSpec {
    double x_max = 6.0;
    int steps = 3000;

    double spacing() const noexcept { return x_max / steps; }
    void validate() const;
};

struct ShootingResult {
    double energy = 0.0;
    /// Nodes of the outward solution in (0, matching point]: the nodes of
    /// the stitched wavefunction.
    int node_count = 0;
    /// Sign changes over the whole outward sweep, including a divergent
    /// tail; equals the number of states below `energy`.
    int sign_changes = 0;
    /// u'/u of the outward solution minus that of the inward one at the matching point.
    double log_derivative_mismatch = 0.0;
    double matching_point = 0.0;
    /// Where the integration actually stopped (<= x_max, see numerov_integrate).
    double x_end = 0.0;
};

/// Shoots -u'' + V u = E u from the origin with the given parity (0: u(0)=1,
/// u'(0)=0; 1: u(0)=0, u'(0)=1) and from the far end with a decaying seed,
/// matching at the outermost classical turning point.
///
/// The far end is x_max, pulled in to the point where the WKB decay exponent
/// from the turning point reaches 40, since beyond that the discrete
/// recursion is unstable for steep potentials. Throws GridError when the
/// turning point lies beyond 0.8 x_max or the step is too coarse.
ShootingResult numerov_integrate(const EvenPolynomialPotential& potential, double energy, const GridSpec& grid, int parity);

/// The state with `ordinal` nodes in the given parity sector, to 1e-11
/// absolute on this grid. The grid is extended automatically when the
/// turning point comes within 0.8 x_max. Throws WindowError if no such
/// state is found below a generous energy bound.
double oracle_eigenvalue(const EvenPolynomialPotential& potential, int ordinal, int parity, const GridSpec& grid);

struct ExtrapolatedEigenvalue {
    double coarse = 0.0;
    double fine = 0.0;
    /// (16 fine - coarse) / 15, eliminating the h^4 error term.
    double extrapolated = 0.0;
};

/// oracle_eigenvalue on `grid` and on the grid with half the spacing.
ExtrapolatedEigenvalue richardson_eigenvalue(const EvenPolynomialPotential& potential, int ordinal, int parity,
                                             const GridSpec& grid);

} // namespace wspec::numerov
