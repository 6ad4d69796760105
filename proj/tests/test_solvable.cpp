#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wspec/errors.hpp"
#include "wspec/solvable.hpp"

using namespace wspec;
using namespace wspec::solvable;

namespace {

// Size of the u_reg u1' and u_reg' u1 products at y = 1/2, for relative bounds.
double pt_scale(const PoschlTellerSpec& spec, double k2)
{
    return std::abs(pt_wronskian(spec, k2 + 0.5)) + std::abs(pt_wronskian(spec, k2 - 0.5));
}

} // namespace

TEST_CASE("Poschl-Teller Wronskian vanishes at the closed-form levels")
{
    const PoschlTellerSpec spec{2.0, 3.0};
    CHECK(std::abs(pt_wronskian(spec, 25.0)) <= 1e-10 * pt_scale(spec, 25.0));
    CHECK(std::abs(pt_wronskian(spec, 49.0)) <= 1e-10 * pt_scale(spec, 49.0));
    CHECK(std::abs(pt_wronskian(spec, 20.0)) > 1e-4 * pt_scale(spec, 20.0));
}

TEST_CASE("Poschl-Teller levels")
{
    CHECK(pt_exact_levels({2.0, 3.0}, 3) == std::vector<double>{25.0, 49.0, 81.0});
    CHECK(pt_exact_levels({1.5, 1.5}, 1) == std::vector<double>{9.0});
    const auto l = pt_exact_levels({2.2, 3.8}, 2);
    CHECK(l[0] == doctest::Approx(36.0));
    CHECK(l[1] == doctest::Approx(64.0));
    CHECK_THROWS_AS((pt_exact_levels({2.0, 3.0}, 0)), InvalidArgument);
    CHECK_THROWS_AS((pt_wronskian({0.5, 3.0}, 10.0)), InvalidArgument);

    const auto located = pt_located_levels({2.2, 3.8}, 3);
    REQUIRE(located.size() == 3);
    CHECK(located[2] == doctest::Approx(100.0).epsilon(1e-10));
}

TEST_CASE("Poschl-Teller Abel identity and symmetry")
{
    for (double k2 : {12.0, 20.0, 40.5}) {
        const PoschlTellerSpec spec{2.2, 3.8};
        const double w5 = pt_wronskian(spec, k2, 0.5) * 0.5;
        for (double y : {0.4, 0.6}) {
            CHECK(pt_wronskian(spec, k2, y) * std::sqrt(y * (1 - y)) == doctest::Approx(w5).epsilon(1e-9));
        }
    }
    const auto a = pt_located_levels({2.0, 3.5}, 3);
    const auto b = pt_located_levels({3.5, 2.0}, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-11));
    }
}

TEST_CASE("modified Poschl-Teller")
{
    const ModifiedPTSpec even{3.5, 0.0}, odd{3.5, 0.5};
    const double scale = std::abs(mpt_wronskian(even, 1.7));
    CHECK(std::abs(mpt_wronskian(even, 2.5)) <= 1e-10 * scale);
    CHECK(std::abs(mpt_wronskian(odd, 1.5)) <= 1e-10 * std::abs(mpt_wronskian(odd, 1.7)));
    CHECK(scale > 1e-3);
    CHECK(mpt_exact_levels(even) == std::vector<double>{0.5, 2.5});
    CHECK(mpt_exact_levels(odd) == std::vector<double>{1.5});
    CHECK(mpt_exact_levels({1.5, 0.5}).empty());
    CHECK_THROWS_AS((mpt_wronskian({3.5, 0.25}, 1.0)), InvalidArgument);
    CHECK_THROWS_AS(mpt_wronskian(even, -1.0), InvalidArgument);

    for (double y : {0.4, 0.6}) {
        CHECK(mpt_wronskian(even, 1.7, y) * y * std::sqrt(1 - y) ==
              doctest::Approx(mpt_wronskian(even, 1.7, 0.5) * 0.5 * std::sqrt(0.5)).epsilon(1e-9));
    }
}

TEST_CASE("Morse series against the closed form")
{
    const MorseSpec spec{0.3, 5.5};
    CHECK(morse_u_reg(spec, 1.0, 0.0).value == 0.0);
    for (double s : {0.7, 2.0, 5.0}) {
        for (double y : {1.0, 5.0, spec.y0() / 2}) {
            const double closed = static_cast<double>(boost::multiprecision::pow(oracle::hp(y), oracle::hp(s)) *
                                                      boost::multiprecision::exp(-oracle::hp(y) / 2) *
                                                      oracle::hyp1f1(0.5 + s - 5.5, 1 + 2 * s, y));
            const double direct = static_cast<double>(oracle::morse_direct(5.5, s, y));
            const double got = morse_u_reg(spec, s, y).value;
            CHECK(got == doctest::Approx(closed).epsilon(1e-10));
            CHECK(direct == doctest::Approx(closed).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(morse_u_reg(spec, -1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(morse_u_reg(spec, 1.0, -1.0), InvalidArgument);
}

TEST_CASE("Morse series recurrence coefficients")
{
    const MorseSpec spec{0.3, 5.5};
    const auto a = morse_series_coeffs(spec, 1.25, 30);
    CHECK(a[0] == 1.0);
    CHECK(a[1] == doctest::Approx(-5.5 / 3.5));
    // Cauchy product of exp(-y/2) with the 1F1 coefficients reproduces a_n.
    const double A = 0.5 + 1.25 - 5.5, B = 1 + 2.5;
    std::vector<double> f(30);
    f[0] = 1.0;
    for (int n = 1; n < 30; ++n) {
        f[n] = f[n - 1] * (A + n - 1) / (B + n - 1) / n;
    }
    for (int n = 0; n < 30; ++n) {
        double sum = 0.0, e = 1.0;
        for (int j = 0; j <= n; ++j) {
            if (j > 0) {
                e *= -0.5 / j;
            }
            sum += e * f[n - j];
        }
        CHECK(sum == doctest::Approx(a[n]).epsilon(1e-10).scale(1e-30));
    }
}

TEST_CASE("Morse quantization")
{
    const MorseSpec spec{0.3, 5.5};
    const auto zeros = morse_located_levels(spec);
    CHECK(zeros.size() == morse_reference_levels(spec).size());
    REQUIRE_FALSE(zeros.empty());
    const double top = zeros.back();
    CHECK(std::abs(top - oracle::morse_zero(0.3, 5.5, 4.5, 5.0)) < 1e-6);
    CHECK(std::abs(morse_quantization(spec, 5.25)) > 1e-6);

    CHECK(morse_reference_levels(spec) == std::vector<double>{1.0, 2.0, 3.0, 4.0, 5.0});
    CHECK(morse_reference_levels({1.0, 0.4}).empty());
    CHECK(morse_reference_levels({1.0, 1.5}) == std::vector<double>{1.0});
    CHECK(MorseSpec{0.3, 5.5}.y0() == doctest::Approx(11.0 * std::exp(0.3)));
}

TEST_CASE("Morse precision-loss diagnostic")
{
    // Deep in the classically forbidden region the 1F1 sum cancels down to nothing.
    const MorseSpec spec{0.3, 200.0};
    CHECK_THROWS_AS(morse_u_reg(spec, 0.01, 300.0), PrecisionLossError);
    const auto ok = morse_u_reg({0.3, 5.5}, 2.0, 5.0);
    CHECK(ok.cancellation >= 1.0);
    CHECK(ok.terms > 0);
}
