#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "reference_tables.hpp"
#include "wspec/errors.hpp"
#include "wspec/roots.hpp"
#include "wspec/spectrum.hpp"

using namespace wspec;

TEST_CASE("scan_brackets on simple functions")
{
    const auto lin = scan_brackets([](double e) { return e - 1.0; }, 0.0, 2.0, 0.5);
    // 1.0 is itself a grid point: it is skipped as an exact zero and bracketed by its neighbours.
    REQUIRE(lin.brackets.size() == 1);
    CHECK(lin.brackets[0].lo <= 1.0);
    CHECK(lin.brackets[0].hi >= 1.0);

    const auto none = scan_brackets([](double e) { return e * e + 1.0; }, -1.0, 1.0, 0.1);
    CHECK(none.brackets.empty());

    CHECK_THROWS_AS((scan_brackets([](double e) { return e; }, 1.0, 0.0, 0.1)), InvalidArgument);
}

TEST_CASE("scan reports failures and gives up when most points fail")
{
    const auto flaky = [](double e) {
        if (e > 0.3 && e < 0.45) {
            throw NotConvergedError("synthetic", 0.0, 1);
        }
        return e - 0.8;
    };
    const auto scan = scan_brackets(flaky, 0.0, 1.0, 0.05);
    CHECK(scan.brackets.size() == 1);
    CHECK_FALSE(scan.skipped.empty());
    const auto broken = [](double e) -> double {
        if (e > 0.1) {
            throw NotConvergedError("synthetic", 0.0, 1);
        }
        return e;
    };
    CHECK_THROWS_AS(scan_brackets(broken, 0.0, 1.0, 0.05), ScanUnreliableError);
}

TEST_CASE("parallel scan is identical to the sequential one")
{
    const auto f = [](double e) { return std::sin(3.0 * e); };
    const auto a = scan_brackets(f, 0.0, 10.0, 0.01, 1);
    const auto b = scan_brackets(f, 0.0, 10.0, 0.01, 4);
    REQUIRE(a.brackets.size() == b.brackets.size());
    for (std::size_t i = 0; i < a.brackets.size(); ++i) {
        CHECK(a.brackets[i].lo == b.brackets[i].lo);
        CHECK(a.brackets[i].f_hi == b.brackets[i].f_hi);
    }
}

TEST_CASE("refine_root")
{
    const auto f = [](double e) { return e - 1.0; };
    const auto r = refine_root(f, {0.5, 1.5, f(0.5), f(1.5)}, 1e-12);
    CHECK(std::abs(r.x - 1.0) <= 1e-12);
    CHECK(r.evaluations <= 200);

    SUBCASE("never leaves the bracket")
    {
        const auto steep = [](double e) { return std::tanh(50.0 * (e - 0.999)); };
        const auto s = refine_root(steep, {0.2, 1.0, steep(0.2), steep(1.0)}, 1e-14);
        CHECK(s.x >= 0.2);
        CHECK(s.x <= 1.0);
    }
    SUBCASE("falls back to bisection around failures")
    {
        const auto holey = [](double e) {
            if (std::abs(e - 1.25) < 0.02) {
                throw NotConvergedError("synthetic", 0.0, 1);
            }
            return e - 1.1;
        };
        const auto h = refine_root(holey, {0.5, 1.5, -0.6, 0.4}, 1e-10);
        CHECK(h.x == doctest::Approx(1.1).epsilon(1e-9));
    }
    SUBCASE("persistent failure")
    {
        const auto dead = [](double) -> double { throw NotConvergedError("synthetic", 0.0, 1); };
        CHECK_THROWS_AS((refine_root(dead, {0.0, 1.0, -1.0, 1.0}, 1e-10)), RefineError);
    }
}

TEST_CASE("brackets of the quantization function")
{
    const OscillatorSpec spec{0.0, 4, Parity::even};
    const ScalarFunction f = [&](double e) { return quantization_function(spec, e); };
    const auto scan = scan_brackets(f, 0.0, 12.0, 0.25);
    REQUIRE(scan.brackets.size() == 2);
    CHECK(scan.brackets[0].lo < 1.22582011);
    CHECK(scan.brackets[0].hi > 1.22582011);
    CHECK(scan.brackets[1].lo < 10.24494698);
    CHECK(scan.brackets[1].hi > 10.24494698);

    SUBCASE("halving the step keeps every root")
    {
        const auto fine = scan_brackets(f, 0.0, 12.0, 0.125);
        REQUIRE(fine.brackets.size() >= scan.brackets.size());
        for (const auto& b : scan.brackets) {
            bool found = false;
            for (const auto& c : fine.brackets) {
                found = found || (c.lo >= b.lo && c.hi <= b.hi);
            }
            CHECK(found);
        }
    }
}

TEST_CASE("refining published levels")
{
    const auto refine_near = [](const OscillatorSpec& spec, double guess) {
        const ScalarFunction f = [&](double e) { return quantization_function(spec, e); };
        const double lo = guess - 0.1, hi = guess + 0.1;
        return refine_root(f, {lo, hi, f(lo), f(hi)}, 1e-10).x;
    };
    CHECK(std::abs(refine_near({-1.0, 6, Parity::odd}, 4.8) - 4.84470202) < 1e-7);
    CHECK(std::abs(refine_near({20.0, 7, Parity::odd}, 34.0) - 34.07417453) < 1e-7);
}

TEST_CASE("lowest_eigenvalues examples")
{
    SUBCASE("N=4, g=-20: near-degenerate pair resolved by parity")
    {
        const auto r = lowest_eigenvalues({-20.0, 4}, 4);
        REQUIRE(r.eigenvalues.size() == 4);
        CHECK_FALSE(r.shortfall);
        const Parity expect[] = {Parity::even, Parity::odd, Parity::even, Parity::odd};
        for (int l = 0; l < 4; ++l) {
            CHECK(r.eigenvalues[l].parity == expect[l]);
            CHECK(r.eigenvalues[l].index == l);
            // The printed row is off by up to 4.5e-5; these are the shooting-confirmed values.
            CHECK(std::abs(r.eigenvalues[l].energy - reference::verified_value(4, 0, l)) < 1e-7);
        }
    }
    SUBCASE("N=5, g=0, two levels")
    {
        const auto r = lowest_eigenvalues({0.0, 5}, 2);
        REQUIRE(r.eigenvalues.size() == 2);
        CHECK(std::abs(r.eigenvalues[0].energy - 1.29884370) < 1e-7);
        CHECK(std::abs(r.eigenvalues[1].energy - 5.09787653) < 1e-7);
    }
    SUBCASE("N=6, g=10, ground state")
    {
        const auto r = lowest_eigenvalues({10.0, 6}, 1);
        REQUIRE(r.eigenvalues.size() == 1);
        CHECK(r.eigenvalues[0].parity == Parity::even);
        CHECK(std::abs(r.eigenvalues[0].energy - 3.22441873) < 1e-7);
        CHECK(std::isfinite(r.eigenvalues[0].residual));
        CHECK(r.eigenvalues[0].bracket_width <= 1e-10);
    }
    SUBCASE("a fixed window too small gives a shortfall")
    {
        SpectrumPolicy p;
        p.e_max = 3.0;
        const auto r = lowest_eigenvalues({0.0, 4}, 3, p);
        CHECK(r.shortfall);
        CHECK(r.eigenvalues.size() == 1);
    }
    SUBCASE("one parity only")
    {
        SpectrumPolicy p;
        p.parity = Parity::odd;
        const auto r = lowest_eigenvalues({1.0, 4}, 2, p);
        REQUIRE(r.eigenvalues.size() == 2);
        CHECK(std::abs(r.eigenvalues[0].energy - 5.36877806) < 1e-7);
        CHECK(std::abs(r.eigenvalues[1].energy - 18.19110002) < 1e-7);
    }
}

TEST_CASE("increasing n by 8 moves no root by more than twice the tolerance")
{
    SpectrumPolicy base;
    SpectrumPolicy shifted;
    shifted.quantization.escalation.start_n = starting_n(5, {}) + 8;
    const auto a = lowest_eigenvalues({-1.0, 5}, 4, base);
    const auto b = lowest_eigenvalues({-1.0, 5}, 4, shifted);
    REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i) {
        CHECK(std::abs(a.eigenvalues[i].energy - b.eigenvalues[i].energy) <= 2 * base.energy_tolerance);
    }
}

TEST_CASE("reproduce_table")
{
    SUBCASE("N=7, g=-10: the entry printed with seven decimals")
    {
        const auto t = reproduce_table(7, {-10.0}, 1);
        REQUIRE(t.rows.size() == 1);
        // Printed as -1.8474624; the dropped digit puts the print 5.6e-5 away.
        CHECK(std::abs(t.rows[0].eigenvalues[0].energy - reference::verified_value(7, 1, 0)) < 1e-7);
    }
    SUBCASE("rows come back sorted and ordered, in parallel too")
    {
        SpectrumPolicy p;
        p.threads = 3;
        const auto t = reproduce_table(5, {1.0, -1.0, 0.0}, 2, p);
        REQUIRE(t.rows.size() == 3);
        CHECK(t.rows[0].g == -1.0);
        CHECK(t.rows[2].g == 1.0);
        for (const auto& row : t.rows) {
            CHECK(row.eigenvalues[0].energy < row.eigenvalues[1].energy);
            CHECK(row.eigenvalues[0].parity == Parity::even);
            CHECK(row.eigenvalues[1].parity == Parity::odd);
        }
        const auto seq = reproduce_table(5, {1.0, -1.0, 0.0}, 2);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(seq.rows[i].eigenvalues[1].energy == t.rows[i].eigenvalues[1].energy);
        }
    }
    CHECK_THROWS_AS((reproduce_table(4, {0.0}, 0)), InvalidArgument);
}
