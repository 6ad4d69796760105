#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wspec/errors.hpp"
#include "wspec/numerov.hpp"
#include "wspec/quantization.hpp"
#include "wspec/solvable.hpp"
#include "wspec/spectrum.hpp"

namespace py = pybind11;
using namespace wspec;

namespace {

Parity parse_parity(const std::string& s)
{
    if (s == "even") {
        return Parity::even;
    }
    if (s == "odd") {
        return Parity::odd;
    }
    throw InvalidArgument("parity must be 'even' or 'odd'");
}

py::dict eigenvalue_dict(const Eigenvalue& e)
{
    py::dict d;
    d["index"] = e.index;
    d["ordinal"] = e.ordinal;
    d["parity"] = parity_name(e.parity);
    d["energy"] = e.energy;
    d["residual"] = e.residual;
    d["n_used"] = e.n_used;
    d["terms_used"] = e.terms_used;
    return d;
}

SpectrumPolicy make_policy(std::optional<std::string> parity, unsigned threads)
{
    SpectrumPolicy p;
    if (parity) {
        p.parity = parse_parity(*parity);
    }
    p.threads = std::max(1u, threads);
    return p;
}

} // namespace

PYBIND11_MODULE(_wspec, m)
{
    m.doc() = "Eigenvalues of g x^2 + x^(2N) from a convergent Wronskian series";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
    py::register_exception<NotConvergedError>(m, "NotConvergedError", base.ptr());
    py::register_exception<PrecisionLossError>(m, "PrecisionLossError", base.ptr());

    m.def(
        "eigenvalues",
        [](double g, int N, int count, std::optional<std::string> parity, unsigned threads) {
            py::list out;
            SpectrumResult r;
            {
                py::gil_scoped_release release;
                r = lowest_eigenvalues({g, N}, count, make_policy(parity, threads));
            }
            for (const auto& e : r.eigenvalues) {
                out.append(eigenvalue_dict(e));
            }
            return out;
        },
        py::arg("g"), py::arg("N"), py::arg("count") = 4, py::arg("parity") = py::none(), py::arg("threads") = 1,
        "Lowest `count` levels, merged over parities unless one is given.");

    m.def(
        "table",
        [](int N, std::vector<double> g, int levels, unsigned threads) {
            SweepResult r;
            {
                py::gil_scoped_release release;
                r = reproduce_table(N, std::move(g), levels, make_policy(std::nullopt, threads));
            }
            py::list rows;
            for (const auto& row : r.rows) {
                py::list energies;
                for (const auto& e : row.eigenvalues) {
                    energies.append(e.energy);
                }
                rows.append(py::make_tuple(row.g, energies));
            }
            return rows;
        },
        py::arg("N"), py::arg("g") = reference_couplings(), py::arg("levels") = 4, py::arg("threads") = 1,
        "(g, [E0, E1, ...]) rows sorted by g.");

    m.def(
        "quantization_function",
        [](double g, int N, const std::string& parity, double energy) {
            return quantization_function({g, N, parse_parity(parity)}, energy);
        },
        py::arg("g"), py::arg("N"), py::arg("parity"), py::arg("energy"),
        "The n-independent Wronskian W(E); its zeros are the eigenvalues.");

    m.def(
        "numerov_eigenvalue",
        [](double g, int N, int ordinal, const std::string& parity, double x_max, int steps) {
            const auto v = numerov::EvenPolynomialPotential::anharmonic(g, N);
            return numerov::richardson_eigenvalue(v, ordinal, parity_index(parse_parity(parity)), {x_max, steps})
                .extrapolated;
        },
        py::arg("g"), py::arg("N"), py::arg("ordinal"), py::arg("parity"), py::arg("x_max") = 6.0,
        py::arg("steps") = 3000, "Richardson-extrapolated shooting eigenvalue.");

    m.def(
        "pt_wronskian",
        [](double kappa, double lambda, double k2, double y) {
            return solvable::pt_wronskian({kappa, lambda}, k2, y);
        },
        py::arg("kappa"), py::arg("lambda_"), py::arg("k2"), py::arg("y") = 0.5);
    m.def(
        "pt_levels", [](double kappa, double lambda, int count) { return solvable::pt_located_levels({kappa, lambda}, count); },
        py::arg("kappa"), py::arg("lambda_"), py::arg("count") = 3);
    m.def(
        "mpt_wronskian",
        [](double lambda, double mu, double kappa, double y) { return solvable::mpt_wronskian({lambda, mu}, kappa, y); },
        py::arg("lambda_"), py::arg("parity_mu"), py::arg("kappa"), py::arg("y") = 0.5);
    m.def(
        "mpt_levels", [](double lambda, double mu) { return solvable::mpt_located_levels({lambda, mu}); },
        py::arg("lambda_"), py::arg("parity_mu"));
    m.def(
        "morse_u_reg",
        [](double alpha, double gamma, double beta, double y) {
            return solvable::morse_u_reg({alpha, gamma}, beta, y).value;
        },
        py::arg("alpha"), py::arg("gamma_over_alpha"), py::arg("beta_over_alpha"), py::arg("y"));
    m.def(
        "morse_levels", [](double alpha, double gamma) { return solvable::morse_located_levels({alpha, gamma}); },
        py::arg("alpha"), py::arg("gamma_over_alpha"));
}
