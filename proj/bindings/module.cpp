// Python bindings for the main operations.  Integers cross the boundary
// as Python ints (via decimal strings), rationals as (num, den) pairs.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chebseq/bfile.hpp"
#include "chebseq/factorization.hpp"
#include "chebseq/identities.hpp"
#include "chebseq/modular.hpp"
#include "chebseq/search.hpp"
#include "chebseq/stats.hpp"
#include "chebseq/verify.hpp"

namespace py = pybind11;
using namespace chebseq;

namespace {

Integer to_mpz(const py::int_& v) {
    auto s = py::reinterpret_steal<py::str>(PyObject_Str(v.ptr()));
    if (!s) throw py::error_already_set();
    return Integer(s.cast<std::string>());
}

py::int_ to_py(const Integer& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::tuple to_py(const Rational& v) {
    return py::make_tuple(to_py(Integer(v.get_num())), to_py(Integer(v.get_den())));
}

SequenceKind to_kind(const std::string& name) { return kind_from_name(name); }

py::dict verdict_dict(const PrimalityVerdict& v) {
    py::dict d;
    d["status"] = status_name(v.status);
    d["is_prime"] = v.is_prime();
    d["rounds"] = v.rounds;
    if (v.witness) d["witness"] = to_py(*v.witness);
    return d;
}

py::dict cert_dict(const FactorizationCertificate& c) {
    py::dict d;
    d["n"] = to_py(c.n);
    d["kind"] = kind_name(c.kind);
    d["k"] = c.k;
    d["factor_a"] = to_py(c.factor_a);
    d["factor_b"] = to_py(c.factor_b);
    d["rule"] = factor_rule_name(c.rule);
    return d;
}

py::dict search_dict(const SearchResult& r) {
    py::dict d;
    d["n"] = to_py(r.n);
    d["kind"] = kind_name(r.kind);
    d["a"] = r.a ? py::object(py::int_(*r.a)) : py::object(py::none());
    d["first_prime"] = r.first_prime ? py::object(to_py(*r.first_prime)) : py::object(py::none());
    d["certification"] = certification_name(r.certification);
    return d;
}

}  // namespace

PYBIND11_MODULE(_chebseq, m) {
    m.doc() = "Exact Chebyshev-family sequences, factorizations, and prime searches";

    m.def(
        "term",
        [](const std::string& kind, const py::int_& n, long long k) {
            return to_py(term(to_kind(kind), to_mpz(n), k));
        },
        py::arg("kind"), py::arg("n"), py::arg("k"),
        "Exact term of the s/r/t/u sequence at any integer index");

    m.def(
        "terms",
        [](const std::string& kind, const py::int_& n, long long lo, long long hi) {
            py::list out;
            for (const auto& t : term_range(to_kind(kind), to_mpz(n), lo, hi)) out.append(to_py(t));
            return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("lo"), py::arg("hi"));

    m.def(
        "s_coefficients",
        [](long long k) {
            const auto poly = s_coefficients(k);
            py::list out;
            for (const auto& c : poly.coefficients()) out.append(to_py(c));
            return out;
        },
        py::arg("k"), "Coefficients of s_k as a polynomial in n, lowest degree first");

    m.def(
        "log_term",
        [](const std::string& kind, const py::int_& n, long long k) {
            return log_term(to_kind(kind), to_mpz(n), k);
        },
        py::arg("kind"), py::arg("n"), py::arg("k"));

    m.def(
        "is_probable_prime",
        [](const py::int_& q) { return verdict_dict(is_probable_prime(to_mpz(q))); },
        py::arg("q"));

    m.def(
        "detect_chebyshev",
        [](const py::int_& n) {
            py::list out;
            for (const auto& rep : detect_chebyshev(to_mpz(n)))
                out.append(py::make_tuple(rep.p, to_py(rep.j)));
            return out;
        },
        py::arg("n"), "All (p, j) with p prime, j >= 3 and T_p(j) = n");

    m.def(
        "prefactor",
        [](const py::int_& j, unsigned long p, long long k) {
            return to_py(prefactor_R(to_mpz(j), p, k));
        },
        py::arg("j"), py::arg("p"), py::arg("k"),
        "R_k(j) as an exact (numerator, denominator) pair");

    m.def(
        "factorize",
        [](const std::string& kind, const py::int_& n, long long k) {
            Integer nn = to_mpz(n);
            auto reps = detect_chebyshev(nn);
            py::list out;
            for (const auto& rep : reps) {
                if (to_kind(kind) == SequenceKind::S) {
                    out.append(cert_dict(factorize_s(rep, k)));
                } else if (rep.p != 2) {
                    out.append(cert_dict(factorize_r_odd(rep, k)));
                } else if (rep.j >= 6 && mpz_even_p(rep.j.get_mpz_t())) {
                    Integer half_sq = rep.j / 2 + 1;
                    if (mpz_perfect_square_p(half_sq.get_mpz_t())) {
                        Integer ell;
                        mpz_sqrt(ell.get_mpz_t(), half_sq.get_mpz_t());
                        out.append(cert_dict(factorize_r_even(ell, k)));
                    }
                }
            }
            return out;
        },
        py::arg("kind"), py::arg("n"), py::arg("k"));

    m.def(
        "compute_a",
        [](const py::int_& n, long long kmax) { return search_dict(compute_a(to_mpz(n), kmax)); },
        py::arg("n"), py::arg("kmax") = 1000, "Entry n of A269254");

    m.def(
        "compute_a_tilde",
        [](const py::int_& n, long long kmax) {
            return search_dict(compute_a_tilde(to_mpz(n), kmax));
        },
        py::arg("n"), py::arg("kmax") = 1000, "Entry n of A269252");

    m.def(
        "period_mod",
        [](const py::int_& n, unsigned long q) {
            auto info = period_mod(to_mpz(n), q);
            py::dict d;
            d["q"] = info.q;
            d["pi"] = info.pi;
            d["case"] = period_case_name(info.kase);
            d["zero_positions"] = info.zero_positions;
            return d;
        },
        py::arg("n"), py::arg("q"));

    m.def(
        "gcd_terms",
        [](const py::int_& n, long long j, long long k) {
            return to_py(gcd_terms(to_mpz(n), j, k));
        },
        py::arg("n"), py::arg("j"), py::arg("k"));

    m.def(
        "enumerate_prime_indices",
        [](const std::string& kind, const py::int_& n, long long kmax, unsigned jobs) {
            EnumerateOptions opts;
            opts.kmax = kmax;
            opts.jobs = jobs;
            auto list = enumerate_prime_indices(to_mpz(n), to_kind(kind), opts);
            py::dict d;
            d["indices"] = list.indices;
            d["complete"] = list.complete;
            d["used_certificate"] = list.used_certificate;
            return d;
        },
        py::arg("kind"), py::arg("n"), py::arg("kmax") = 1000, py::arg("jobs") = 1);

    m.def(
        "fit_slope",
        [](const std::string& kind, const py::int_& n, const std::vector<long long>& indices) {
            PrimeIndexList list;
            list.n = to_mpz(n);
            list.kind = to_kind(kind);
            list.indices = indices;
            auto fit = fit_C(loglog_points(list), list.n);
            py::dict d;
            d["C"] = fit.C;
            d["intercept"] = fit.intercept;
            d["lambda"] = fit.lambda.str(30);
            d["rho"] = fit.rho;
            d["predicted_C"] = fit.predicted_C;
            d["points"] = fit.points;
            return d;
        },
        py::arg("kind"), py::arg("n"), py::arg("indices"),
        "Least-squares slope of log log term over a prime-index list");

    m.def(
        "predicted_slope", [](const py::int_& n) { return predicted_slope(to_mpz(n)); },
        py::arg("n"));

    m.def(
        "verify_identities",
        [](int count, std::uint64_t seed) {
            VerifyOptions opts;
            opts.count = count;
            opts.seed = seed;
            py::dict d;
            for (const auto& s : run_identity_suite(opts)) d[s.identity.c_str()] = s.failures;
            return d;
        },
        py::arg("count") = 100, py::arg("seed") = 20240101,
        "Failure counts per identity over seeded random tuples");

    py::register_exception<IntegrityError>(m, "IntegrityError");
}
