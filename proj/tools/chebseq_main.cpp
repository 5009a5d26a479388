// chebseq: exact computation and verification for the s/r recurrence
// families, their Chebyshev-value factorizations, and the prime-appearance
// statistics.  Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chebseq/bfile.hpp"
#include "chebseq/factorization.hpp"
#include "chebseq/identities.hpp"
#include "chebseq/modular.hpp"
#include "chebseq/search.hpp"
#include "chebseq/stats.hpp"
#include "chebseq/svg.hpp"
#include "chebseq/verify.hpp"

using json = nlohmann::ordered_json;
using namespace chebseq;

namespace {

#ifndef CHEBSEQ_DATA_DIR
#define CHEBSEQ_DATA_DIR "data"
#endif

std::string fixture_dir() {
    if (const char* env = std::getenv("CHEBSEQ_FIXTURES")) return env;
    return CHEBSEQ_DATA_DIR;
}

// Reals print with 12 significant digits; Integers as exact decimal strings.
std::string real12(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

json cert_json(const FactorizationCertificate& c) {
    return json{{"n", c.n.get_str()},
                {"kind", kind_name(c.kind)},
                {"k", c.k},
                {"factor_a", c.factor_a.get_str()},
                {"factor_b", c.factor_b.get_str()},
                {"rule", factor_rule_name(c.rule)}};
}

json verdict_json(const PrimalityVerdict& v) {
    json out{{"status", status_name(v.status)}, {"rounds", v.rounds}};
    if (v.witness) out["witness"] = v.witness->get_str();
    return out;
}

json search_json(const SearchResult& r) {
    json out;
    out["n"] = r.n.get_str();
    out["kind"] = kind_name(r.kind);
    if (r.a) out["a"] = *r.a;
    else out["a"] = nullptr;
    if (r.first_prime) out["first_prime"] = r.first_prime->get_str();
    else if (r.a && *r.a == -1) out["first_prime"] = -1;
    else out["first_prime"] = nullptr;
    out["certification"] = certification_name(r.certification);
    out["kmax"] = r.kmax;
    if (r.certificate) {
        json c;
        c["rule"] = factor_rule_name(r.certificate->rule);
        if (r.certificate->candidate_index) c["candidate_index"] = *r.certificate->candidate_index;
        if (r.certificate->candidate_verdict)
            c["candidate_verdict"] = verdict_json(*r.certificate->candidate_verdict);
        if (!r.certificate->samples.empty()) {
            c["samples"] = json::array();
            for (const auto& s : r.certificate->samples) c["samples"].push_back(cert_json(s));
        }
        out["certificate"] = c;
    }
    return out;
}

struct Range {
    long long lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoll(text);
    } else {
        r.lo = std::stoll(text.substr(0, dots));
        r.hi = std::stoll(text.substr(dots + 2));
    }
    if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range: " + text);
    return r;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"Chebyshev-family sequences s_k(n), r_k(n): exact terms, identity\n"
                 "verification, Chebyshev-value factorization, prime search, and\n"
                 "prime-appearance statistics."};
    app.require_subcommand(1);
    app.fallthrough();  // lets --format appear after the subcommand
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    // ---- seq ----
    auto* seq = app.add_subcommand("seq", "Print terms of a sequence");
    std::string seq_kind = "s", seq_range = "0..10";
    std::string seq_n;
    seq->add_option("--kind", seq_kind, "s, r, t, or u")->check(CLI::IsMember({"s", "r", "t", "u"}));
    seq->add_option("--n", seq_n, "Sequence parameter n")->required();
    seq->add_option("--k", seq_range, "Index k or range lo..hi");

    // ---- detect ----
    auto* detect = app.add_subcommand("detect", "List representations n = T_p(j), j >= 3");
    std::string detect_n;
    detect->add_option("n", detect_n, "Value to test")->required();

    // ---- factor ----
    auto* factor = app.add_subcommand("factor", "Factorization certificate for one term");
    std::string factor_kind = "s", factor_n;
    long long factor_k = 1;
    factor->add_option("--kind", factor_kind)->check(CLI::IsMember({"s", "r"}));
    factor->add_option("--n", factor_n)->required();
    factor->add_option("--k", factor_k)->required();

    // ---- certify ----
    auto* certify = app.add_subcommand("certify", "Theorem-backed prime/no-prime certificate");
    std::string certify_n, certify_kind = "s";
    certify->add_option("n", certify_n)->required();
    certify->add_option("--kind", certify_kind)->check(CLI::IsMember({"s", "r"}));

    // ---- search-a ----
    auto* search = app.add_subcommand("search-a", "First prime index (A269254 / A269252)");
    std::string search_n, search_kind = "s";
    long long search_kmax = 1000;
    bool search_no_theorems = false;
    search->add_option("--n", search_n, "Value n or range lo..hi")->required();
    search->add_option("--kind", search_kind)->check(CLI::IsMember({"s", "r"}));
    search->add_option("--kmax", search_kmax, "Brute-force index bound");
    search->add_flag("--no-theorems", search_no_theorems, "Disable Chebyshev shortcuts");

    // ---- primes ----
    auto* primes = app.add_subcommand("primes", "Enumerate prime-term indices");
    std::string primes_n, primes_kind = "s";
    EnumerateOptions primes_opts;
    primes->add_option("--n", primes_n)->required();
    primes->add_option("--kind", primes_kind)->check(CLI::IsMember({"s", "r"}));
    primes->add_option("--kmax", primes_opts.kmax);
    primes->add_option("--budget", primes_opts.budget_seconds, "Time budget in seconds");
    primes->add_option("--resume-from", primes_opts.resume_from, "Skip candidates <= this index");
    primes->add_option("--jobs", primes_opts.jobs, "Concurrent primality tests");

    // ---- stats ----
    auto* stats = app.add_subcommand("stats", "Log-log growth fit of prime terms");
    std::string stats_n, stats_kind = "s", stats_fixture, stats_csv, stats_svg, stats_json_path;
    EnumerateOptions stats_opts;
    stats->add_option("--n", stats_n)->required();
    stats->add_option("--kind", stats_kind)->check(CLI::IsMember({"s", "r"}));
    stats->add_option("--fixtures", stats_fixture,
                      "Index b-file to fit instead of enumerating (path)");
    stats->add_option("--kmax", stats_opts.kmax);
    stats->add_option("--budget", stats_opts.budget_seconds);
    stats->add_option("--jobs", stats_opts.jobs);
    stats->add_option("--csv", stats_csv, "Write (N, k_N, digits, loglog) rows here");
    stats->add_option("--svg", stats_svg, "Write the scatter+fit plot here");
    stats->add_option("--json", stats_json_path, "Write the fit report here (default stdout)");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Run the identity suite on random tuples");
    VerifyOptions verify_opts;
    std::string verify_identity;
    bool verify_all = false;
    verify->add_flag("--all", verify_all, "Run every identity");
    verify->add_option("--identity", verify_identity, "Run a single identity by name");
    verify->add_option("--count", verify_opts.count, "Tuples per identity");
    verify->add_option("--n-max", verify_opts.n_max);
    verify->add_option("--k-max", verify_opts.k_max);
    verify->add_option("--seed", verify_opts.seed);
    verify->add_option("--jobs", verify_opts.jobs);

    // ---- periods ----
    auto* periods = app.add_subcommand("periods", "Period of s_k(n) modulo primes");
    std::string periods_n;
    unsigned long periods_q = 0;
    unsigned long periods_qmax = 0;
    periods->add_option("--n", periods_n)->required();
    periods->add_option("--q", periods_q, "Single prime modulus");
    periods->add_option("--q-max", periods_qmax, "All primes up to this bound");

    // ---- primitive-divisors ----
    auto* prim = app.add_subcommand("primitive-divisors", "Primitive prime divisors of s_k(n)");
    std::string prim_n;
    long long prim_k = 1;
    unsigned long prim_bound = 100000;
    prim->add_option("--n", prim_n)->required();
    prim->add_option("--k", prim_k)->required();
    prim->add_option("--trial-bound", prim_bound);

    // ---- bfile-check ----
    auto* bcheck = app.add_subcommand("bfile-check", "Cross-check generated terms against a b-file");
    std::string bcheck_file, bcheck_kind = "s", bcheck_n;
    long long bcheck_shift = 0;
    bcheck->add_option("--file", bcheck_file, "b-file path (relative paths try the fixture dir)")
        ->required();
    bcheck->add_option("--kind", bcheck_kind)->check(CLI::IsMember({"s", "r", "t", "u"}));
    bcheck->add_option("--n", bcheck_n)->required();
    bcheck->add_option("--index-shift", bcheck_shift, "k = file index + shift");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help or the usage problem
        return code == 0 ? 0 : 2;
    }

    if (*seq) {
        Integer n(seq_n);
        Range r = parse_range(seq_range);
        SequenceKind kind = kind_from_name(seq_kind);
        auto terms = term_range(kind, n, r.lo, r.hi);
        if (format == "json") {
            json arr = json::array();
            for (long long k = r.lo; k <= r.hi; ++k)
                arr.push_back({{"k", k}, {"value", terms[static_cast<std::size_t>(k - r.lo)].get_str()}});
            emit(std::cout, arr);
        } else if (format == "csv") {
            std::cout << "k,value\n";
            for (long long k = r.lo; k <= r.hi; ++k)
                std::cout << k << "," << terms[static_cast<std::size_t>(k - r.lo)].get_str() << "\n";
        } else {
            for (long long k = r.lo; k <= r.hi; ++k)
                std::cout << terms[static_cast<std::size_t>(k - r.lo)].get_str() << "\n";
        }
        return 0;
    }

    if (*detect) {
        json arr = json::array();
        for (const auto& rep : detect_chebyshev(Integer(detect_n)))
            arr.push_back({{"p", rep.p}, {"j", rep.j.get_str()}});
        emit(std::cout, arr);
        return 0;
    }

    if (*factor) {
        Integer n(factor_n);
        auto reps = detect_chebyshev(n);
        json arr = json::array();
        bool any = false;
        for (const auto& rep : reps) {
            if (kind_from_name(factor_kind) == SequenceKind::S) {
                arr.push_back(cert_json(factorize_s(rep, factor_k)));
                any = true;
            } else if (rep.p != 2) {
                arr.push_back(cert_json(factorize_r_odd(rep, factor_k)));
                any = true;
            } else if (rep.j >= 6 && mpz_even_p(rep.j.get_mpz_t())) {
                Integer half_sq = rep.j / 2 + 1;
                if (mpz_perfect_square_p(half_sq.get_mpz_t())) {
                    Integer ell;
                    mpz_sqrt(ell.get_mpz_t(), half_sq.get_mpz_t());
                    arr.push_back(cert_json(factorize_r_even(ell, factor_k)));
                    any = true;
                }
            }
        }
        if (!any) {
            std::cerr << "no factorization certificate applies to n = " << factor_n << "\n";
            return 1;
        }
        emit(std::cout, arr);
        return 0;
    }

    if (*certify) {
        auto cert = composite_certificate(Integer(certify_n), kind_from_name(certify_kind));
        if (!cert) {
            emit(std::cout, json{{"n", certify_n}, {"kind", certify_kind}, {"certificate", nullptr}});
            return 0;
        }
        json out{{"n", certify_n},
                 {"kind", certify_kind},
                 {"rule", factor_rule_name(cert->rule)},
                 {"a", cert->a}};
        if (cert->candidate_index) out["candidate_index"] = *cert->candidate_index;
        if (cert->candidate_verdict) out["candidate_verdict"] = verdict_json(*cert->candidate_verdict);
        if (cert->conflicting_candidates) out["conflicting_candidates"] = true;
        if (!cert->samples.empty()) {
            out["samples"] = json::array();
            for (const auto& s : cert->samples) out["samples"].push_back(cert_json(s));
        }
        emit(std::cout, out);
        return 0;
    }

    if (*search) {
        SequenceKind kind = kind_from_name(search_kind);
        auto one = [&](const Integer& n) {
            return kind == SequenceKind::S ? compute_a(n, search_kmax, !search_no_theorems)
                                           : compute_a_tilde(n, search_kmax, !search_no_theorems);
        };
        if (search_n.find("..") == std::string::npos) {
            // single value; may exceed machine range
            auto res = one(Integer(search_n));
            if (format == "csv") {
                std::cout << "n,a,first_prime,certification\n"
                          << search_n << "," << (res.a ? std::to_string(*res.a) : "") << ",";
                if (res.first_prime) std::cout << res.first_prime->get_str();
                else if (res.a && *res.a == -1) std::cout << -1;
                std::cout << "," << certification_name(res.certification) << "\n";
            } else {
                emit(std::cout, search_json(res));
            }
            return 0;
        }
        Range r = parse_range(search_n);
        if (format == "json") {
            json arr = json::array();
            for (long long n = r.lo; n <= r.hi; ++n)
                arr.push_back(search_json(one(to_integer(n))));
            emit(std::cout, arr);
        } else {
            std::cout << "n,a,first_prime,certification\n";
            for (long long n = r.lo; n <= r.hi; ++n) {
                auto res = one(to_integer(n));
                std::cout << n << "," << (res.a ? std::to_string(*res.a) : "") << ",";
                if (res.first_prime) std::cout << res.first_prime->get_str();
                else if (res.a && *res.a == -1) std::cout << -1;
                std::cout << "," << certification_name(res.certification) << "\n";
            }
        }
        return 0;
    }

    if (*primes) {
        auto list = enumerate_prime_indices(Integer(primes_n), kind_from_name(primes_kind),
                                            primes_opts);
        json out{{"n", primes_n},
                 {"kind", primes_kind},
                 {"kmax", primes_opts.kmax},
                 {"complete", list.complete},
                 {"resume_k", list.complete_through},
                 {"used_certificate", list.used_certificate}};
        out["indices"] = list.indices;
        out["verdicts"] = json::array();
        for (const auto& v : list.verdicts) out["verdicts"].push_back(verdict_json(v));
        emit(std::cout, out);
        return 0;
    }

    if (*stats) {
        Integer n(stats_n);
        SequenceKind kind = kind_from_name(stats_kind);
        PrimeIndexList list;
        if (!stats_fixture.empty()) {
            std::string path = stats_fixture;
            std::ifstream probe(path);
            if (!probe) path = fixture_dir() + "/" + stats_fixture;
            BFile b = load_bfile(path);
            list.n = n;
            list.kind = kind;
            for (const auto& [unused, value] : b.entries) list.indices.push_back(value.get_si());
        } else {
            list = enumerate_prime_indices(n, kind, stats_opts);
        }
        auto points = loglog_points(list);
        auto fit = fit_C(points, n);
        if (!stats_csv.empty()) {
            std::ofstream csv(stats_csv);
            csv << "N,k,digits,loglog\n";
            for (const auto& p : points) {
                Integer t = term(kind, n, p.k);
                csv << p.N << "," << p.k << "," << mpz_sizeinbase(t.get_mpz_t(), 10) << ","
                    << real12(p.loglog) << "\n";
            }
        }
        if (!stats_svg.empty()) {
            std::ofstream svg(stats_svg);
            svg << scatter_svg(points, fit,
                               std::string(kind_name(kind)) + "_k(" + n.get_str() +
                                   "): log log prime terms vs N");
        }
        json report{{"n", n.get_str()},
                    {"kind", kind_name(kind)},
                    {"points", fit.points},
                    {"C", real12(fit.C)},
                    {"intercept", real12(fit.intercept)},
                    {"lambda", fit.lambda.str(30)},
                    {"rho", real12(fit.rho)},
                    {"predicted_C", real12(fit.predicted_C)}};
        if (stats_fixture.empty()) {
            report["complete"] = list.complete;
            report["resume_k"] = list.complete_through;
        }
        if (!stats_json_path.empty()) {
            std::ofstream jf(stats_json_path);
            emit(jf, report);
        } else {
            emit(std::cout, report);
        }
        return 0;
    }

    if (*verify) {
        std::vector<VerifySummary> summaries;
        if (!verify_identity.empty()) {
            summaries.push_back(run_identity(verify_identity, verify_opts));
        } else {
            summaries = run_identity_suite(verify_opts);
        }
        long long failures = 0;
        for (const auto& s : summaries) {
            failures += s.failures;
            std::cout << "identity " << s.identity << ": " << s.tuples << " tuples, " << s.checks
                      << " checks, " << s.failures << " failures\n";
            for (const auto& f : s.failed)
                std::cout << "  FAIL " << f.identity << " " << f.params << ": " << f.left.get_str()
                          << " != " << f.right.get_str() << "\n";
        }
        return failures == 0 ? 0 : 1;
    }

    if (*periods) {
        Integer n(periods_n);
        json arr = json::array();
        auto info_json = [&](const PeriodInfo& info) {
            return json{{"q", info.q},
                        {"pi", info.pi},
                        {"case", period_case_name(info.kase)},
                        {"zero_positions", info.zero_positions}};
        };
        if (periods_qmax > 0) {
            for (unsigned long q = 2; q <= periods_qmax; ++q)
                if (is_small_prime(q)) arr.push_back(info_json(period_mod(n, q)));
            emit(std::cout, arr);
        } else if (periods_q > 0) {
            emit(std::cout, info_json(period_mod(n, periods_q)));
        } else {
            std::cerr << "periods: provide --q or --q-max\n";
            return 2;
        }
        return 0;
    }

    if (*prim) {
        auto report = primitive_divisors(Integer(prim_n), prim_k, prim_bound);
        json out{{"n", prim_n},
                 {"k", report.k},
                 {"trial_bound", report.trial_bound},
                 {"found", report.found},
                 {"cofactor", report.cofactor.get_str()}};
        emit(std::cout, out);
        return 0;
    }

    if (*bcheck) {
        std::string path = bcheck_file;
        std::ifstream probe(path);
        if (!probe) path = fixture_dir() + "/" + bcheck_file;
        BFile b = load_bfile(path);
        if (b.entries.empty()) {
            std::cerr << "b-file has no entries\n";
            return 1;
        }
        Integer n(bcheck_n);
        SequenceKind kind = kind_from_name(bcheck_kind);
        std::vector<std::pair<long long, Integer>> gen;
        for (const auto& [index, unused] : b.entries)
            gen.emplace_back(index, term(kind, n, index + bcheck_shift));
        auto report = cross_check(gen, b, b.entries.front().first, b.entries.back().first);
        json out{{"file", path},
                 {"pass", report.pass()},
                 {"mismatches", json::array()},
                 {"missing_in_bfile", report.missing_in_bfile},
                 {"missing_in_generated", report.missing_in_generated}};
        for (const auto& m : report.mismatches)
            out["mismatches"].push_back({{"index", m.index},
                                         {"expected", m.expected.get_str()},
                                         {"got", m.got.get_str()}});
        emit(std::cout, out);
        return report.pass() ? 0 : 1;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 1;
    } catch (const BFileError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
