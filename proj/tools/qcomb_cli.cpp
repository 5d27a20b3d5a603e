// Command-line frontend: every computation and verification in the library,
// with machine-readable output. Exit codes: 0 success / verification pass,
// 1 verification failure, 2 usage or domain error, 3 convergence-
// certification failure.

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcomb/qcomb.hpp"

using json = nlohmann::ordered_json;
using namespace qcomb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

constexpr const char* kSchema = "qcomb/1";

struct OutputOptions {
    std::string format = "json";  // json | table | csv
    bool no_timestamp = false;
};

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

json record(const std::string& command, json params, const OutputOptions& out) {
    json r;
    r["schema"] = kSchema;
    r["command"] = command;
    if (!out.no_timestamp) r["timestamp"] = iso_timestamp();
    r["params"] = std::move(params);
    return r;
}

json poly_json(const QPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return json{{"poly", p.to_string()}, {"coeffs", coeffs}};
}

json certified_json(const CertifiedValue& v) {
    return json{{"estimate", v.estimate()},
                {"error_bound", v.half_width_double()},
                {"lo", to_string(v.lo)},
                {"hi", to_string(v.hi)}};
}

void emit(const json& r) { std::cout << r.dump(2) << "\n"; }

Rational opt_rational(const std::string& s) { return parse_rational(s); }

PsiSequence parse_sequence(const std::string& spec) {
    if (spec == "natural") return PsiSequence::natural();
    if (spec == "fibonacci") return PsiSequence::fibonacci();
    if (spec.rfind("gauss:", 0) == 0) return PsiSequence::gauss(parse_rational(spec.substr(6)));
    if (spec.rfind("file:", 0) == 0) return PsiSequence::from_file(spec.substr(5));
    throw DomainError("unknown psi sequence '" + spec +
                      "' (expected gauss:a/b, natural, fibonacci, or file:PATH)");
}

int run(int argc, char** argv) {
    CLI::App app{"q-deformed combinatorial numbers: Carlitz and Cigler q-Stirling/q-Bell, "
                 "Dobinski-type identity checkers, q-Poisson moments, set-partition oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    OutputOptions out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-timestamp", out.no_timestamp, "Suppress the timestamp field");

    // ---- stirling ----
    auto* stirling = app.add_subcommand("stirling", "q-Stirling numbers of the second kind");
    std::string st_variant;
    long st_n = 0;
    std::optional<long> st_k;
    std::optional<std::string> st_q;
    stirling->add_option("--variant", st_variant)->required()
        ->check(CLI::IsMember({"carlitz", "cigl"}));
    stirling->add_option("--n", st_n)->required();
    stirling->add_option("--k", st_k);
    stirling->add_option("--q", st_q, "Evaluate at rational q instead of symbolic output");

    // ---- bell ----
    auto* bell = app.add_subcommand("bell", "q-Bell numbers");
    std::string be_variant;
    long be_n = 0;
    std::optional<std::string> be_q;
    bool be_lambda_poly = false;
    bell->add_option("--variant", be_variant)->required()
        ->check(CLI::IsMember({"carlitz", "cigl"}));
    bell->add_option("--n", be_n)->required();
    bell->add_option("--q", be_q);
    bell->add_flag("--lambda-poly", be_lambda_poly,
                   "Emit the lambda-polynomial refinement (carlitz only)");

    // ---- dobinski ----
    auto* dob = app.add_subcommand("dobinski", "q-Dobinski formula, formal or certified numeric");
    long do_n = 0;
    bool do_formal = false;
    std::optional<std::size_t> do_order;
    std::optional<std::string> do_q, do_lambda, do_eps;
    dob->add_option("--n", do_n)->required();
    dob->add_flag("--formal", do_formal);
    dob->add_option("--order", do_order);
    dob->add_option("--q", do_q);
    dob->add_option("--lambda", do_lambda);
    dob->add_option("--eps", do_eps);

    // ---- poisson ----
    auto* poisson = app.add_subcommand("poisson", "q-Poisson distribution quantities");
    poisson->require_subcommand(1);
    std::optional<long> po_k, po_n, po_m;
    std::string po_q, po_lambda, po_eps = "1/1000000000000";
    auto* po_pmf = poisson->add_subcommand("pmf", "Probability mass p_k");
    po_pmf->add_option("--k", po_k)->required();
    auto* po_mom = poisson->add_subcommand("moment", "n-th q-power moment");
    po_mom->add_option("--n", po_n)->required();
    auto* po_fm = poisson->add_subcommand("factorial-moment", "m-th q-falling-factorial moment");
    po_fm->add_option("--m", po_m)->required();
    for (auto* sub : {po_pmf, po_mom, po_fm}) {
        sub->add_option("--q", po_q)->required();
        sub->add_option("--lambda", po_lambda)->required();
        sub->add_option("--eps", po_eps)->capture_default_str();
    }

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Identity checkers; exit 1 on failure");
    verify->require_subcommand(1);
    long v4_n = 0, v4_xmax = 0;
    auto* v_eq4 = verify->add_subcommand("eq4", "Defining relation of the Carlitz numbers");
    v_eq4->add_option("--n", v4_n)->required();
    v_eq4->add_option("--xmax", v4_xmax)->required();
    std::string v8_q, v8_lambda = "1";
    std::size_t v8_order = 20;
    auto* v_eq8 = verify->add_subcommand("eq8", "Generating-function relations");
    v_eq8->add_option("--q", v8_q)->required();
    v_eq8->add_option("--lambda", v8_lambda)->capture_default_str();
    v_eq8->add_option("--order", v8_order)->capture_default_str();
    long vc_n = 0;
    std::size_t vc_order = 0;
    auto* v_cigl = verify->add_subcommand("cigl-dobinski", "cigl-q-Dobinski identity");
    v_cigl->add_option("--n", vc_n)->required();
    v_cigl->add_option("--order", vc_order)->required();
    long vi_nmax = 0;
    auto* v_inv = verify->add_subcommand("inv-calibration",
                                         "inv statistic vs Carlitz monomial calibration");
    v_inv->add_option("--nmax", vi_nmax)->required();

    // ---- partitions ----
    auto* parts = app.add_subcommand("partitions", "Set-partition oracle dump");
    long pa_n = 0;
    std::optional<long> pa_k;
    std::string pa_stat = "cigl,inv";
    bool pa_weighted = false;
    long pa_cap = kPartitionEnumerationCap;
    parts->add_option("--n", pa_n)->required();
    parts->add_option("--k", pa_k);
    parts->add_option("--stat", pa_stat, "Comma-separated statistics")->capture_default_str();
    parts->add_flag("--weighted", pa_weighted, "Emit weighted sums instead of the raw dump");
    parts->add_option("--cap", pa_cap, "Enumeration cap override")->capture_default_str();

    // ---- psi ----
    auto* psi = app.add_subcommand("psi", "psi-sequence Stirling and Bell numbers");
    psi->require_subcommand(1);
    std::string ps_seq, pb_seq;
    long ps_n = 0, pb_n = 0;
    auto* psi_st = psi->add_subcommand("stirling", "Row n of the psi-Stirling triangle");
    psi_st->add_option("--seq", ps_seq)->required();
    psi_st->add_option("--n", ps_n)->required();
    auto* psi_be = psi->add_subcommand("bell", "psi-Bell number");
    psi_be->add_option("--seq", pb_seq)->required();
    psi_be->add_option("--n", pb_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (stirling->parsed()) {
        json params{{"variant", st_variant}, {"n", st_n}};
        if (st_k) params["k"] = *st_k;
        if (st_q) params["q"] = *st_q;
        std::vector<std::pair<long, QPoly>> entries;
        auto one = [&](long k) {
            return st_variant == "carlitz" ? carlitz_stirling(st_n, k) : cigl_stirling(st_n, k);
        };
        if (st_k) {
            entries.emplace_back(*st_k, one(*st_k));
        } else {
            for (long k = 0; k <= st_n; ++k) entries.emplace_back(k, one(k));
        }
        if (out.format == "csv") {
            std::optional<Rational> qv = st_q ? std::optional(opt_rational(*st_q)) : std::nullopt;
            std::cout << (qv ? "n,k,value\n" : "n,k,poly\n");
            for (const auto& [k, p] : entries)
                std::cout << st_n << "," << k << ","
                          << (qv ? to_string(p.eval(*qv)) : "\"" + p.to_string() + "\"") << "\n";
        } else if (out.format == "table") {
            for (const auto& [k, p] : entries) {
                std::cout << "S[" << st_n << "," << k << "] = ";
                if (st_q)
                    std::cout << to_string(p.eval(opt_rational(*st_q)));
                else
                    std::cout << p.to_string();
                std::cout << "\n";
            }
        } else {
            json r = record("stirling", params, out);
            json arr = json::array();
            for (const auto& [k, p] : entries) {
                json e{{"n", st_n}, {"k", k}};
                e.update(poly_json(p));
                if (st_q) e["value"] = to_string(p.eval(opt_rational(*st_q)));
                arr.push_back(std::move(e));
            }
            r["result"] = {{"entries", arr}};
            emit(r);
        }
        return kExitOk;
    }

    if (bell->parsed()) {
        json params{{"variant", be_variant}, {"n", be_n}};
        if (be_q) params["q"] = *be_q;
        if (be_lambda_poly && be_variant != "carlitz")
            throw CLI::ValidationError("--lambda-poly is only defined for the carlitz variant");
        QPoly poly = be_variant == "carlitz" ? q_bell(be_n).poly : cigl_bell(be_n);
        json r = record("bell", params, out);
        json result;
        result.update(poly_json(poly));
        if (be_q) result["value"] = to_string(poly.eval(opt_rational(*be_q)));
        if (be_lambda_poly) {
            json lp = json::array();
            for (const auto& c : q_bell(be_n).lambda_coeffs) lp.push_back(poly_json(c));
            result["lambda_poly"] = std::move(lp);
        }
        if (out.format == "table" || out.format == "csv") {
            std::cout << (be_q ? to_string(poly.eval(opt_rational(*be_q))) : poly.to_string())
                      << "\n";
        } else {
            r["result"] = std::move(result);
            emit(r);
        }
        return kExitOk;
    }

    if (dob->parsed()) {
        if (do_formal) {
            if (!do_order) throw CLI::ValidationError("--formal requires --order");
            auto report = dobinski_formal_verify(do_n, *do_order);
            json r = record("dobinski", {{"n", do_n}, {"formal", true}, {"order", *do_order}},
                            out);
            r["result"] = {{"verdict", report.pass ? "pass" : "fail"}, {"detail", report.detail}};
            emit(r);
            return report.pass ? kExitOk : kExitVerifyFail;
        }
        if (!do_q || !do_lambda || !do_eps)
            throw CLI::ValidationError("numeric mode requires --q, --lambda, and --eps");
        auto v = dobinski_numeric(do_n, opt_rational(*do_q), opt_rational(*do_lambda),
                                  opt_rational(*do_eps));
        json r = record("dobinski",
                        {{"n", do_n}, {"q", *do_q}, {"lambda", *do_lambda}, {"eps", *do_eps}},
                        out);
        r["result"] = certified_json(v);
        emit(r);
        return kExitOk;
    }

    if (poisson->parsed()) {
        QPoissonParams params(opt_rational(po_lambda), opt_rational(po_q), opt_rational(po_eps));
        json p{{"q", po_q}, {"lambda", po_lambda}, {"eps", po_eps}};
        std::string name;
        CertifiedValue v = CertifiedValue::exact(Rational(0));
        if (po_pmf->parsed()) {
            name = "poisson pmf";
            p["k"] = *po_k;
            v = pmf(*po_k, params);
        } else if (po_mom->parsed()) {
            name = "poisson moment";
            p["n"] = *po_n;
            v = moment(*po_n, params);
        } else {
            name = "poisson factorial-moment";
            p["m"] = *po_m;
            v = factorial_moment(*po_m, params);
        }
        if (out.format == "csv") {
            std::cout << "estimate,error_bound\n"
                      << v.estimate() << "," << v.half_width_double() << "\n";
        } else {
            json r = record(name, p, out);
            r["result"] = certified_json(v);
            emit(r);
        }
        return kExitOk;
    }

    if (verify->parsed()) {
        std::string name;
        json p;
        VerifyReport report;
        if (v_eq4->parsed()) {
            name = "verify eq4";
            p = {{"n", v4_n}, {"xmax", v4_xmax}};
            report = verify_defining_relation(v4_n, v4_xmax);
        } else if (v_eq8->parsed()) {
            name = "verify eq8";
            p = {{"q", v8_q}, {"lambda", v8_lambda}, {"order", v8_order}};
            report = verify_eq8(QPoissonParams(opt_rational(v8_lambda), opt_rational(v8_q)),
                                v8_order);
        } else if (v_cigl->parsed()) {
            name = "verify cigl-dobinski";
            p = {{"n", vc_n}, {"order", vc_order}};
            report = cigl_dobinski_verify(vc_n, vc_order);
        } else {
            name = "verify inv-calibration";
            p = {{"nmax", vi_nmax}};
            auto cal = inv_calibration(vi_nmax);
            report.pass = cal.pass;
            report.detail = cal.detail;
            json r = record(name, p, out);
            json exps = json::array();
            for (long k = 1; k <= vi_nmax; ++k)
                exps.push_back(cal.exponent_by_k[static_cast<std::size_t>(k)]);
            r["result"] = {{"verdict", cal.pass ? "pass" : "fail"},
                           {"detail", cal.detail},
                           {"exponent_by_k", exps}};
            emit(r);
            return cal.pass ? kExitOk : kExitVerifyFail;
        }
        json r = record(name, p, out);
        r["result"] = {{"verdict", report.pass ? "pass" : "fail"}, {"detail", report.detail}};
        emit(r);
        return report.pass ? kExitOk : kExitVerifyFail;
    }

    if (parts->parsed()) {
        bool want_cigl = pa_stat.find("cigl") != std::string::npos;
        bool want_inv = pa_stat.find("inv") != std::string::npos;
        if (!want_cigl && !want_inv)
            throw CLI::ValidationError("--stat must mention cigl and/or inv");
        if (pa_weighted) {
            json p{{"n", pa_n}, {"stat", pa_stat}};
            if (pa_k) p["k"] = *pa_k;
            json result;
            if (want_cigl)
                result["cigl"] = poly_json(weighted_sum(pa_n, pa_k, PartitionStat::cigl, pa_cap));
            if (want_inv)
                result["inv"] = poly_json(weighted_sum(pa_n, pa_k, PartitionStat::inv, pa_cap));
            json r = record("partitions", p, out);
            r["result"] = std::move(result);
            emit(r);
            return kExitOk;
        }
        if (out.format == "json") {
            json arr = json::array();
            visit_partitions(pa_n, [&](const std::vector<int>& rg) {
                SetPartition sp(rg);
                if (pa_k && sp.block_count() != *pa_k) return;
                json e{{"rg", sp.rg_string()}, {"k", sp.block_count()}};
                if (want_cigl) e["cigl"] = cigl_stat(sp);
                if (want_inv) e["inv"] = inv_stat(sp);
                arr.push_back(std::move(e));
            }, pa_cap);
            json p{{"n", pa_n}, {"stat", pa_stat}};
            if (pa_k) p["k"] = *pa_k;
            json r = record("partitions", p, out);
            r["result"] = {{"partitions", arr}};
            emit(r);
        } else {
            std::cout << "rg,k";
            if (want_cigl) std::cout << ",cigl";
            if (want_inv) std::cout << ",inv";
            std::cout << "\n";
            visit_partitions(pa_n, [&](const std::vector<int>& rg) {
                SetPartition sp(rg);
                if (pa_k && sp.block_count() != *pa_k) return;
                std::cout << sp.rg_string() << "," << sp.block_count();
                if (want_cigl) std::cout << "," << cigl_stat(sp);
                if (want_inv) std::cout << "," << inv_stat(sp);
                std::cout << "\n";
            }, pa_cap);
        }
        return kExitOk;
    }

    if (psi->parsed()) {
        if (psi_st->parsed()) {
            auto seq = parse_sequence(ps_seq);
            auto row = psi_stirling_row(ps_n, seq);
            json r = record("psi stirling", {{"seq", ps_seq}, {"n", ps_n}}, out);
            json arr = json::array();
            for (const auto& v : row) arr.push_back(to_string(v));
            r["result"] = {{"row", arr}};
            emit(r);
        } else {
            auto seq = parse_sequence(pb_seq);
            Rational v = psi_bell(pb_n, seq);
            json r = record("psi bell", {{"seq", pb_seq}, {"n", pb_n}}, out);
            r["result"] = {{"value", to_string(v)}};
            emit(r);
        }
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return kExitConvergence;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
