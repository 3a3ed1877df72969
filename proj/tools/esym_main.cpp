// esym: certify 1/p-concavity of linear combinations of elementary symmetric
// polynomials, decide real-rootedness by several independent criteria, and
// run seeded conjecture-falsification trials with exact re-verification.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "esym/concave.hpp"
#include "esym/hyperb.hpp"
#include "esym/report.hpp"
#include "esym/rootcrit.hpp"

namespace {

using namespace esym;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDiscovery = 2;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void flatten(const std::string& prefix, const Json& j,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.members()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_object())
                flatten(key, v, rows);
            else
                rows.emplace_back(key, v.is_string() ? v.string_value() : v.dump());
        }
    } else {
        rows.emplace_back(prefix, j.is_string() ? j.string_value() : j.dump());
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

std::string render(const Json& j, Format f) {
    if (f == Format::Json) return j.dump() + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten("", j, rows);
    std::string out;
    for (const auto& [k, v] : rows) {
        if (f == Format::Csv)
            out += csv_quote(k) + "," + csv_quote(v) + "\n";
        else
            out += k + " = " + v + "\n";
    }
    return out;
}

int emit(const Json& j, const OutputOptions& oo, int exit_code) {
    std::string bytes = render(j, parse_format(oo.format));
    if (oo.out_path.empty()) {
        std::cout << bytes;
    } else {
        std::ofstream f(oo.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write output path: " << oo.out_path << "\n";
            return kExitInputError;
        }
        f << bytes;
        if (!f.good()) {
            std::cerr << "write failed: " << oo.out_path << "\n";
            return kExitInputError;
        }
    }
    return exit_code;
}

std::vector<Scalar> parse_coeff_list(const std::string& text, bool descending) {
    std::vector<Scalar> c = parse_scalar_list(text);
    if (descending) std::reverse(c.begin(), c.end());
    return c;
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    if (const char* env = std::getenv("SIGMA_SEED")) {
        try {
            return static_cast<std::uint64_t>(std::stoull(env));
        } catch (...) {
            throw std::invalid_argument("invalid scalar token: SIGMA_SEED='" + std::string(env) + "'");
        }
    }
    return cli_seed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elementary symmetric concavity toolkit"};
    app.set_config("--config", "", "flat key=value configuration file");

    OutputOptions oo;
    bool descending = false;
    bool timing = false;
    unsigned jobs = 0;
    app.add_option("--format", oo.format, "json | csv | pretty")->capture_default_str();
    app.add_option("--out", oo.out_path, "write the report to this path");
    app.add_flag("--descending", descending, "coefficient lists are given highest-degree first");
    app.add_flag("--timing", timing, "fill elapsed_ms with wall time (breaks byte-reproducibility)");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware); never affects report bytes");
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    // battery <poly>
    auto* cmd_battery = app.add_subcommand("battery", "run all real-rootedness criteria");
    std::string battery_poly;
    int tp_order = 0;
    cmd_battery->add_option("poly", battery_poly, "ascending coefficients, e.g. 0,1/3,1,1")->required();
    cmd_battery->add_option("--tp-order", tp_order, "total-positivity truncation order (default deg+2)");

    // certify-p2 --a --n
    auto* cmd_p2 = app.add_subcommand("certify-p2", "exact p=2 concavity certificate");
    std::string p2_a;
    int p2_n = 2;
    cmd_p2->add_option("--a", p2_a, "a0,a1,a2")->required();
    cmd_p2->add_option("--n", p2_n, "dimension n >= 2")->required();

    // concavity --a --p --n --samples --seed
    auto* cmd_scan = app.add_subcommand("concavity", "sampled concavity scan with exact re-check");
    std::string scan_a;
    int scan_p = 2, scan_n = 3, scan_samples = 500;
    std::uint64_t scan_seed = 1;
    double scan_tol = 1e-9;
    cmd_scan->add_option("--a", scan_a)->required();
    cmd_scan->add_option("--p", scan_p)->required();
    cmd_scan->add_option("--n", scan_n)->required();
    cmd_scan->add_option("--samples", scan_samples);
    cmd_scan->add_option("--seed", scan_seed);
    cmd_scan->add_option("--tol", scan_tol);

    // membership --a --n --p
    auto* cmd_member = app.add_subcommand("membership", "Xi / X / K membership report");
    std::string member_a;
    int member_p = 2, member_n = 3, member_samples = 500;
    std::uint64_t member_seed = 1;
    cmd_member->add_option("--a", member_a)->required();
    cmd_member->add_option("--n", member_n)->required();
    cmd_member->add_option("--p", member_p)->required();
    cmd_member->add_option("--samples", member_samples);
    cmd_member->add_option("--seed", member_seed);

    // identities
    auto* cmd_ident = app.add_subcommand("identities", "run the exact identity suites");
    int ident_max_p = 6, ident_max_n = 6, ident_instances = 100;
    std::uint64_t ident_seed = 1;
    cmd_ident->add_option("--max-p", ident_max_p);
    cmd_ident->add_option("--max-n", ident_max_n);
    cmd_ident->add_option("--instances", ident_instances);
    cmd_ident->add_option("--seed", ident_seed);

    // conjecture <id> ...
    auto* cmd_conj = app.add_subcommand("conjecture", "seeded falsification trials (ids 1..5)");
    int conj_id = 4;
    TrialParams prm;
    cmd_conj->add_option("id", conj_id, "conjecture id 1..5")->required();
    cmd_conj->add_option("--p", prm.p);
    cmd_conj->add_option("--n", prm.n);
    cmd_conj->add_option("--trials", prm.trials);
    cmd_conj->add_option("--seed", prm.seed);
    cmd_conj->add_option("--range", prm.root_range, "roots/coefficients drawn from [-R, R]");
    cmd_conj->add_option("--scan-samples", prm.scan_samples);
    cmd_conj->add_option("--tol", prm.tol);

    // detcheck --kind --a --points
    auto* cmd_det = app.add_subcommand("detcheck", "closed-form determinant vs finite differences");
    std::string det_kind = "p3", det_a;
    int det_points = 100, det_n = 3;
    std::uint64_t det_seed = 1;
    cmd_det->add_option("--kind", det_kind, "p3 | sparse-n")->required();
    cmd_det->add_option("--a", det_a, "optional fixed coefficient vector");
    cmd_det->add_option("--points", det_points);
    cmd_det->add_option("--n", det_n);
    cmd_det->add_option("--seed", det_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        auto t0 = std::chrono::steady_clock::now();

        if (cmd_battery->parsed()) {
            UniPoly p(parse_coeff_list(battery_poly, descending));
            if (p.degree() < 1) throw std::invalid_argument("battery needs deg >= 1");
            CriterionReport r = battery(p, tp_order);
            Json body = to_json(r);
            Json j = Json::object();
            j.set("input", p.str());
            for (const auto& [k, v] : body.members()) j.set(k, v);
            return emit(j, oo, kExitOk);
        }

        if (cmd_p2->parsed()) {
            CoeffVec a(parse_coeff_list(p2_a, descending));
            P2Certificate cert = p2_certificate(a, p2_n);
            Json j = Json::object();
            j.set("status", cert.status == P2Status::Concave      ? "concave"
                            : cert.status == P2Status::NotConcave ? "not-concave"
                                                                  : "boundary");
            j.set("margin", to_string(cert.margin));
            return emit(j, oo, kExitOk);
        }

        if (cmd_scan->parsed()) {
            CoeffVec a(parse_coeff_list(scan_a, descending));
            ScanOptions opts;
            opts.tol = scan_tol;
            opts.jobs = jobs;
            ConcavityVerdict v =
                concavity_scan(a, scan_p, scan_n, scan_samples, effective_seed(scan_seed), opts);
            Json body = to_json(v);
            Json j = Json::object();
            j.set("a", a.str());
            j.set("p", scan_p);
            j.set("n", scan_n);
            for (const auto& [k, val] : body.members()) j.set(k, val);
            int code = v.status == ConcavityStatus::Counterexample ? kExitDiscovery : kExitOk;
            return emit(j, oo, code);
        }

        if (cmd_member->parsed()) {
            CoeffVec a(parse_coeff_list(member_a, descending));
            ScanOptions opts;
            opts.jobs = jobs;
            MembershipReport m = set_membership(a, member_n, member_p, member_samples,
                                                effective_seed(member_seed), opts);
            Json body = to_json(m);
            Json j = Json::object();
            j.set("a", a.str());
            j.set("n", member_n);
            j.set("p", member_p);
            for (const auto& [k, val] : body.members()) j.set(k, val);
            int code = m.k_scan.status == ConcavityStatus::Counterexample ? kExitDiscovery : kExitOk;
            return emit(j, oo, code);
        }

        if (cmd_ident->parsed()) {
            auto suites =
                run_identity_suites(ident_max_p, ident_max_n, ident_instances, effective_seed(ident_seed));
            Json j = Json::object();
            Json arr = Json::array();
            long failures = 0;
            for (const auto& s : suites) {
                Json row = Json::object();
                row.set("suite", s.name);
                row.set("instances", s.instances);
                row.set("failures", s.failures);
                arr.push(std::move(row));
                failures += s.failures;
            }
            j.set("suites", std::move(arr));
            j.set("total_failures", failures);
            if (failures > 0) {
                emit(j, oo, kExitOk);
                std::cerr << "identity suite failures: " << failures << "\n";
                return kExitInputError;
            }
            return emit(j, oo, kExitOk);
        }

        if (cmd_conj->parsed()) {
            prm.seed = effective_seed(prm.seed);
            prm.jobs = jobs;
            TrialReport r = conjecture_trial(conj_id, prm);
            if (timing) {
                auto t1 = std::chrono::steady_clock::now();
                r.elapsed_ms =
                    std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            }
            int code = r.counterexamples.empty() ? kExitOk : kExitDiscovery;
            return emit(to_json(r), oo, code);
        }

        if (cmd_det->parsed()) {
            DetKind kind;
            if (det_kind == "p3")
                kind = DetKind::P3;
            else if (det_kind == "sparse-n")
                kind = DetKind::SparseN;
            else
                throw std::invalid_argument("unknown detcheck kind: '" + det_kind + "'");
            std::optional<CoeffVec> fixed;
            if (!det_a.empty()) fixed = CoeffVec(parse_coeff_list(det_a, descending));
            int n = det_n;
            if (kind == DetKind::SparseN && fixed) n = fixed->p();
            DetCheckReport r = detcheck(kind, n, det_points, effective_seed(det_seed), fixed);
            int code = r.disagreements > 0 ? kExitDiscovery : kExitOk;
            return emit(to_json(r), oo, code);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
