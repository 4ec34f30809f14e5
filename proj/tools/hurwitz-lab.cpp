// hurwitz-lab: exact Hurwitz-number computations and identity checks.
//
// Subcommands
//   hurwitz   <profiles...>      classical numbers from the character formula,
//                                optionally cross-checked by brute force
//   whurwitz  --mu/--nu | --n    weighted numbers by one or all routes
//   tau       --N --n-max --D    solved two-alphabet tables, determinant route
//                                compared against the character route
//   paths     --signature ...    monotone transposition-path counts
//   verify    <suite>            identity suites; exit 0 iff everything holds
//
// All values print as exact rationals or polynomials with rational
// coefficients; JSON is the default format, CSV via --format csv.  A JSON
// config file can pre-set any flag (command-line values win).  Exit codes:
// 0 success, 1 identity/agreement failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hurwitz/routes.hpp"

using nlohmann::json;
using namespace hurwitz;

namespace {

// ---------------------------------------------------------------------------
// Shared plumbing

struct GlobalOpts {
    std::string format = "json";
    std::string config_path;
    int threads = 0;  // 0 = resolve from env / default 1
    std::size_t max_terms_budget = 0;
    std::uint64_t seed = 12345;
};

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("HURWITZ_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw Error("config file not found: " + path);
    json j;
    in >> j;
    if (!j.is_object()) throw Error("config file must hold a JSON object");
    return j;
}

/// Fill not-given options from the config object ("flags win").
template <typename T>
void merge_option(const CLI::Option* opt, const json& cfg, const std::string& key,
                  T& value) {
    if (opt != nullptr && opt->count() > 0) return;
    if (!cfg.contains(key)) return;
    cfg.at(key).get_to(value);
}

/// Weight descriptor: {"c":[rationals]}, {"G":[rationals, G_0 = 1]},
/// {"family":"exp"|"formal","order":k}.
WeightFunc parse_weight(const std::string& desc, int default_order) {
    if (desc.empty()) return WeightFunc::formal(default_order);
    json j;
    try {
        j = json::parse(desc);
    } catch (const json::exception& e) {
        throw Error(std::string("bad weight descriptor: ") + e.what());
    }
    if (j.contains("c")) {
        std::vector<Rational> c;
        for (const auto& s : j.at("c")) c.push_back(parse_rational(s.get<std::string>()));
        return WeightFunc::from_parameters(std::move(c));
    }
    if (j.contains("G")) {
        std::vector<LaurentPoly> g;
        for (const auto& s : j.at("G"))
            g.emplace_back(parse_rational(s.get<std::string>()));
        return WeightFunc::from_coefficients(std::move(g));
    }
    if (j.contains("family")) {
        std::string fam = j.at("family").get<std::string>();
        int order = j.value("order", default_order);
        if (fam == "exp") return WeightFunc::exp_truncated(order);
        if (fam == "formal") return WeightFunc::formal(order);
        throw Error("unknown weight family '" + fam + "'");
    }
    throw Error("weight descriptor needs one of: c, G, family");
}

json weight_to_json(const std::string& desc, int default_order) {
    if (desc.empty())
        return json{{"family", "formal"}, {"order", default_order}};
    return json::parse(desc);
}

void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << (i ? "," : "") << quote(cells[i]);
        std::cout << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

std::string value_str(const LaurentPoly& p) { return p.str(); }

// ---------------------------------------------------------------------------
// hurwitz: classical numbers

int cmd_hurwitz(const std::vector<std::string>& profile_args, bool oracle,
                const GlobalOpts& g) {
    std::vector<Partition> profiles;
    for (const auto& s : profile_args) profiles.push_back(parse_partition(s));
    Rational value = hurwitz_character(profiles);
    bool agree = true;
    std::optional<Rational> brute;
    if (oracle) {
        brute = hurwitz_count_bruteforce(profiles, resolve_threads(g.threads));
        agree = (*brute == value);
    }

    if (g.format == "csv") {
        std::vector<std::string> header{"profiles", "value"};
        std::vector<std::string> row{[&] {
                                         std::string s;
                                         for (const auto& p : profiles)
                                             s += (s.empty() ? "" : " ") + format_partition(p);
                                         return s;
                                     }(),
                                     to_string(value)};
        if (oracle) {
            header.insert(header.end(), {"oracle", "agree"});
            row.push_back(to_string(*brute));
            row.push_back(agree ? "true" : "false");
        }
        emit_csv(header, {row});
    } else {
        json out{{"command", "hurwitz"}, {"value", to_string(value)}};
        out["profiles"] = json::array();
        for (const auto& p : profiles) out["profiles"].push_back(format_partition(p));
        if (oracle) {
            out["oracle"] = to_string(*brute);
            out["agree"] = agree;
        }
        std::cout << out.dump(2) << "\n";
    }
    return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// whurwitz: weighted numbers

int cmd_whurwitz(const std::string& mu_s, const std::string& nu_s, int n, int dmax,
                 const std::string& route_s, const std::string& weight_desc,
                 const GlobalOpts& g) {
    WeightFunc w = parse_weight(weight_desc, dmax);
    std::vector<std::pair<Partition, Partition>> pairs;
    if (!mu_s.empty() || !nu_s.empty()) {
        if (mu_s.empty() || nu_s.empty())
            throw Error("give both --mu and --nu, or neither (with --n)");
        pairs.emplace_back(parse_partition(mu_s), parse_partition(nu_s));
    } else if (n > 0) {
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n)) pairs.emplace_back(mu, nu);
    } else {
        throw Error("need --mu/--nu or --n");
    }

    const bool all_routes = route_s == "all";
    const int threads = resolve_threads(g.threads);
    bool all_agree = true;
    json records = json::array();
    std::vector<std::vector<std::string>> rows;

    for (const auto& [mu, nu] : pairs)
        for (int d = 0; d <= dmax; ++d) {
            std::vector<Route> routes =
                all_routes ? applicable_routes(w, mu, nu, d)
                           : std::vector<Route>{parse_route(route_s)};
            std::optional<LaurentPoly> reference;
            for (Route r : routes) {
                auto res = weighted_hurwitz(w, mu, nu, d, r, threads);
                bool agree = true;
                if (all_routes) {
                    if (!reference) reference = res.value;
                    agree = (res.value == *reference);
                    all_agree = all_agree && agree;
                }
                json rec{{"mu", format_partition(mu)},
                         {"nu", format_partition(nu)},
                         {"d", d},
                         {"route", route_name(r)},
                         {"value", value_str(res.value)},
                         {"agree", agree}};
                records.push_back(rec);
                rows.push_back({format_partition(mu), format_partition(nu),
                                std::to_string(d), route_name(r), value_str(res.value),
                                agree ? "true" : "false"});
            }
        }

    if (g.format == "csv") {
        emit_csv({"mu", "nu", "d", "route", "value", "agree"}, rows);
    } else {
        json out{{"command", "whurwitz"},
                 {"weight", weight_to_json(weight_desc, dmax)},
                 {"records", records},
                 {"agree", all_agree}};
        std::cout << out.dump(2) << "\n";
    }
    return all_agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// tau: solved tables

int cmd_tau(int N, int n_max, int D, const std::string& weight_desc,
            const GlobalOpts& g) {
    WeightFunc w = parse_weight(weight_desc, D);
    MiwaContext ctx(N, n_max, D);
    TauTruncation det = tau_det_truncation(ctx, w);
    TauTruncation schur = tau_schur_truncation(ctx, w);
    auto diff = TauTruncation::first_difference(det, schur);

    json entries = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& [key, series] : det.entries())
        for (int d = 0; d <= D; ++d) {
            const LaurentPoly& v = series.coefficient(d);
            if (v.is_zero()) continue;
            entries.push_back(json{{"omega", format_partition(key.first)},
                                   {"sigma", format_partition(key.second)},
                                   {"d", d},
                                   {"value", value_str(v)}});
            rows.push_back({format_partition(key.first), format_partition(key.second),
                            std::to_string(d), value_str(v)});
        }

    if (g.format == "csv") {
        emit_csv({"omega", "sigma", "d", "value"}, rows);
    } else {
        json out{{"command", "tau"},
                 {"N", N},
                 {"n_max", n_max},
                 {"D", D},
                 {"weight", weight_to_json(weight_desc, D)},
                 {"entries", entries},
                 {"agree", !diff.has_value()}};
        if (diff) {
            auto [om, sg, d] = *diff;
            out["witness"] = json{{"omega", format_partition(om)},
                                  {"sigma", format_partition(sg)},
                                  {"d", d},
                                  {"determinant", value_str(det.value(om, sg, d))},
                                  {"character", value_str(schur.value(om, sg, d))}};
        }
        std::cout << out.dump(2) << "\n";
    }
    return diff ? 1 : 0;
}

// ---------------------------------------------------------------------------
// paths: monotone path counts

int cmd_paths(const std::string& sig_s, const std::string& mu_s, const std::string& nu_s,
              const GlobalOpts& g) {
    Partition sig = parse_partition(sig_s);
    Partition mu = parse_partition(mu_s);
    Partition nu = parse_partition(nu_s);
    Integer count = monotone_path_count(sig, mu, nu, resolve_threads(g.threads));

    if (g.format == "csv") {
        emit_csv({"signature", "mu", "nu", "count"},
                 {{format_partition(sig), format_partition(mu), format_partition(nu),
                   count.get_str()}});
    } else {
        json out{{"command", "paths"},
                 {"signature", format_partition(sig)},
                 {"mu", format_partition(mu)},
                 {"nu", format_partition(nu)},
                 {"count", count.get_str()}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify: identity suites

struct SuiteReport {
    std::string identity;
    json params;
    bool pass;
    json witness;  // null when passing
};

void run_taudet_suite(int n_top, int D, std::vector<SuiteReport>& out) {
    WeightFunc w = WeightFunc::exp_truncated(D);
    for (int n = 1; n <= n_top; ++n) {
        MiwaContext ctx(n, n, D);
        auto det = tau_det_truncation(ctx, w);
        auto schur = tau_schur_truncation(ctx, w);
        auto diff = TauTruncation::first_difference(det, schur);
        json witness;
        if (diff) {
            auto [om, sg, d] = *diff;
            witness = json{{"omega", format_partition(om)},
                           {"sigma", format_partition(sg)},
                           {"d", d},
                           {"determinant", value_str(det.value(om, sg, d))},
                           {"character", value_str(schur.value(om, sg, d))}};
        }
        out.push_back({"taudet-equivalence", json{{"N", n}, {"n_max", n}, {"D", D}},
                       !diff.has_value(), witness});
    }
}

void run_det_expansion_suite(const std::vector<std::pair<int, int>>& cases, int D,
                             std::vector<SuiteReport>& out) {
    WeightFunc w = WeightFunc::exp_truncated(D);
    for (auto [N, P] : cases) {
        bool ok = verify_det_expansion(N, P, w, N + 1, D);
        out.push_back({"det-expansion",
                       json{{"N", N}, {"P", P}, {"n_max", N + 1}, {"D", D}}, ok,
                       ok ? json() : json("determinant != ordered-tuple expansion")});
    }
}

void run_recursion_suite(int k, int trials, int D, std::uint64_t seed,
                         std::vector<SuiteReport>& out) {
    WeightFunc w = WeightFunc::exp_truncated(D);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 40);
    std::uniform_int_distribution<int> den(1, 6);
    auto draw_points = [&](int count) {
        std::set<Rational> uniq;
        while (static_cast<int>(uniq.size()) < count)
            uniq.insert(Rational(num(rng), den(rng)));
        return std::vector<Rational>(uniq.begin(), uniq.end());
    };
    for (int t = 0; t < trials; ++t) {
        auto mp = draw_points(k + 1);
        auto np = draw_points(k + 1);
        auto rep = verify_recursion(k, w, mp, np, D);
        json params{{"k", k}, {"trial", t}, {"seed", seed}, {"D", D}};
        json witness;
        if (!rep.pass)
            witness = json{{"d", rep.first_mismatch_d},
                           {"lhs", value_str(rep.lhs.coefficient(rep.first_mismatch_d))},
                           {"rhs", value_str(rep.rhs.coefficient(rep.first_mismatch_d))}};
        out.push_back({"recursion", params, rep.pass, witness});
    }
}

void run_d0_suite(int n_top, std::vector<SuiteReport>& out) {
    for (int n = 1; n <= n_top; ++n) {
        bool ok = true;
        json witness;
        for (const auto& e : d0_matrix_report(n)) {
            if (e.pass) continue;
            ok = false;
            witness = json{{"col_sums", format_partition(e.col_sums)},
                           {"row_sums", format_partition(e.row_sums)},
                           {"matrix_count", e.matrix_count.get_str()},
                           {"coefficient", to_string(e.coefficient)}};
            break;
        }
        out.push_back({"d0-matrix-counts", json{{"n", n}}, ok, witness});
    }
    for (int n = 1; n <= 6; ++n) {
        bool ok = true;
        json witness;
        for (const auto& mu : partitions_of(n)) {
            for (const auto& nu : partitions_of(n)) {
                Rational expect =
                    mu == nu ? Rational(Rational(1) / z_order(mu)) : Rational(0);
                Rational got = n <= 4 ? hurwitz_d0_from_matrices(mu, nu)
                                      : hurwitz_character({mu, nu});
                if (got != expect) {
                    ok = false;
                    witness = json{{"mu", format_partition(mu)},
                                   {"nu", format_partition(nu)},
                                   {"got", to_string(got)},
                                   {"expected", to_string(expect)}};
                    break;
                }
            }
            if (!ok) break;
        }
        out.push_back({"d0-diagonal", json{{"n", n}}, ok, witness});
    }
}

void run_cayley_suite(int n_top, int dmax, std::vector<SuiteReport>& out, int threads) {
    const std::vector<std::vector<Rational>> cvecs{
        {Rational(1), Rational(1, 2), Rational(-2), Rational(3)},
        {Rational(5), Rational(-1, 3), Rational(1, 4), Rational(2)}};
    for (std::size_t ci = 0; ci < cvecs.size(); ++ci) {
        WeightFunc w = WeightFunc::from_parameters(cvecs[ci]);
        bool ok = true;
        json witness;
        for (int n = 1; n <= n_top && ok; ++n)
            for (const auto& mu : partitions_of(n))
                for (const auto& nu : partitions_of(n))
                    for (int d = 0; d <= dmax; ++d) {
                        LaurentPoly a = weighted_hurwitz_cayley(w, mu, nu, d, threads);
                        LaurentPoly b = weighted_hurwitz_character(w, mu, nu, d);
                        if (a != b) {
                            ok = false;
                            witness = json{{"mu", format_partition(mu)},
                                           {"nu", format_partition(nu)},
                                           {"d", d},
                                           {"paths", value_str(a)},
                                           {"character", value_str(b)}};
                            goto done;
                        }
                    }
    done:
        out.push_back({"cayley-paths", json{{"n_max", n_top}, {"d_max", dmax},
                                            {"c_vector", static_cast<int>(ci)}},
                       ok, witness});
    }
}

void run_sums_suite(int n_top, int dmax, std::vector<SuiteReport>& out) {
    WeightFunc w = WeightFunc::exp_truncated(dmax);
    for (int n = 1; n <= n_top; ++n) {
        BetaSeries acc(dmax);
        for (const auto& om : partitions_of(n))
            for (const auto& sg : partitions_of(n))
                acc += weighted_hurwitz_series(w, om, sg, dmax);
        BetaSeries expect = w.rho(n - 1, dmax);
        bool ok = acc == expect;
        json witness;
        if (!ok) {
            int bad = 0;
            while (acc.coefficient(bad) == expect.coefficient(bad)) ++bad;
            witness = json{{"d", bad},
                           {"sum", value_str(acc.coefficient(bad))},
                           {"rho", value_str(expect.coefficient(bad))}};
        }
        out.push_back({"coefficient-sums", json{{"n", n}, {"d_max", dmax}}, ok, witness});
    }
}

int cmd_verify(const std::string& suite, int n, int N, int P, int D, int dmax, int k,
               int trials, const GlobalOpts& g) {
    std::vector<SuiteReport> reports;
    const int threads = resolve_threads(g.threads);

    auto want = [&](const std::string& s) { return suite == s || suite == "all"; };
    if (want("taudet")) run_taudet_suite(n > 0 ? std::min(n, 3) : 3, D > 0 ? D : 3, reports);
    if (want("det-expansion")) {
        std::vector<std::pair<int, int>> cases;
        if (N > 0 && P > 0)
            cases.emplace_back(N, P);
        else
            cases = {{2, 2}, {2, 3}, {3, 3}};
        run_det_expansion_suite(cases, D > 0 ? D : 2, reports);
    }
    if (want("recursion"))
        run_recursion_suite(k > 0 ? k : 2, trials > 0 ? trials : 3, D > 0 ? D : 2,
                            g.seed, reports);
    if (want("d0-matrix")) run_d0_suite(n > 0 ? std::min(n, 3) : 3, reports);
    if (want("cayley"))
        run_cayley_suite(n > 0 ? n : 4, dmax >= 0 ? dmax : 3, reports, threads);
    if (want("sums")) run_sums_suite(n > 0 ? n : 5, dmax >= 0 ? dmax : 3, reports);
    if (reports.empty())
        throw Error("unknown suite '" + suite +
                    "' (expect taudet, det-expansion, recursion, d0-matrix, cayley, "
                    "sums, or all)");

    bool all_pass = true;
    json jreports = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        jreports.push_back(json{{"identity", r.identity},
                                {"params", r.params},
                                {"pass", r.pass},
                                {"witness", r.witness}});
        rows.push_back({r.identity, r.params.dump(), r.pass ? "true" : "false",
                        r.witness.is_null() ? "" : r.witness.dump()});
    }

    if (g.format == "csv") {
        emit_csv({"identity", "params", "pass", "witness"}, rows);
    } else {
        json out{{"command", "verify"},
                 {"suite", suite},
                 {"reports", jreports},
                 {"pass", all_pass}};
        std::cout << out.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"exact classical and weighted Hurwitz numbers, with identity "
                 "verification suites"};
    app.require_subcommand(1);

    GlobalOpts g;
    auto* fmt_opt = app.add_option("--format", g.format, "output format: json or csv")
                        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--config", g.config_path, "JSON config file merged under flags");
    auto* thr_opt = app.add_option("--threads", g.threads,
                                   "worker threads (env HURWITZ_LAB_THREADS as fallback)");
    auto* mt_opt = app.add_option("--max-terms", g.max_terms_budget,
                                  "abort when any polynomial exceeds this many terms");
    auto* seed_opt = app.add_option("--seed", g.seed, "seed for random point sets");

    // hurwitz: profiles arrive as free arguments ("[2,1]" "[3]" ...).  They
    // are collected through remaining() rather than a vector option because
    // CLI11 would otherwise treat each bracketed token as a list literal and
    // split it on commas.
    bool oracle = false;
    auto* c_h = app.add_subcommand("hurwitz", "classical Hurwitz numbers");
    c_h->allow_extras();
    c_h->add_flag("--oracle", oracle, "cross-check against brute-force counting");

    // whurwitz
    std::string mu_s, nu_s, route_s = "all", weight_desc;
    int wn = 0, wd = 2;
    auto* c_w = app.add_subcommand("whurwitz", "weighted Hurwitz numbers");
    auto* o_mu = c_w->add_option("--mu", mu_s, "first profile");
    auto* o_nu = c_w->add_option("--nu", nu_s, "second profile");
    auto* o_n = c_w->add_option("--n", wn, "all profile pairs of this weight");
    auto* o_d = c_w->add_option("--d", wd, "maximum transposition degree");
    auto* o_route = c_w->add_option("--route", route_s,
                                    "character|definition|determinant|cayley|d0-matrix|all");
    auto* o_weight = c_w->add_option("--weight", weight_desc,
                                     "weight descriptor JSON: {\"c\":[..]}, {\"G\":[..]}, or "
                                     "{\"family\":\"exp\"|\"formal\",\"order\":k}");

    // tau
    int tN = 2, tn_max = -1, tD = 2;
    std::string t_weight;
    auto* c_t = app.add_subcommand("tau", "solved two-alphabet expansion tables");
    auto* o_tN = c_t->add_option("--N", tN, "alphabet dimension");
    auto* o_tnm = c_t->add_option("--n-max", tn_max, "highest level (default N)");
    auto* o_tD = c_t->add_option("--D", tD, "series order in the deformation variable");
    auto* o_tw = c_t->add_option("--weight", t_weight, "weight descriptor JSON");

    // paths
    std::string sig_s, pmu_s, pnu_s;
    auto* c_p = app.add_subcommand("paths", "monotone transposition-path counts");
    c_p->add_option("--signature", sig_s, "run-length signature partition")->required();
    c_p->add_option("--mu", pmu_s, "starting class")->required();
    c_p->add_option("--nu", pnu_s, "ending class")->required();

    // verify
    std::string suite;
    int vn = 0, vN = 0, vP = 0, vD = 0, vd = -1, vk = 0, vtrials = 0;
    auto* c_v = app.add_subcommand("verify", "identity verification suites");
    c_v->add_option("suite", suite,
                    "taudet | det-expansion | recursion | d0-matrix | cayley | sums | all")
        ->required();
    auto* o_vn = c_v->add_option("--n", vn, "profile weight bound");
    auto* o_vN = c_v->add_option("--N", vN, "alphabet dimension");
    auto* o_vP = c_v->add_option("--P", vP, "lower index range bound");
    auto* o_vD = c_v->add_option("--D", vD, "series order");
    auto* o_vd = c_v->add_option("--d", vd, "degree bound");
    auto* o_vk = c_v->add_option("--k", vk, "recursion depth parameter");
    auto* o_vt = c_v->add_option("--trials", vtrials, "random point-set count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        json cfg = load_config(g.config_path);
        merge_option(fmt_opt, cfg, "format", g.format);
        merge_option(thr_opt, cfg, "threads", g.threads);
        merge_option(mt_opt, cfg, "max-terms", g.max_terms_budget);
        merge_option(seed_opt, cfg, "seed", g.seed);
        merge_option(o_mu, cfg, "mu", mu_s);
        merge_option(o_nu, cfg, "nu", nu_s);
        merge_option(o_n, cfg, "n", wn);
        merge_option(o_d, cfg, "d", wd);
        merge_option(o_route, cfg, "route", route_s);
        merge_option(o_weight, cfg, "weight", weight_desc);
        merge_option(o_tN, cfg, "N", tN);
        merge_option(o_tnm, cfg, "n-max", tn_max);
        merge_option(o_tD, cfg, "D", tD);
        merge_option(o_tw, cfg, "weight", t_weight);
        merge_option(o_vn, cfg, "n", vn);
        merge_option(o_vN, cfg, "N", vN);
        merge_option(o_vP, cfg, "P", vP);
        merge_option(o_vD, cfg, "D", vD);
        merge_option(o_vd, cfg, "d", vd);
        merge_option(o_vk, cfg, "k", vk);
        merge_option(o_vt, cfg, "trials", vtrials);

        if (g.max_terms_budget > 0) set_max_terms(g.max_terms_budget);
        if (g.format != "json" && g.format != "csv")
            throw Error("format must be json or csv");

        if (app.got_subcommand(c_h)) {
            std::vector<std::string> profile_args = c_h->remaining();
            if (profile_args.empty())
                throw Error("hurwitz: need at least one profile, e.g. \"[2,1]\"");
            return cmd_hurwitz(profile_args, oracle, g);
        }
        if (app.got_subcommand(c_w))
            return cmd_whurwitz(mu_s, nu_s, wn, wd, route_s, weight_desc, g);
        if (app.got_subcommand(c_t))
            return cmd_tau(tN, tn_max > 0 ? tn_max : tN, tD, t_weight, g);
        if (app.got_subcommand(c_p)) return cmd_paths(sig_s, pmu_s, pnu_s, g);
        if (app.got_subcommand(c_v))
            return cmd_verify(suite, vn, vN, vP, vD, vd, vk, vtrials, g);
        throw Error("no subcommand");
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what()
                  << "\nhint: raise --max-terms or reduce n/N/D\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
