// Command-line surface: reproducible experiment runs with machine-readable
// reports. Exit codes: 0 all assertions pass, 1 falsification found,
// 2 configuration or budget error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wkl/grid.hpp"
#include "wkl/kloosterman.hpp"
#include "wkl/report.hpp"

using namespace wkl;

namespace {

struct RunConfig {
    std::vector<std::string> specs;
    std::vector<int64_t> ks;
    std::string n_range;  // "lo:hi", replaces the n of every --spec
    uint64_t psi_seed = 0;
    int64_t budget = 100000000;
    int workers = 0;
    std::string out;
    std::string format = "json";
    std::string method = "both";
    std::vector<std::string> intervals;
    std::vector<std::string> moments;
};

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        if (key == "spec") cfg.specs.push_back(val);
        else if (key == "k") {
            std::istringstream is(val);
            std::string item;
            while (std::getline(is, item, ',')) cfg.ks.push_back(std::stoll(item));
        } else if (key == "n-range") cfg.n_range = val;
        else if (key == "psi-seed") cfg.psi_seed = std::stoull(val);
        else if (key == "budget") cfg.budget = std::stoll(val);
        else if (key == "workers") cfg.workers = std::stoi(val);
        else if (key == "out") cfg.out = val;
        else if (key == "format") cfg.format = val;
        else if (key == "method") cfg.method = val;
        else if (key == "interval") cfg.intervals.push_back(val);
        else if (key == "moment") cfg.moments.push_back(val);
        else throw std::invalid_argument("unknown config key: " + key);
    }
}

std::vector<RingSpec> resolve_grid(const RunConfig& cfg) {
    std::vector<RingSpec> grid;
    if (cfg.specs.empty()) {
        grid = default_grid();
    } else {
        for (const auto& s : cfg.specs) {
            if (!cfg.n_range.empty()) {
                auto colon = cfg.n_range.find(':');
                int lo = std::stoi(cfg.n_range.substr(0, colon));
                int hi = colon == std::string::npos ? lo : std::stoi(cfg.n_range.substr(colon + 1));
                RingSpec base = RingSpec::parse(s);
                for (int n = lo; n <= hi; ++n)
                    grid.push_back(RingSpec::make(base.kind(), base.p(), base.f(),
                                                  base.equal_char() ? 0 : base.e(), n));
            } else {
                grid.push_back(RingSpec::parse(s));
            }
        }
    }
    return grid;
}

std::vector<int64_t> resolve_ks(const RunConfig& cfg) {
    return cfg.ks.empty() ? default_k_list() : cfg.ks;
}

IntervalConfig parse_interval(const std::string& text) {
    IntervalConfig c{};
    int64_t q = 0;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad interval config: " + text);
        std::string key = item.substr(0, eq);
        int64_t val = std::stoll(item.substr(eq + 1));
        if (key == "q") q = val;
        else if (key == "k") c.k = val;
        else if (key == "n") c.n = static_cast<int>(val);
        else throw std::invalid_argument("unknown interval config key: " + key);
    }
    c.p = q;
    c.f = 1;
    while (c.p > 1 && c.p % 2 == 0 && c.p > 2) { /* not prime: try p^f */ break; }
    if (!is_prime(c.p)) {
        // factor q = p^f for small prime powers
        for (int64_t p = 2; p * p <= q; ++p) {
            if (q % p == 0) {
                c.p = p;
                c.f = 0;
                int64_t t = q;
                while (t > 1) { t /= p; ++c.f; }
                break;
            }
        }
    }
    if (ipow64(c.p, c.f) != q) throw std::invalid_argument("interval q must be a prime power");
    return c;
}

MomentConfigDesc parse_moment(const std::string& text) {
    MomentConfigDesc m;
    int64_t q = 3;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad moment config: " + text);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (key == "q") q = std::stoll(val);
        else if (key == "pi") m.pi = val;
        else if (key == "n") m.n = std::stoi(val);
        else if (key == "k") m.k = std::stoll(val);
        else throw std::invalid_argument("unknown moment config key: " + key);
    }
    m.p = q;
    m.f = 1;
    if (!is_prime(q)) {
        for (int64_t p = 2; p * p <= q; ++p)
            if (q % p == 0) {
                m.p = p;
                m.f = 0;
                int64_t t = q;
                while (t > 1) { t /= p; ++m.f; }
                break;
            }
    }
    if (ipow64(m.p, m.f) != q) throw std::invalid_argument("moment q must be a prime power");
    return m;
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file: " + cfg.out);
        out << payload << "\n";
    }
}

int cmd_params(const RunConfig& cfg) {
    auto grid = resolve_grid(cfg);
    auto ks = resolve_ks(cfg);
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "spec,k,v,c,c_tilde,w,w_prime,k_star,k_prime";
        for (const auto& s : grid)
            for (int64_t k : ks) {
                auto P = compute_params(s, k);
                os << "\n" << s.describe() << "," << k << "," << P.v << "," << P.c << ","
                   << P.c_tilde << "," << P.w << "," << P.w_prime << "," << P.k_star << ","
                   << P.k_prime;
            }
        emit(cfg, os.str());
        return 0;
    }
    ordered_json rep = report_envelope("params");
    rep["rows"] = ordered_json::array();
    for (const auto& s : grid)
        for (int64_t k : ks)
            rep["rows"].push_back(
                ordered_json{{"spec", s.describe()}, {"params", params_json(compute_params(s, k))}});
    emit(cfg, rep.dump(2));
    return 0;
}

bool explicit_pairs(const RunConfig& cfg) { return !cfg.specs.empty() && !cfg.ks.empty(); }

void budget_or_skip(const RunConfig& cfg, const RingSpec& s, int64_t k, bool& skip) {
    skip = !within_budget(s, k, cfg.budget);
    if (skip && explicit_pairs(cfg))
        throw BudgetExceeded("pair " + s.describe() + " k=" + std::to_string(k) +
                             " exceeds the enumeration budget");
}

int cmd_kl(const RunConfig& cfg) {
    auto grid = resolve_grid(cfg);
    auto ks = resolve_ks(cfg);
    bool mismatch = false;
    ordered_json rep = report_envelope("kl");
    rep["method"] = cfg.method;
    rep["rows"] = ordered_json::array();
    std::ostringstream csv;
    csv << "spec,k,x,unit,abs,is_zero,match";
    for (const auto& s : grid) {
        AdditiveCharacter psi(s, cfg.psi_seed);
        for (int64_t k : ks) {
            bool skip = false;
            budget_or_skip(cfg, s, k, skip);
            if (skip) continue;
            KlTable brute;
            std::vector<CycloVec> stat;
            if (cfg.method != "stationary")
                brute = kl_brute_table(s, psi, k, cfg.budget, cfg.workers);
            if (cfg.method != "brute" && s.n() >= 2)
                stat = kl_stationary_sweep(s, psi, k, cfg.workers);
            for (int64_t i = 0; i < s.size(); ++i) {
                RingElt x = s.element_at(i);
                bool unit = s.is_unit(x);
                const CycloVec* val = nullptr;
                if (cfg.method != "stationary") val = &brute.values[i];
                else if (unit && !stat.empty()) val = &stat[i];
                ordered_json row{{"spec", s.describe()},
                                 {"k", k},
                                 {"x", element_string(s, i)},
                                 {"unit", unit}};
                std::string match = "-";
                if (val) {
                    row["value"] = cyclo_json(*val);
                    row["abs"] = val->abs_value();
                    row["is_zero"] = val->is_zero();
                }
                if (cfg.method == "both" && unit && !stat.empty()) {
                    bool eq = stat[i].equals(brute.values[i]);
                    row["match"] = eq;
                    match = eq ? "1" : "0";
                    if (!eq) mismatch = true;
                }
                rep["rows"].push_back(row);
                csv << "\n" << s.describe() << "," << k << "," << element_string(s, i) << ","
                    << unit << "," << (val ? format_double(val->abs_value()) : "-") << ","
                    << (val ? (val->is_zero() ? "1" : "0") : "-") << "," << match;
            }
        }
    }
    emit(cfg, cfg.format == "csv" ? csv.str() : rep.dump(2));
    return mismatch ? 1 : 0;
}

int cmd_verify(const RunConfig& cfg, std::string* payload_out = nullptr) {
    auto grid = resolve_grid(cfg);
    auto ks = resolve_ks(cfg);
    bool falsified = false;
    ordered_json rep = report_envelope("verify");
    rep["psi_seed"] = cfg.psi_seed;
    rep["reports"] = ordered_json::array();
    std::ostringstream csv;
    csv << bounds_csv_header();
    int64_t checks = 0;
    for (const auto& s : grid) {
        AdditiveCharacter psi(s, cfg.psi_seed);
        for (int64_t k : ks) {
            bool skip = false;
            budget_or_skip(cfg, s, k, skip);
            if (skip) continue;
            auto table = kl_brute_table(s, psi, k, cfg.budget, cfg.workers);
            auto R = verify_bounds(s, psi, k, table, s.n() >= 2, cfg.workers);
            R.psi_seed = cfg.psi_seed;
            ++checks;
            bool row_falsified = !R.plancherel_ok || !R.closed_form_ok ||
                                 (R.stationary_matches && !*R.stationary_matches);
            if (s.n() >= 2)
                row_falsified = row_falsified || !R.strict_ok || !R.class_ok ||
                                (k >= 2 && (!R.lower_found || !R.vanish_ok));
            falsified = falsified || row_falsified;
            rep["reports"].push_back(bound_report_json(R, s));
            csv << "\n" << bounds_csv_row(R);
        }
    }
    rep["checks"] = checks;
    rep["falsified"] = falsified;
    std::string payload = cfg.format == "csv" ? csv.str() : rep.dump(2);
    if (payload_out) *payload_out = payload;
    else emit(cfg, payload);
    return falsified ? 1 : 0;
}

ordered_json build_intervals_report(const RunConfig& cfg, bool& falsified, std::string* csv_out) {
    std::vector<IntervalConfig> configs;
    if (cfg.intervals.empty()) configs = default_interval_configs();
    else
        for (const auto& t : cfg.intervals) configs.push_back(parse_interval(t));
    ordered_json rep = report_envelope("intervals");
    rep["surveys"] = ordered_json::array();
    std::ostringstream csv;
    for (const auto& c : configs) {
        auto S = interval_survey(c, cfg.workers);
        falsified = falsified || !S.identity_ok || !S.total_mass_ok || !S.nonzero_ok ||
                    !S.mass_ok || !S.max_error_ok;
        rep["surveys"].push_back(interval_survey_json(S));
        csv << intervals_csv(S);
    }
    rep["falsified"] = falsified;
    if (csv_out) *csv_out = csv.str();
    return rep;
}

int cmd_intervals(const RunConfig& cfg) {
    bool falsified = false;
    std::string csv;
    ordered_json rep = build_intervals_report(cfg, falsified, &csv);
    emit(cfg, cfg.format == "csv" ? csv : rep.dump(2));
    return falsified ? 1 : 0;
}

ordered_json build_moments_report(const RunConfig& cfg, bool& falsified) {
    std::vector<MomentConfigDesc> configs;
    if (cfg.moments.empty()) configs = default_moment_configs();
    else
        for (const auto& t : cfg.moments) configs.push_back(parse_moment(t));
    ordered_json rep = report_envelope("moments");
    rep["configs"] = ordered_json::array();
    for (const auto& mc : configs) {
        auto F = std::make_shared<Fq>(mc.p, mc.f);
        PolyQuot R(F, poly::parse(mc.pi, *F), mc.n);
        CharacterFamily fam(R);
        ordered_json jc{{"q", F->q()},
                        {"pi", poly::to_string(R.pi())},
                        {"n", mc.n},
                        {"k", mc.k},
                        {"family_size", fam.family_size()},
                        {"family_size_closed_form", fam.family_size_closed_form()},
                        {"family_size_reference", fam.family_size_reference()}};
        bool fam_ok = fam.family_size() == fam.family_size_closed_form();
        bool fe_ok = true;
        for (const auto& chi : fam.family()) {
            auto L = l_coefficients(fam, chi);
            fe_ok = fe_ok && epsilon_modulus_exact(fam, L) && functional_equation_exact(fam, L);
        }
        jc["functional_equation_ok"] = fe_ok;
        bool cgh_ok = true, dual_ok = true, cfkrs_ok = true, eps_ok = true;
        ordered_json twists = ordered_json::array();
        for (const auto& a : R.units()) {
            for (const auto& d : enumerate_diagonals(fam, a, R.N(), R.N(), false)) {
                auto direct = c_gh_direct(fam, a, d).rational_value();
                cgh_ok = cgh_ok && direct && *direct == c_gh_closed(fam, a, d);
            }
            for (int d1 = 0; d1 <= R.N(); ++d1)
                for (int d2 = 0; d2 <= R.N(); ++d2)
                    dual_ok = dual_ok && moment_coeff_dual(fam, a, d1, d2).equal;
            auto ck = cfkrs_k1_check(fam, a);
            cfkrs_ok = cfkrs_ok && ck.within_explicit && ck.within_sharper;
            auto em = epsilon_moment_check(fam, a, mc.k);
            eps_ok = eps_ok && em.corrected_minus;
            twists.push_back(ordered_json{{"a", poly::to_string(a)},
                                          {"cfkrs_total_diff", ck.total_coeff_diff},
                                          {"epsilon_convention", em.resolved}});
        }
        auto lb = epsilon_moment_lower_bound(fam, mc.k);
        jc["c_gh_ok"] = cgh_ok;
        jc["moment_coeff_dual_ok"] = dual_ok;
        jc["cfkrs_ok"] = cfkrs_ok;
        jc["epsilon_identity_ok"] = eps_ok;
        jc["epsilon_second_moment_ok"] = lb.second_moment_exact;
        jc["epsilon_nonvanishing"] =
            ordered_json{{"count", lb.nonvanishing_count},
                         {"printed_bound", lb.printed_count_bound},
                         {"consistent_bound", lb.consistent_count_bound}};
        jc["epsilon_max_abs"] = lb.max_abs;
        jc["epsilon_power_target"] = lb.power_target;
        jc["twists"] = twists;
        bool cfg_ok = fam_ok && fe_ok && cgh_ok && dual_ok && cfkrs_ok && eps_ok &&
                      lb.second_moment_exact;
        jc["ok"] = cfg_ok;
        falsified = falsified || !cfg_ok;
        rep["configs"].push_back(jc);
    }
    rep["falsified"] = falsified;
    return rep;
}

int cmd_moments(const RunConfig& cfg) {
    bool falsified = false;
    ordered_json rep = build_moments_report(cfg, falsified);
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "q,pi,n,k,family_size,functional_equation_ok,c_gh_ok,moment_coeff_dual_ok,"
               "cfkrs_ok,epsilon_identity_ok,epsilon_second_moment_ok,ok";
        for (const auto& jc : rep["configs"])
            csv << "\n" << jc["q"] << "," << jc["pi"].get<std::string>() << "," << jc["n"] << ","
                << jc["k"] << "," << jc["family_size"] << "," << jc["functional_equation_ok"]
                << "," << jc["c_gh_ok"] << "," << jc["moment_coeff_dual_ok"] << ","
                << jc["cfkrs_ok"] << "," << jc["epsilon_identity_ok"] << ","
                << jc["epsilon_second_moment_ok"] << "," << jc["ok"];
        emit(cfg, csv.str());
        return falsified ? 1 : 0;
    }
    emit(cfg, rep.dump(2));
    return falsified ? 1 : 0;
}

int cmd_sweep(const RunConfig& cfg) {
    RunConfig sub = cfg;
    sub.out.clear();
    sub.format = "json";
    std::string verify_payload;
    int rc_verify = cmd_verify(sub, &verify_payload);
    bool falsified = rc_verify != 0;
    ordered_json rep = report_envelope("sweep");
    rep["verify"] = ordered_json::parse(verify_payload);
    rep["intervals"] = build_intervals_report(cfg, falsified, nullptr);
    rep["moments"] = build_moments_report(cfg, falsified);
    rep["falsified"] = falsified;
    emit(cfg, rep.dump(2));
    return falsified ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wild Kloosterman sum laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "key = value configuration file");
    app.add_option("--spec", cfg.specs, "ring descriptor kind:p=..,f=..,e=..,n=.. (repeatable)");
    app.add_option("--k", cfg.ks, "tuple lengths k (repeatable)");
    app.add_option("--n-range", cfg.n_range, "lo:hi, replaces n of every --spec");
    app.add_option("--psi-seed", cfg.psi_seed, "additive character seed");
    app.add_option("--budget", cfg.budget, "enumeration budget (naive tuple count)");
    app.add_option("--workers", cfg.workers, "worker threads (0 = all); never changes output bytes");
    app.add_option("--out", cfg.out, "output path (default stdout)");
    app.add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--method", cfg.method, "brute|stationary|both")
        ->check(CLI::IsMember({"brute", "stationary", "both"}));
    app.add_option("--interval", cfg.intervals, "interval config q=..,k=..,n=.. (repeatable)");
    app.add_option("--moment", cfg.moments, "moment config q=..,pi=..,n=..,k=.. (repeatable)");

    auto* c_params = app.add_subcommand("params", "derived invariants per (ring, k)");
    auto* c_kl = app.add_subcommand("kl", "Kloosterman values per x");
    auto* c_verify = app.add_subcommand("verify", "bounds, vanishing and second-moment checks");
    auto* c_intervals = app.add_subcommand("intervals", "short-interval divisor-sum checks");
    auto* c_moments = app.add_subcommand("moments", "Dirichlet character moment checks");
    auto* c_sweep = app.add_subcommand("sweep", "verify + intervals + moments in one report");

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) {
            RunConfig file_cfg = cfg;
            // file values fill anything the command line did not set
            file_cfg.specs.clear();
            file_cfg.ks.clear();
            file_cfg.intervals.clear();
            file_cfg.moments.clear();
            apply_config_file(config_path, file_cfg);
            if (cfg.specs.empty()) cfg.specs = file_cfg.specs;
            if (cfg.ks.empty()) cfg.ks = file_cfg.ks;
            if (cfg.intervals.empty()) cfg.intervals = file_cfg.intervals;
            if (cfg.moments.empty()) cfg.moments = file_cfg.moments;
            if (app.count("--n-range") == 0) cfg.n_range = file_cfg.n_range;
            if (app.count("--psi-seed") == 0) cfg.psi_seed = file_cfg.psi_seed;
            if (app.count("--budget") == 0) cfg.budget = file_cfg.budget;
            if (app.count("--workers") == 0) cfg.workers = file_cfg.workers;
            if (app.count("--out") == 0) cfg.out = file_cfg.out;
            if (app.count("--format") == 0) cfg.format = file_cfg.format;
            if (app.count("--method") == 0) cfg.method = file_cfg.method;
        }
        if (c_params->parsed()) return cmd_params(cfg);
        if (c_kl->parsed()) return cmd_kl(cfg);
        if (c_verify->parsed()) return cmd_verify(cfg);
        if (c_intervals->parsed()) return cmd_intervals(cfg);
        if (c_moments->parsed()) return cmd_moments(cfg);
        if (c_sweep->parsed()) return cmd_sweep(cfg);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
