// Command-line driver: verification suites, constants, bound tables,
// Monte Carlo simulation and exact-enumeration oracle runs, all emitting
// self-describing CSV. Runs are fully determined by their config: no clock,
// environment or hidden state enters any output.
//
// Exit codes:
//   0  success, all checks passed
//   1  verification failure (an inequality or oracle exactness check failed)
//   2  statistical check failure (simulated tail frequency above its bound)
//   3  usage error (unknown flag, unknown config key, malformed value)
//   4  config file unreadable or not valid JSON
//   5  parameter outside its domain
//   10 internal error

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "massbound/csv.hpp"
#include "massbound/distribution.hpp"
#include "massbound/exact.hpp"
#include "massbound/extremal.hpp"
#include "massbound/grids.hpp"
#include "massbound/occupancy.hpp"
#include "massbound/simulate.hpp"
#include "massbound/verify.hpp"
#include "massbound/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitStatFail = 2;
constexpr int kExitUsage = 3;
constexpr int kExitConfigFile = 4;
constexpr int kExitDomain = 5;
constexpr int kExitInternal = 10;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad number '") + item + "' in " + what);
        }
    }
    if (values.empty()) throw UsageError(std::string(what) + " must not be empty");
    return values;
}

// "uniform:K" | "zipf:K:ALPHA" | "geometric:K:RHO" | "explicit:P1,P2,..."
// -> canonical {"kind": ..., "params": {...}} form
json dist_spec_to_json(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("distribution spec must look like kind:params");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    std::vector<std::string> parts;
    {
        std::istringstream in(rest);
        std::string item;
        while (std::getline(in, item, ':')) parts.push_back(item);
    }
    try {
        if (kind == "uniform" && parts.size() == 1) {
            return json{{"kind", "uniform"}, {"params", {{"k", std::stoi(parts[0])}}}};
        }
        if (kind == "zipf" && parts.size() == 2) {
            return json{{"kind", "zipf"},
                        {"params", {{"k", std::stoi(parts[0])}, {"alpha", std::stod(parts[1])}}}};
        }
        if ((kind == "geometric" || kind == "truncated-geometric") && parts.size() == 2) {
            return json{{"kind", "truncated-geometric"},
                        {"params", {{"k", std::stoi(parts[0])}, {"rho", std::stod(parts[1])}}}};
        }
        if (kind == "explicit" && parts.size() == 1) {
            return json{{"kind", "explicit"},
                        {"params", {{"atoms", parse_double_list(parts[0], "explicit atom list")}}}};
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("bad number in distribution spec '" + spec + "'");
    }
    throw UsageError("unknown or malformed distribution spec '" + spec + "'");
}

void reject_unknown_keys(const json& object, const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (const auto& a : allowed) known = known || key == a;
        if (!known) throw UsageError("unknown key '" + key + "' in " + where);
    }
}

massbound::DiscreteDistribution distribution_from_json(const json& d) {
    if (d.is_string()) return distribution_from_json(dist_spec_to_json(d.get<std::string>()));
    if (!d.is_object() || !d.contains("kind") || !d.contains("params")) {
        throw UsageError("distribution must be a kind:params spec string or {kind, params} object");
    }
    reject_unknown_keys(d, {"kind", "params"}, "distribution");
    const std::string kind = d.at("kind").get<std::string>();
    const json& params = d.at("params");
    if (kind == "uniform") {
        reject_unknown_keys(params, {"k"}, "uniform params");
        return massbound::make_uniform(params.at("k").get<int>());
    }
    if (kind == "zipf") {
        reject_unknown_keys(params, {"k", "alpha"}, "zipf params");
        return massbound::make_zipf(params.at("k").get<int>(), params.at("alpha").get<double>());
    }
    if (kind == "truncated-geometric" || kind == "geometric") {
        reject_unknown_keys(params, {"k", "rho"}, "truncated-geometric params");
        return massbound::make_truncated_geometric(params.at("k").get<int>(),
                                                   params.at("rho").get<double>());
    }
    if (kind == "explicit") {
        reject_unknown_keys(params, {"atoms"}, "explicit params");
        return massbound::make_explicit(params.at("atoms").get<std::vector<double>>());
    }
    throw UsageError("unknown distribution kind '" + kind + "'");
}

struct GridSpec {
    int p_points = 0;
    int t_points = 0;
};

GridSpec parse_grid_spec(const std::string& text) {
    GridSpec g;
    char x = 0;
    std::istringstream in(text);
    if (!(in >> g.p_points >> x >> g.t_points) || x != 'x' || !in.eof() || g.p_points < 3 ||
        g.t_points < 2) {
        throw UsageError("grid spec must look like 2001x1201, got '" + text + "'");
    }
    return g;
}

struct LambdaGrid {
    double lo = -20.0;
    double hi = 20.0;
    int count = 81;
};

LambdaGrid parse_lambda_grid(const std::string& text) {
    LambdaGrid g;
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(item);
    try {
        if (parts.size() != 3) throw std::invalid_argument(text);
        size_t pos = 0;
        g.lo = std::stod(parts[0], &pos);
        g.hi = std::stod(parts[1]);
        g.count = std::stoi(parts[2]);
        if (!(g.lo < g.hi) || g.count < 2) throw std::invalid_argument(text);
    } catch (const std::exception&) {
        throw UsageError("lambda grid spec must look like LO:HI:COUNT, got '" + text + "'");
    }
    return g;
}

// ---------------------------------------------------------------- commands

int run_constants(double tol, const std::string& out_path) {
    const massbound::ExtremalResult result = massbound::find_x0(tol);
    const json config{{"command", "constants"}, {"tol", tol}, {"out", out_path}};
    massbound::write_output(out_path,
                            massbound::csv_preamble(config.dump()) + massbound::constants_csv(result));
    return kExitOk;
}

int run_bounds(long long n, const std::string& eps_text, const std::string& out_path) {
    const std::vector<double> eps = parse_double_list(eps_text, "--eps");
    const double c0 = massbound::default_c0();
    std::vector<massbound::TailBound> rows;
    rows.reserve(eps.size());
    for (const double e : eps) rows.push_back(massbound::tail_bound(n, e, c0));
    const json config{{"command", "bounds"}, {"n", n}, {"eps", eps}, {"out", out_path}};
    massbound::write_output(out_path,
                            massbound::csv_preamble(config.dump()) + massbound::bounds_csv(rows));
    return kExitOk;
}

int run_verify(const std::string& suite, double tol, const std::optional<std::string>& grid_text,
               const std::string& out_path) {
    massbound::VerifyOptions opt;
    opt.tolerance = tol;
    if (grid_text) {
        const GridSpec g = parse_grid_spec(*grid_text);
        opt.p_points = g.p_points;
        opt.t_points = g.t_points;
        opt.s_points = g.t_points;
        opt.lambda_points = std::max(2, g.t_points);
    }

    std::vector<massbound::SuiteResult> suites;
    if (suite == "all") {
        suites = massbound::verify_all(opt, massbound::default_c0());
    } else if (suite == "ks") {
        suites.push_back(massbound::verify_ks(opt));
    } else if (suite == "refine") {
        suites.push_back(massbound::verify_refine(opt));
    } else if (suite == "hs") {
        suites.push_back(massbound::verify_hs(opt));
    } else if (suite == "lamp") {
        suites.push_back(massbound::verify_lamp(opt, massbound::default_c0()));
    } else if (suite == "internal") {
        suites.push_back(massbound::verify_internal(opt, massbound::default_c0()));
    } else if (suite == "signs") {
        suites.push_back(massbound::verify_signs(opt));
    } else {
        throw UsageError("unknown suite '" + suite + "' (ks|refine|hs|lamp|internal|signs|all)");
    }

    json config{{"command", "verify"}, {"suite", suite}, {"tol", tol}, {"out", out_path}};
    if (grid_text) config["grid"] = *grid_text;
    massbound::write_output(out_path,
                            massbound::csv_preamble(config.dump()) + massbound::verify_csv(suites));
    for (const auto& s : suites) {
        if (!s.pass) return kExitVerifyFail;
    }
    return kExitOk;
}

int run_oracle(const std::string& dist_spec, long long n, const std::string& lambda_text,
               const std::string& out_path) {
    const json dist_json = dist_spec_to_json(dist_spec);
    const massbound::DiscreteDistribution dist = distribution_from_json(dist_json);
    const LambdaGrid lg = parse_lambda_grid(lambda_text);
    const std::vector<double> lambdas = massbound::linspace(lg.lo, lg.hi, lg.count);

    const massbound::ExactDistribution dependent = massbound::exact_missing_mass_distribution(dist, n);
    const massbound::ExactDistribution independent = massbound::exact_independent_distribution(dist, n);

    const json config{{"command", "oracle"},
                      {"distribution", dist_json},
                      {"n", n},
                      {"lambda_grid", {{"lo", lg.lo}, {"hi", lg.hi}, {"count", lg.count}}},
                      {"out", out_path}};
    massbound::write_output(out_path, massbound::csv_preamble(config.dump()) +
                                          massbound::oracle_csv(dependent, independent, lambdas));

    // exactness checks: enumerated means against the closed form, MGF
    // domination, variance ordering
    const double expected = massbound::expected_missing_mass(dist, n);
    bool ok = std::fabs(dependent.mean() - expected) <= 1e-12 &&
              std::fabs(independent.mean() - expected) <= 1e-12 &&
              dependent.variance() <= independent.variance();
    for (const double lambda : lambdas) {
        ok = ok && massbound::exact_mgf(dependent, lambda) <=
                       massbound::exact_mgf(independent, lambda) + 1e-12;
    }
    return ok ? kExitOk : kExitVerifyFail;
}

int run_simulate(const std::optional<std::string>& config_path,
                 const std::optional<std::string>& dist_spec, std::optional<long long> n,
                 std::optional<long long> trials, std::optional<std::uint64_t> seed,
                 const std::optional<std::string>& eps_text, bool compare_independent,
                 const std::string& out_path) {
    json file;
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) throw ConfigFileError("cannot read config file " + *config_path);
        try {
            in >> file;
        } catch (const json::parse_error& e) {
            throw ConfigFileError("config file " + *config_path + " is not valid JSON: " + e.what());
        }
        reject_unknown_keys(
            file, {"distribution", "n", "trials", "seed", "epsilons", "compare_independent"},
            "config file");
    }

    // flags override file values
    json dist_json;
    if (dist_spec) {
        dist_json = dist_spec_to_json(*dist_spec);
    } else if (file.contains("distribution")) {
        dist_json = file.at("distribution");
        if (dist_json.is_string()) dist_json = dist_spec_to_json(dist_json.get<std::string>());
    } else {
        throw UsageError("simulate needs a distribution (--dist or config file)");
    }

    massbound::SampleConfig sc;
    if (n) sc.n = *n;
    else if (file.contains("n")) sc.n = file.at("n").get<long long>();
    else throw UsageError("simulate needs --n or an n entry in the config file");

    sc.trials = trials ? *trials : (file.contains("trials") ? file.at("trials").get<long long>() : 10000);
    sc.seed = seed ? *seed : (file.contains("seed") ? file.at("seed").get<std::uint64_t>() : 0);
    if (eps_text) sc.epsilon_list = parse_double_list(*eps_text, "--eps");
    else if (file.contains("epsilons")) sc.epsilon_list = file.at("epsilons").get<std::vector<double>>();
    else sc.epsilon_list = {0.05, 0.1};
    sc.compare_independent =
        compare_independent || (file.contains("compare_independent") &&
                                file.at("compare_independent").get<bool>());

    const massbound::DiscreteDistribution dist = distribution_from_json(dist_json);
    const massbound::TailExperimentResult result =
        massbound::run_tail_experiment(dist, sc, massbound::default_c0());

    const json config{{"command", "simulate"},
                      {"distribution", dist_json},
                      {"n", sc.n},
                      {"trials", sc.trials},
                      {"seed", sc.seed},
                      {"epsilons", sc.epsilon_list},
                      {"compare_independent", sc.compare_independent},
                      {"out", out_path}};
    massbound::write_output(out_path,
                            massbound::csv_preamble(config.dump()) + massbound::simulate_csv(result));
    return result.domination_pass ? kExitOk : kExitStatFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(massbound::kArtifactName) + " " + massbound::kArtifactVersion +
                 " - missing-mass concentration bounds: verification, constants, tail bounds, "
                 "simulation and exact oracles"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run inequality verification suites");
    std::string suite = "all";
    double verify_tol = 1e-9;
    std::optional<std::string> grid_text;
    std::string verify_out = "-";
    verify->add_option("--suite", suite, "ks|refine|hs|lamp|internal|signs|all")
        ->default_str("all");
    verify->add_option("--tol", verify_tol, "absolute log-domain tolerance")->default_str("1e-9");
    verify->add_option("--grid", grid_text, "grid override, e.g. 501x301");
    verify->add_option("--out", verify_out, "output CSV path, - for stdout")->default_str("-");

    // constants
    auto* constants = app.add_subcommand("constants", "compute x0 and C0");
    double constants_tol = 1e-12;
    std::string constants_out = "-";
    constants->add_option("--tol", constants_tol, "optimizer x-tolerance")->default_str("1e-12");
    constants->add_option("--out", constants_out, "output CSV path, - for stdout")->default_str("-");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "tabulate tail bounds for n and epsilon list");
    long long bounds_n = 0;
    std::string bounds_eps;
    std::string bounds_out = "-";
    bounds->add_option("--n", bounds_n, "sample size")->required();
    bounds->add_option("--eps", bounds_eps, "comma-separated epsilon list")->required();
    bounds->add_option("--out", bounds_out, "output CSV path, - for stdout")->default_str("-");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo tail experiment");
    std::optional<std::string> sim_config;
    std::optional<std::string> sim_dist;
    std::optional<long long> sim_n;
    std::optional<long long> sim_trials;
    std::optional<std::uint64_t> sim_seed;
    std::optional<std::string> sim_eps;
    bool sim_compare_independent = false;
    std::string sim_out = "-";
    simulate->add_option("--config", sim_config, "JSON config file; flags override its values");
    simulate->add_option("--dist", sim_dist, "distribution spec, e.g. uniform:20 or zipf:3:1");
    simulate->add_option("--n", sim_n, "sample size");
    simulate->add_option("--trials", sim_trials, "number of simulated samples");
    simulate->add_option("--seed", sim_seed, "64-bit master seed");
    simulate->add_option("--eps", sim_eps, "comma-separated epsilon list");
    simulate->add_flag("--compare-independent", sim_compare_independent,
                       "also simulate the independent analogue U_n'");
    simulate->add_option("--out", sim_out, "output CSV path, - for stdout")->default_str("-");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact enumeration of U_n and U_n' laws");
    std::string oracle_dist;
    long long oracle_n = 0;
    std::string oracle_lambda = "-20:20:81";
    std::string oracle_out = "-";
    oracle->add_option("--dist", oracle_dist, "distribution spec, e.g. uniform:2")->required();
    oracle->add_option("--n", oracle_n, "sample size")->required();
    oracle->add_option("--lambda-grid", oracle_lambda, "LO:HI:COUNT grid for MGF domination")
        ->default_str("-20:20:81");
    oracle->add_option("--out", oracle_out, "output CSV path, - for stdout")->default_str("-");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*verify) return run_verify(suite, verify_tol, grid_text, verify_out);
        if (*constants) return run_constants(constants_tol, constants_out);
        if (*bounds) return run_bounds(bounds_n, bounds_eps, bounds_out);
        if (*simulate) {
            return run_simulate(sim_config, sim_dist, sim_n, sim_trials, sim_seed, sim_eps,
                                sim_compare_independent, sim_out);
        }
        if (*oracle) return run_oracle(oracle_dist, oracle_n, oracle_lambda, oracle_out);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigFile;
    } catch (const json::exception& e) {
        std::cerr << "error: bad config value: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
