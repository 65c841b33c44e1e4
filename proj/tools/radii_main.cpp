// radii: circumradii of convex bodies under gauge bodies, colourful selection
// procedures, inequality check suites, and conjecture explorers. JSON in,
// JSON/NDJSON out; all randomness is seeded and reproducible.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "radii/radii.hpp"

namespace {

using radii::jsonv;

constexpr int exit_ok = 0;
constexpr int exit_failed_checks = 1;
constexpr int exit_input = 2;
constexpr int exit_solver = 3;
constexpr int exit_budget = 4;

jsonv load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw radii::InputError("cannot open file: " + path);
    try {
        return jsonv::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw radii::InputError(std::string("parse error in ") + path + ": " + e.what());
    }
}

std::size_t sum_budget_from_env() {
    const char* env = std::getenv("RADII_MAX_SUM_POINTS");
    if (!env) return radii::default_max_sum_points;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
        throw radii::InputError("RADII_MAX_SUM_POINTS must be a positive integer");
    return static_cast<std::size_t>(v);
}

void emit(const jsonv& j) { std::fputs((radii::dump12(j) + "\n").c_str(), stdout); }

int fail(int code, const std::string& message) {
    jsonv j;
    j["error"] = message;
    emit(j);
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return code;
}

struct CheckArgs {
    std::string suite;
    std::string instances_path;
    int random_count = 0;
    std::uint64_t seed = 0;
    std::string gauge_path;
};

radii::PointBody random_planar_unit_body(radii::Rng& rng, std::uint64_t seed) {
    // points of a balanced family on the unit circle (circumradius exactly 1,
    // inside the unit disk), plus a few interior points
    radii::BalancedSet s = radii::random_balanced_set(2, 1.0, rng.uniform_int(2, 3), seed);
    std::vector<radii::Vec> pts = s.vectors;
    for (int extra = rng.uniform_int(0, 2); extra-- > 0;)
        pts.push_back(radii::scaled(rng.unit_vec(2), rng.uniform(0.0, 0.9)));
    return radii::PointBody(2, pts);
}

int run_check(const CheckArgs& args) {
    const std::size_t budget = sum_budget_from_env();
    std::optional<radii::Gauge> fixed_gauge;
    if (!args.gauge_path.empty()) fixed_gauge = radii::parse_gauge(load_json(args.gauge_path));
    const bool needs_gauge = args.suite == "factor-j" || args.suite == "max-bound";

    struct Instance {
        std::vector<radii::PointBody> bodies;
        std::optional<radii::Gauge> gauge;
        std::uint64_t seed = 0;
    };
    std::vector<Instance> instances;
    if (!args.instances_path.empty()) {
        const jsonv j = load_json(args.instances_path);
        if (!j.contains("instances") || !j["instances"].is_array())
            throw radii::InputError("instances file: expected {\"instances\": [...]}");
        for (const jsonv& ji : j["instances"]) {
            Instance inst;
            if (!ji.contains("bodies")) throw radii::InputError("instance: missing \"bodies\"");
            for (const jsonv& jb : ji["bodies"]) inst.bodies.push_back(radii::parse_body(jb));
            if (ji.contains("gauge")) inst.gauge = radii::parse_gauge(ji["gauge"]);
            instances.push_back(std::move(inst));
        }
    } else {
        for (int t = 0; t < args.random_count; ++t) {
            const std::uint64_t s = radii::derive_seed(args.seed, static_cast<std::uint64_t>(t));
            radii::Rng rng(s);
            Instance inst;
            inst.seed = args.seed;
            if (args.suite == "planar-three") {
                for (int i = 0; i < 3; ++i)
                    inst.bodies.push_back(
                        random_planar_unit_body(rng, radii::derive_seed(s, 50 + i)));
            } else {
                int n = rng.uniform_int(2, 3);
                if (fixed_gauge)  // polytope gauges pin the dimension
                    if (const auto* poly = std::get_if<radii::HPolytope>(&*fixed_gauge))
                        n = poly->dim;
                const int j = needs_gauge ? rng.uniform_int(1, 3) : rng.uniform_int(2, 3);
                for (int i = 0; i < j; ++i) inst.bodies.push_back(radii::random_body(rng, n));
                if (needs_gauge && !fixed_gauge) inst.gauge = radii::random_gauge(rng, n);
            }
            instances.push_back(std::move(inst));
        }
    }

    bool all_pass = true;
    std::int64_t id = 0;
    for (const Instance& inst : instances) {
        radii::InstanceReport rep;
        if (args.suite == "sqrt-j") {
            rep = radii::check_sqrt_j(inst.bodies, id, inst.seed, budget);
        } else if (args.suite == "squares") {
            rep = radii::check_sum_of_squares(inst.bodies, id, inst.seed, budget);
        } else if (args.suite == "factor-j" || args.suite == "max-bound") {
            if (!fixed_gauge && !inst.gauge)
                throw radii::InputError(args.suite +
                                        ": no gauge given (use --gauge or a per-instance gauge)");
            const radii::Gauge& g = fixed_gauge ? *fixed_gauge : *inst.gauge;
            rep = args.suite == "factor-j"
                      ? radii::check_factor_j_gauge(inst.bodies, g, id, inst.seed, budget)
                      : radii::check_max_lower_bound(inst.bodies, g, id, inst.seed, budget);
        } else if (args.suite == "planar-three") {
            rep = radii::check_planar_three(inst.bodies, id, inst.seed);
        } else {
            throw radii::InputError("unknown suite: " + args.suite);
        }
        emit(radii::to_json(rep));
        all_pass = all_pass && rep.pass;
        ++id;
    }
    return all_pass ? exit_ok : exit_failed_checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circumradius computations and vector-sum inequality harnesses"};
    app.require_subcommand(1);

    // ---- circumradius ----
    std::string body_path, gauge_path;
    bool want_certificate = false;
    CLI::App* cmd_circ = app.add_subcommand("circumradius", "circumradius of a body w.r.t. a gauge");
    cmd_circ->add_option("--body", body_path, "body JSON file")->required();
    cmd_circ->add_option("--gauge", gauge_path, "gauge JSON file")->required();
    cmd_circ->add_flag("--certificate", want_certificate, "attach the optimality certificate");

    // ---- select ----
    std::string sets_path, mode;
    CLI::App* cmd_select = app.add_subcommand("select", "colourful selection over balanced sets");
    cmd_select->add_option("--sets", sets_path, "sets JSON file")->required();
    cmd_select->add_option("--mode", mode, "greedy | brute | minmax")->required();

    // ---- check ----
    CheckArgs check_args;
    CLI::App* cmd_check = app.add_subcommand("check", "run an inequality suite, one report per line");
    cmd_check->add_option("--suite", check_args.suite, "sqrt-j | squares | factor-j | max-bound | planar-three")
        ->required();
    auto* inst_opt = cmd_check->add_option("--instances", check_args.instances_path, "instances JSON file");
    auto* rand_opt = cmd_check->add_option("--random", check_args.random_count, "number of random instances");
    cmd_check->add_option("--seed", check_args.seed, "seed for random instances");
    cmd_check->add_option("--gauge", check_args.gauge_path, "gauge JSON file (factor-j / max-bound)");
    inst_opt->excludes(rand_opt);

    // ---- explore ----
    std::string conjecture;
    int explore_n = 2, trials = 0;
    std::uint64_t explore_seed = 0;
    std::string p_text = "2";
    CLI::App* cmd_explore = app.add_subcommand("explore", "conjecture exploration report");
    cmd_explore->add_option("--conjecture", conjecture, "lp | n-plus-one")->required();
    cmd_explore->add_option("--n", explore_n, "ambient dimension")->required();
    cmd_explore->add_option("--p", p_text, "p in [2, inf] for the lp conjecture (number or \"inf\")");
    cmd_explore->add_option("--trials", trials, "random trials")->required();
    cmd_explore->add_option("--seed", explore_seed, "seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::stringstream ss;
        ss << e.get_name() << ": " << e.what();
        return fail(exit_input, ss.str());
    }

    try {
        if (cmd_circ->parsed()) {
            const radii::PointBody body = radii::parse_body(load_json(body_path));
            const radii::Gauge gauge = radii::parse_gauge(load_json(gauge_path));
            const radii::CircumResult r = radii::circumradius(body, gauge);
            jsonv out;
            out["radius"] = r.radius;
            out["center"] = r.center;
            if (want_certificate) {
                if (r.radius > radii::eps_pos)
                    out["certificate"] = radii::certificate_to_json(
                        radii::extract_certificate(body, gauge, r));
                else
                    out["certificate"] = nullptr;  // radius 0: no certificate exists
            }
            emit(out);
            return exit_ok;
        }
        if (cmd_select->parsed()) {
            const radii::SetsInput in = radii::parse_sets(load_json(sets_path));
            jsonv out;
            if (mode == "greedy" || mode == "brute") {
                const radii::SelectionResult r =
                    mode == "greedy" ? radii::greedy_select(in.sets, in.c)
                                     : radii::brute_force_max(in.sets, in.c, sum_budget_from_env());
                out["indices"] = r.indices;
                out["achieved"] = r.achieved;
                out["guarantee"] = r.guarantee;
            } else if (mode == "minmax") {
                const radii::MinmaxResult r = radii::minmax_center(in.sets, sum_budget_from_env());
                out["c_star"] = r.c_star;
                out["value"] = r.value;
            } else {
                throw radii::InputError("unknown mode: " + mode);
            }
            emit(out);
            return exit_ok;
        }
        if (cmd_check->parsed()) {
            if (check_args.instances_path.empty() && check_args.random_count <= 0)
                throw radii::InputError("check: provide --instances FILE or --random N");
            return run_check(check_args);
        }
        if (cmd_explore->parsed()) {
            radii::ConjectureReport rep;
            if (conjecture == "lp") {
                const double p = p_text == "inf" ? std::numeric_limits<double>::infinity()
                                                 : std::stod(p_text);
                rep = radii::explore_lp_conjecture(explore_n, p, trials, explore_seed);
            } else if (conjecture == "n-plus-one") {
                rep = radii::explore_n_plus_one(explore_n, trials, explore_seed);
            } else {
                throw radii::InputError("unknown conjecture: " + conjecture);
            }
            emit(radii::to_json(rep));
            return exit_ok;
        }
    } catch (const radii::BudgetExceeded& e) {
        return fail(exit_budget, e.what());
    } catch (const radii::SolverFailure& e) {
        return fail(exit_solver, e.what());
    } catch (const radii::NotInHull& e) {
        jsonv j;
        j["error"] = e.what();
        j["separator"] = e.separator;
        j["margin"] = e.margin;
        emit(j);
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_input;
    } catch (const std::invalid_argument& e) {
        return fail(exit_input, e.what());
    } catch (const radii::NoCertificate& e) {
        return fail(exit_input, e.what());
    } catch (const radii::BalanceViolation& e) {
        return fail(exit_input, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(exit_input, e.what());
    } catch (const std::exception& e) {
        return fail(exit_solver, e.what());
    }
    return exit_input;
}
