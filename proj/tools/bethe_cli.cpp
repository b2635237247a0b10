// Command-line surface for verifying, reproducing and exploring Bethe
// solutions over Kac-Moody Cartan data. All arithmetic is exact; all
// output is canonically ordered JSON (or DOT for graphs).
//
// Exit codes: 0 on a positive outcome (Bethe / no obstruction / success),
// 1 on a negative domain outcome (non-Bethe verdict, not fertile,
// obstruction fired), 2 on malformed input.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bethe/io.hpp"

namespace {

using bethe::Rational;
using bethe::Tuple;
using bethe::Verdict;
using nlohmann::json;

constexpr int kExitNegative = 1;
constexpr int kExitMalformed = 2;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bethe::ParseError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw bethe::ParseError(path + ": " + e.what());
    }
}

json parse_inline_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw bethe::ParseError(what + ": " + e.what());
    }
}

Tuple tuple_from_options(const json& problem_file, const std::string& tuple_arg, int rank) {
    if (!tuple_arg.empty()) return bethe::parse_tuple(parse_inline_json(tuple_arg, "--tuple"), rank);
    if (bethe::problem_has_tuple(problem_file)) return bethe::parse_tuple(problem_file["tuple"], rank);
    throw bethe::ParseError("no tuple given: add a 'tuple' field to the problem file or pass --tuple");
}

std::size_t default_max_nodes() {
    if (const char* env = std::getenv("BETHE_MAX_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    }
    return 256;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json direction_diagnostics(const bethe::BetheProblem& p, const Tuple& t) {
    json dirs = json::array();
    for (int i = 0; i < p.rank(); ++i) {
        json d;
        d["direction"] = i + 1;
        d["divisible"] = bethe::divisibility_check(p, t, i);
        auto line = bethe::fertility_solve(p, t, i);
        d["fertile"] = line.has_value();
        if (line) {
            d["canonical_descendant"] = bethe::polynomial_to_json(line->canonical.poly());
            d["degree_changed"] = line->degree_changed;
        }
        d["expected_descendant_degree"] = bethe::expected_descendant_degree(p, t, i);
        dirs.push_back(d);
    }
    return dirs;
}

int run_verify(const json& problem_file, const std::string& tuple_arg, bethe::WronskianStep step) {
    bethe::BetheProblem p = bethe::parse_problem(problem_file, step);
    Tuple t = tuple_from_options(problem_file, tuple_arg, p.rank());

    const Verdict verdict = bethe::is_bethe(p, t);
    const auto genericity = bethe::check_generic(p, t);
    const auto direct = bethe::direct_bethe_check(p, t);

    json out;
    out["wronskian_step"] = to_string(step);
    out["verdict"] = to_string(verdict);
    out["weight_at_infinity"] = bethe::weight_to_json(bethe::weight_at_infinity(p, t));
    out["generic"] = genericity.generic;
    out["genericity_violations"] = genericity.violations;
    out["directions"] = direction_diagnostics(p, t);
    json jd;
    jd["status"] = to_string(direct.status);
    jd["diagnostics"] = direct.diagnostics;
    out["direct_check"] = jd;
    emit(out);
    return verdict == Verdict::Bethe ? 0 : kExitNegative;
}

int run_reproduce(const json& problem_file, const std::string& tuple_arg, int direction,
                  const std::string& c_arg, int c_samples, bethe::WronskianStep step) {
    bethe::BetheProblem p = bethe::parse_problem(problem_file, step);
    Tuple t = tuple_from_options(problem_file, tuple_arg, p.rank());
    if (direction < 1 || direction > p.rank())
        throw bethe::ParseError("--direction must be between 1 and " + std::to_string(p.rank()));
    const int i = direction - 1;

    auto line = bethe::fertility_solve(p, t, i);
    if (!line) {
        json out;
        out["wronskian_step"] = to_string(step);
        out["error"] = "NotFertile";
        out["direction"] = direction;
        emit(out);
        return kExitNegative;
    }

    std::optional<Rational> chosen_c;
    Tuple descendant = t.with_entry(i, line->canonical);
    if (c_arg == "auto") {
        if (auto sample = bethe::sample_generic_member_with_c(p, t, *line, c_samples)) {
            chosen_c = sample->c;
            descendant = std::move(sample->tuple);
        }
    } else {
        Rational c = [&c_arg]() {
            try {
                return Rational::from_string(c_arg);
            } catch (const std::exception& e) {
                throw bethe::ParseError(std::string("--c: ") + e.what());
            }
        }();
        chosen_c = c;
        descendant = t.with_entry(i, bethe::ProjectivePolynomial(line->member(c)));
    }

    json out;
    out["wronskian_step"] = to_string(step);
    out["direction"] = direction;
    out["canonical"] = bethe::polynomial_to_json(line->canonical.poly());
    out["offset"] = bethe::polynomial_to_json(line->offset.poly());
    out["degree_changed"] = line->degree_changed;
    if (chosen_c)
        out["c"] = chosen_c->str();
    else
        out["c"] = nullptr;  // auto sampling found no generic member; canonical emitted
    out["descendant"] = bethe::tuple_to_json(descendant);
    out["generic"] = bethe::is_generic(p, descendant);
    out["weight_source"] = bethe::weight_to_json(bethe::weight_at_infinity(p, t));
    out["weight_descendant"] = bethe::weight_to_json(bethe::weight_at_infinity(p, descendant));
    emit(out);
    return 0;
}

int run_population(const json& problem_file, const std::string& seed_arg, std::size_t max_nodes,
                   std::size_t max_depth, int c_samples, const std::string& format,
                   const std::string& out_path, bethe::WronskianStep step) {
    bethe::BetheProblem p = bethe::parse_problem(problem_file, step);
    Tuple seed = Tuple::ones(p.rank());
    if (!seed_arg.empty())
        seed = bethe::parse_tuple(parse_inline_json(seed_arg, "--seed"), p.rank());
    else if (bethe::problem_has_tuple(problem_file))
        seed = bethe::parse_tuple(problem_file["tuple"], p.rank());

    bethe::ExplorationLimits limits;
    limits.max_nodes = max_nodes;
    limits.max_depth = max_depth;
    limits.c_samples = c_samples;

    bethe::PopulationGraph graph;
    try {
        graph = bethe::explore(p, seed, limits);
    } catch (const bethe::SeedNotFertileError& e) {
        json out;
        out["wronskian_step"] = to_string(step);
        out["error"] = "SeedNotFertile";
        out["direction"] = e.direction + 1;
        emit(out);
        return kExitNegative;
    }

    std::string payload = format == "dot" ? bethe::graph_to_dot(graph)
                                          : bethe::graph_to_json(graph).dump(2) + "\n";

    // Orbit-containment report (weights realized vs the shifted orbit of
    // the seed weight, sampled with a generous cap).
    const auto realized = bethe::weights_realized(graph);
    const auto orbit = bethe::shifted_orbit(p.cartan(), bethe::weight_at_infinity(p, seed),
                                            std::max<std::size_t>(4 * graph.nodes.size() + 16, 256));
    bool contained = true;
    for (const auto& w : realized)
        if (!std::binary_search(orbit.weights.begin(), orbit.weights.end(), w)) contained = false;

    json summary;
    summary["wronskian_step"] = to_string(step);
    summary["nodes"] = graph.nodes.size();
    summary["edges"] = graph.edges.size();
    summary["truncated"] = graph.truncated;
    json jw = json::array();
    for (const auto& w : realized) jw.push_back(bethe::weight_to_json(w));
    summary["weights_realized"] = jw;
    summary["orbit_containment"] = contained;
    summary["orbit_truncated"] = orbit.truncated;

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw bethe::ParseError("cannot write file: " + out_path);
        out << payload;
        emit(summary);
    } else {
        std::cout << payload;
        std::cerr << summary.dump(2) << "\n";
    }
    return 0;
}

int run_feasibility(const json& problem_file, const std::string& degrees_arg, std::size_t max_nodes,
                    bethe::WronskianStep step) {
    bethe::BetheProblem p = bethe::parse_problem(problem_file, step);
    auto degrees = bethe::parse_integer_vector(parse_inline_json(degrees_arg, "--degrees"), "--degrees");
    if (static_cast<int>(degrees.size()) != p.rank())
        throw bethe::ParseError("--degrees must have length " + std::to_string(p.rank()));
    for (long long l : degrees)
        if (l < 0) throw bethe::ParseError("--degrees must be nonnegative");

    const bool fixed = bethe::obstruction_fixed_point(p, degrees);
    const auto cone = bethe::obstruction_cone(p, degrees, max_nodes);
    const bethe::Weight w_inf = bethe::weight_at_infinity(p, degrees);
    const auto orbit = bethe::shifted_orbit(p.cartan(), w_inf, std::min<std::size_t>(max_nodes, 64));

    json out;
    out["wronskian_step"] = to_string(step);
    out["weight_at_infinity"] = bethe::weight_to_json(w_inf);
    out["fixed_point_obstruction"] = fixed;
    json jc;
    jc["fires"] = cone.obstructed;
    jc["truncated"] = cone.truncated;
    out["cone_obstruction"] = jc;
    json jo = json::array();
    for (const auto& w : orbit.weights) jo.push_back(bethe::weight_to_json(w));
    out["orbit_sample"] = jo;
    out["orbit_truncated"] = orbit.truncated;
    emit(out);
    return (fixed || cone.obstructed) ? kExitNegative : 0;
}

int run_orbit(const json& problem_file, const std::string& weight_arg, std::size_t max_nodes,
              bethe::WronskianStep step) {
    bethe::BetheProblem p = bethe::parse_problem(problem_file, step);
    bethe::Weight w = bethe::parse_weight(parse_inline_json(weight_arg, "--weight"), "--weight");
    if (w.rank() != p.rank())
        throw bethe::ParseError("--weight must have length " + std::to_string(p.rank()));
    const auto orbit = bethe::shifted_orbit(p.cartan(), w, max_nodes);
    json out;
    out["wronskian_step"] = to_string(step);
    json jw = json::array();
    for (const auto& v : orbit.weights) jw.push_back(bethe::weight_to_json(v));
    out["weights"] = jw;
    out["size"] = orbit.weights.size();
    out["truncated"] = orbit.truncated;
    emit(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and reproduction of XXX Bethe-equation solutions"};
    app.require_subcommand(1);

    std::string step_arg = "hi";
    app.add_option("--wronskian-step", step_arg, "Fertility-equation shift step convention")
        ->check(CLI::IsMember({"hi", "hi/2"}))
        ->capture_default_str();

    std::string problem_path, tuple_arg, seed_arg, c_arg = "auto", degrees_arg, weight_arg;
    std::string format = "json", out_path;
    int direction = 0, c_samples = 64;
    std::size_t max_nodes = default_max_nodes(), max_depth = 16;

    auto* verify = app.add_subcommand("verify", "Decide the Bethe verdict for a tuple");
    verify->add_option("problem", problem_path, "Problem file (JSON)")->required();
    verify->add_option("--tuple", tuple_arg, "Tuple as JSON coefficient arrays");

    auto* reproduce = app.add_subcommand("reproduce", "One reproduction step in a direction");
    reproduce->add_option("problem", problem_path, "Problem file (JSON)")->required();
    reproduce->add_option("--tuple", tuple_arg, "Tuple as JSON coefficient arrays");
    reproduce->add_option("--direction", direction, "Direction (1-based)")->required();
    reproduce->add_option("--c", c_arg, "Family parameter: rational or \"auto\"")->capture_default_str();
    reproduce->add_option("--c-samples", c_samples, "Attempts for auto sampling")->capture_default_str();

    auto* population = app.add_subcommand("population", "Explore the population graph from a seed");
    population->add_option("problem", problem_path, "Problem file (JSON)")->required();
    population->add_option("--seed", seed_arg, "Seed tuple (default: the problem tuple, else (1,...,1))");
    population->add_option("--max-nodes", max_nodes, "Node cap (default: BETHE_MAX_NODES or 256)");
    population->add_option("--max-depth", max_depth, "Depth cap")->capture_default_str();
    population->add_option("--c-samples", c_samples, "Attempts for verdict sampling")->capture_default_str();
    population->add_option("--format", format, "Graph format")->check(CLI::IsMember({"json", "dot"}))->capture_default_str();
    population->add_option("--out", out_path, "Write the graph to this file");

    auto* feasibility = app.add_subcommand("feasibility", "No-solution obstructions for a degree vector");
    feasibility->add_option("problem", problem_path, "Problem file (JSON)")->required();
    feasibility->add_option("--degrees", degrees_arg, "Degree vector as JSON integers")->required();
    feasibility->add_option("--max-nodes", max_nodes, "Cone-walk cap (default: BETHE_MAX_NODES or 256)");

    auto* orbit = app.add_subcommand("orbit", "Shifted Weyl orbit of a weight");
    orbit->add_option("problem", problem_path, "Problem file (JSON; supplies the Cartan matrix)")->required();
    orbit->add_option("--weight", weight_arg, "Weight in coroot coordinates, JSON integers")->required();
    orbit->add_option("--max-nodes", max_nodes, "Orbit cap (default: BETHE_MAX_NODES or 256)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitMalformed;
    }

    try {
        const bethe::WronskianStep step = bethe::wronskian_step_from_string(step_arg);
        const nlohmann::json problem_file = load_json_file(problem_path);
        if (verify->parsed()) return run_verify(problem_file, tuple_arg, step);
        if (reproduce->parsed())
            return run_reproduce(problem_file, tuple_arg, direction, c_arg, c_samples, step);
        if (population->parsed())
            return run_population(problem_file, seed_arg, max_nodes, max_depth, c_samples, format,
                                  out_path, step);
        if (feasibility->parsed()) return run_feasibility(problem_file, degrees_arg, max_nodes, step);
        if (orbit->parsed()) return run_orbit(problem_file, weight_arg, max_nodes, step);
        return kExitMalformed;
    } catch (const bethe::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMalformed;
    }
}
