// Acceptance suite: one pass/fail line per criterion, exit code equal to
// the number of failed criteria. Every threshold is pinned here in code;
// all arithmetic is exact, so apart from the wall-clock limits there are
// no tolerances anywhere.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bethe/io.hpp"

using namespace bethe;

namespace {

namespace fs = std::filesystem;

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Rational q(long long num, long long den = 1) { return Rational(num, den); }

BetheProblem rank1_problem() {
    return BetheProblem(build_cartan({{2}}), Rational(1, 2), {Rational(0)}, {Weight({1})});
}

BetheProblem rank2_problem(std::vector<std::vector<long long>> cartan) {
    return BetheProblem(build_cartan(std::move(cartan)), Rational(1, 2), {Rational(0)},
                        {Weight({1, 1})});
}

struct ExploredCase {
    std::string name;
    BetheProblem problem;
    PopulationGraph graph;
    std::size_t expected_weights;  // 0 = truncated case, containment only
};

std::vector<ExploredCase>& explored_cases() {
    static std::vector<ExploredCase> cases;
    return cases;
}

// Criterion 1: divisibility <=> fertility over >= 100 randomized
// instances per type (A1, A2, B2, G2, affine A1), with direct-equation
// agreement wherever rational roots are complete; under 60 s.
Checker criterion1() {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    HarnessReport report = equivalence_harness(standard_problem_generators(), 100, 424242ull);
    const double elapsed = seconds_since(start);

    c.require(report.per_type.size() == 5, "expected 5 Cartan types");
    for (const auto& [name, tally] : report.per_type) {
        c.require(tally.instances == 100, name + ": expected 100 instances");
        c.require(tally.direct_applicable > 0, name + ": direct check never applicable");
    }
    for (const auto& d : report.discrepancies) c.require(false, "discrepancy: " + d);
    c.require(report.self_factor_convention_ok, "self-factor convention guard failed");
    c.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s exceeds 60s");
    std::ostringstream os;
    os << "500 instances, 0 discrepancies, " << elapsed << "s";
    if (c.ok) c.detail = os.str();
    return c;
}

// Criterion 2: the rank-1 worked chain, every value exact.
Checker criterion2() {
    Checker c;
    BetheProblem p = rank1_problem();
    Tuple seed = Tuple::ones(1);

    auto line = fertility_solve(p, seed, 0);
    c.require(line.has_value(), "seed (1) is not fertile");
    if (!line) return c;
    c.require(line->canonical.poly() == Polynomial({q(0), q(0), q(1)}),
              "canonical descendant of (1) is not x^2");

    Tuple bethe_member(std::vector<ProjectivePolynomial>{ProjectivePolynomial(line->member(q(-1)))});
    c.require(bethe_member[0].poly() == Polynomial({q(-1), q(0), q(1)}),
              "member at c = -1 is not x^2 - 1");
    c.require(is_bethe(p, bethe_member) == Verdict::Bethe, "x^2 - 1 is not Bethe");

    DirectCheckResult direct = direct_bethe_check(p, bethe_member);
    c.require(direct.status == DirectCheckStatus::Pass, "direct check failed on x^2 - 1");
    for (int j = 0; j < 2; ++j) {
        auto lhs = bethe_equation_lhs(p, direct.roots, 0, j, true);
        c.require(lhs.has_value() && *lhs == q(-1), "equation left side is not exactly -1");
    }

    c.require(weight_at_infinity(p, bethe_member) == Weight({-3}), "weight at infinity is not -3");
    c.require(shifted_reflect(p.cartan(), Weight({1}), 0) == Weight({-3}),
              "shifted reflection of 1 is not -3");
    if (c.ok) c.detail = "seed fertile, canonical x^2, x^2-1 Bethe, weight -3, equation = -1 exactly";
    return c;
}

// Criterion 3: weight-orbit realization for A2 / B2 / G2 and containment
// for the affine type at depth 4; under 60 s.
Checker criterion3() {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    explored_cases().clear();

    struct Spec {
        const char* name;
        std::vector<std::vector<long long>> cartan;
        std::size_t expected;
        ExplorationLimits limits;
    };
    ExplorationLimits closing;
    closing.max_nodes = 300;
    closing.max_depth = 30;
    ExplorationLimits g2_limits;
    g2_limits.max_nodes = 80;
    g2_limits.max_depth = 10;
    ExplorationLimits affine_limits;
    affine_limits.max_nodes = 200;
    affine_limits.max_depth = 4;

    const Spec specs[] = {
        {"A2", {{2, -1}, {-1, 2}}, 6, closing},
        {"B2", {{2, -1}, {-2, 2}}, 8, closing},
        {"G2", {{2, -1}, {-3, 2}}, 12, g2_limits},
        {"affine_A1", {{2, -2}, {-2, 2}}, 0, affine_limits},
    };

    for (const auto& spec : specs) {
        BetheProblem p = rank2_problem(spec.cartan);
        PopulationGraph g = explore(p, Tuple::ones(2), spec.limits);
        auto realized = weights_realized(g);
        OrbitResult orbit = shifted_orbit(p.cartan(), weight_at_infinity(p, Tuple::ones(2)),
                                          spec.expected > 0 ? 1000 : 500);
        std::set<Weight> orbit_set(orbit.weights.begin(), orbit.weights.end());
        if (spec.expected > 0) {
            c.require(realized.size() == spec.expected,
                      std::string(spec.name) + ": realized " + std::to_string(realized.size()) +
                          " weights, expected " + std::to_string(spec.expected));
            c.require(realized == orbit_set, std::string(spec.name) + ": weights differ from the orbit");
        } else {
            c.require(g.truncated, std::string(spec.name) + ": expected truncation at depth 4");
            for (const auto& w : realized)
                c.require(orbit_set.count(w) == 1,
                          std::string(spec.name) + ": realized weight outside the shifted orbit");
        }
        explored_cases().push_back(ExploredCase{spec.name, std::move(p), std::move(g), spec.expected});
    }
    // The rank-1 chain joins the shared suites.
    BetheProblem p1 = rank1_problem();
    PopulationGraph g1 = explore(p1, Tuple::ones(1), ExplorationLimits{});
    c.require(weights_realized(g1) == std::set<Weight>{Weight({1}), Weight({-3})},
              "rank-1 weights are not {1, -3}");
    explored_cases().push_back(ExploredCase{"A1", std::move(p1), std::move(g1), 2});

    const double elapsed = seconds_since(start);
    c.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s exceeds 60s");
    if (c.ok) {
        std::ostringstream os;
        os << "A2/B2/G2 realize 6/8/12 weights = shifted orbits, affine contained, " << elapsed << "s";
        c.detail = os.str();
    }
    return c;
}

// Criterion 4: the degree-step law on every degree-changing edge of
// every explored graph.
Checker criterion4() {
    Checker c;
    std::size_t checked = 0;
    for (const auto& explored : explored_cases()) {
        for (const auto& edge : explored.graph.edges) {
            if (!edge.family.degree_changed) continue;
            const auto& src = explored.graph.nodes[edge.source];
            const auto& dst = explored.graph.nodes[edge.target];
            const long long delta = dst.degrees[static_cast<size_t>(edge.direction)] -
                                    src.degrees[static_cast<size_t>(edge.direction)];
            if (delta != src.weight[edge.direction] + 1)
                c.require(false, explored.name + ": degree step violated on edge " +
                                     std::to_string(edge.source) + "->" + std::to_string(edge.target));
            ++checked;
        }
    }
    c.require(checked > 0, "no degree-changing edges explored");
    if (c.ok) c.detail = std::to_string(checked) + " degree-changing edges, zero violations";
    return c;
}

// Criterion 5: reproduction preserves the Bethe property with the
// predicted weight label, across every edge out of a Bethe node.
Checker criterion5() {
    Checker c;
    std::size_t checked = 0;
    for (const auto& explored : explored_cases()) {
        const BetheProblem& p = explored.problem;
        for (const auto& edge : explored.graph.edges) {
            const auto& src = explored.graph.nodes[edge.source];
            if (src.verdict != Verdict::Bethe) continue;
            auto sample = sample_generic_member(p, src.tuple, edge.family, 64);
            if (!sample) {
                c.require(false, explored.name + ": no generic sample on edge " +
                                     std::to_string(edge.source) + "->" + std::to_string(edge.target));
                continue;
            }
            if (is_bethe(p, *sample) != Verdict::Bethe) {
                c.require(false, explored.name + ": generic descendant not Bethe on edge " +
                                     std::to_string(edge.source) + "->" + std::to_string(edge.target));
                continue;
            }
            const int i = edge.direction;
            const long long sampled_degree = (*sample)[i].degree();
            const Weight predicted = sampled_degree == src.degrees[static_cast<size_t>(i)]
                                         ? src.weight
                                         : shifted_reflect(p.cartan(), src.weight, i);
            if (weight_at_infinity(p, *sample) != predicted)
                c.require(false, explored.name + ": weight label mismatch on edge " +
                                     std::to_string(edge.source) + "->" + std::to_string(edge.target));
            ++checked;
        }
    }
    c.require(checked > 0, "no edges checked");
    if (c.ok) c.detail = std::to_string(checked) + " descendant families certified Bethe";
    return c;
}

// Criterion 6: the no-solution lemmas at desk scale; under 30 s.
Checker criterion6() {
    Checker c;
    auto start = std::chrono::steady_clock::now();
    BetheProblem p = rank1_problem();

    c.require(obstruction_fixed_point(p, {1}), "fixed-point obstruction did not fire at degrees (1)");
    c.require(exhaustive_fertile_search(p, {1}, 5).empty(),
              "grid search found a tuple despite the fixed-point obstruction");
    c.require(obstruction_cone(p, {3}, 100).obstructed, "cone obstruction did not fire at degrees (3)");

    const double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + "s exceeds 30s");
    if (c.ok) {
        std::ostringstream os;
        os << "degrees (1): fixed point + empty grid at height 5; degrees (3): cone; " << elapsed << "s";
        c.detail = os.str();
    }
    return c;
}

// Criterion 7: two-step return along every explored edge.
Checker criterion7() {
    Checker c;
    std::size_t checked = 0;
    for (const auto& explored : explored_cases()) {
        const BetheProblem& p = explored.problem;
        for (const auto& edge : explored.graph.edges) {
            auto reverse = fertility_solve(p, explored.graph.nodes[edge.target].tuple, edge.direction);
            if (!reverse) {
                c.require(false, explored.name + ": descendant not fertile in the same direction");
                continue;
            }
            const Polynomial& original =
                explored.graph.nodes[edge.source].tuple[edge.direction].poly();
            if (!reverse->contains(original))
                c.require(false, explored.name + ": original polynomial missing from the return line");
            ++checked;
        }
    }
    c.require(checked > 0, "no edges checked");
    if (c.ok) c.detail = std::to_string(checked) + " edges, every return line contains the source";
    return c;
}

int run_command(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Criterion 8: byte-identical repeated CLI runs and serialize/parse
// round-trip identities.
Checker criterion8() {
    Checker c;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out1 = dir / "bethe_acceptance_run1.json";
    const fs::path out2 = dir / "bethe_acceptance_run2.json";
    const std::string problem = std::string(BETHE_SAMPLES_DIR) + "/b2.json";
    const std::string base = std::string(BETHE_CLI_EXE) + " population " + problem +
                             " --max-nodes 300 --max-depth 30 --out ";

    c.require(run_command(base + out1.string() + " > /dev/null 2>&1") == 0, "first CLI run failed");
    c.require(run_command(base + out2.string() + " > /dev/null 2>&1") == 0, "second CLI run failed");
    const std::string bytes1 = read_file(out1);
    const std::string bytes2 = read_file(out2);
    c.require(!bytes1.empty(), "empty graph file");
    c.require(bytes1 == bytes2, "repeated runs differ");

    // Round-trips: graph, problem and tuple serializations are identities
    // on canonical forms.
    if (!bytes1.empty()) {
        nlohmann::json parsed = nlohmann::json::parse(bytes1);
        PopulationGraph graph = graph_from_json(parsed);
        c.require(graph_to_json(graph) == parsed, "graph round-trip is not the identity");
    }
    nlohmann::json problem_json = nlohmann::json::parse(read_file(problem));
    BetheProblem p = parse_problem(problem_json);
    c.require(problem_to_json(parse_problem(problem_to_json(p))) == problem_to_json(p),
              "problem round-trip is not the identity");
    Tuple t = Tuple::ones(2);
    c.require(parse_tuple(tuple_to_json(t), 2) == t, "tuple round-trip is not the identity");

    fs::remove(out1);
    fs::remove(out2);
    if (c.ok) c.detail = "byte-identical reruns; graph/problem/tuple round-trips are identities";
    return c;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Checker()> run;
    };
    const Entry entries[] = {
        {1, "divisibility/fertility/direct equivalence, 100 instances x 5 types", criterion1},
        {2, "rank-1 worked chain, exact values", criterion2},
        {3, "weight-orbit realization (A2/B2/G2 = 6/8/12, affine contained)", criterion3},
        {4, "degree-step law on every degree-changing edge", criterion4},
        {5, "reproduction preserves Bethe with predicted weight labels", criterion5},
        {6, "no-solution obstructions with empty grid search", criterion6},
        {7, "two-step return on every explored edge", criterion7},
        {8, "deterministic CLI output and round-trip identities", criterion8},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        Checker result;
        try {
            result = entry.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        std::cout << (result.ok ? "[PASS]" : "[FAIL]") << " criterion " << entry.id << ": " << entry.name;
        if (!result.detail.empty()) std::cout << ": " << result.detail;
        std::cout << std::endl;
        if (!result.ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return failures;
}
