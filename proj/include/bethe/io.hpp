#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bethe/oracle.hpp"
#include "bethe/population.hpp"

namespace bethe {

// Malformed input file or inline value; the CLI maps this to exit 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * Problem files are JSON objects:
 *   {
 *     "cartan":  [[2,-1],[-1,2]],          // generalized Cartan matrix
 *     "h":       "1/2",                    // nonzero rational
 *     "points":  ["0", "1"],               // distinct rationals z_s
 *     "weights": [[1,1],[0,1]],            // dominant, coroot coordinates
 *     "tuple":   [["-1","0","1"],["1"]]    // optional: ascending coefficients
 *   }
 * Rationals are strings "p/q" (or "p"); no floating point anywhere.
 */
BetheProblem parse_problem(const nlohmann::json& j, WronskianStep step = WronskianStep::FullHi);
nlohmann::json problem_to_json(const BetheProblem& p);
bool problem_has_tuple(const nlohmann::json& j);

Tuple parse_tuple(const nlohmann::json& j, int rank);
nlohmann::json tuple_to_json(const Tuple& t);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, const std::string& field);

Weight parse_weight(const nlohmann::json& j, const std::string& field);
std::vector<long long> parse_integer_vector(const nlohmann::json& j, const std::string& field);
nlohmann::json weight_to_json(const Weight& w);

Verdict verdict_from_string(const std::string& s);

/*
 * Graph files: nodes sorted by id with exact coefficient arrays, degree
 * vector, weight and verdict; edges with source, target, 1-based
 * direction, the family offset polynomial and the degree-change flag.
 * Keys are emitted in sorted order so output is byte-stable.
 */
nlohmann::json graph_to_json(const PopulationGraph& g);
PopulationGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const PopulationGraph& g);

nlohmann::json harness_report_to_json(const HarnessReport& report);

}  // namespace bethe
