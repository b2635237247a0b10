#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bethe/population.hpp"

namespace bethe {

struct RootData {
    std::vector<std::vector<Rational>> roots;  // per direction, multiplicities expanded, sorted
    std::vector<bool> complete;                // per direction: y_i splits over Q

    bool all_complete() const {
        for (bool c : complete)
            if (!c) return false;
        return true;
    }
};

RootData extract_roots(const Tuple& t);

/*
 * Left side of the Bethe equation for the variable t_j^(i):
 *   prod_s (t - z_s + (L_s,a_i) h)/(t - z_s - (L_s,a_i) h)
 * * prod_m prod_k (t - t_k^(m) - (a_m,a_i) h)/(t - t_k^(m) + (a_m,a_i) h)
 * with (L_s,a_i) = d_i <L_s,a_i^vee> and (a_m,a_i) = d_i a_im. Factors
 * with a zero pairing are identically 1 and skipped; the k = j self
 * factor (identically -1) is included unless include_self is false.
 * Returns nullopt on a zero denominator, naming the collision.
 */
std::optional<Rational> bethe_equation_lhs(const BetheProblem& p, const RootData& data, int i, int j,
                                           bool include_self, std::string* diagnostic = nullptr);

enum class DirectCheckStatus { Pass, Fail, Inapplicable };
const char* to_string(DirectCheckStatus s);

struct DirectCheckResult {
    DirectCheckStatus status = DirectCheckStatus::Inapplicable;
    std::vector<std::string> diagnostics;
    RootData roots;
    // No exclusion bullet fired and no denominator vanished; when true, a
    // Fail means some equation value differs from -1.
    bool preconditions_ok = false;
};

/*
 * Direct evaluation of the Bethe equation at the rational roots of the
 * tuple. Inapplicable when some y_i does not split over Q. Before the
 * equations are evaluated, the solution-exclusion rules are checked
 * (coincident or h_i-shifted roots within a direction, collisions with
 * shifted roots of neighbor directions, collisions with the shifted
 * marked points); violations Fail with the rule named.
 */
DirectCheckResult direct_bethe_check(const BetheProblem& p, const Tuple& t);

/*
 * Enumerate all monic tuples with the given degrees and coefficients on
 * the grid { p/q : |p| <= height, 1 <= q <= height }, returning those
 * that are generic and pass the divisibility criterion in every
 * direction. Grid-limited negative evidence, not a proof. Throws when
 * the grid would exceed ~2e6 candidates.
 */
std::vector<Tuple> exhaustive_fertile_search(const BetheProblem& p, const std::vector<long long>& degrees,
                                             int coefficient_height);

struct ProblemGenerator {
    std::string name;
    std::function<BetheProblem(std::mt19937_64&)> make;
};

// Random small problems over A1, A2, B2, G2 and affine [[2,-2],[-2,2]]:
// weight coordinates <= 2, n <= 3 points, h in {1/2, 1, 1/3}.
std::vector<ProblemGenerator> standard_problem_generators(WronskianStep step = WronskianStep::FullHi);

struct HarnessTally {
    int instances = 0;
    int generic = 0;
    int fertile = 0;
    int bethe = 0;
    int direct_applicable = 0;
    int direct_pass = 0;
};

struct HarnessReport {
    int trials_per_type = 0;
    std::map<std::string, HarnessTally> per_type;
    std::vector<std::string> discrepancies;  // full problem + tuple payloads
    bool self_factor_convention_ok = false;

    bool ok() const { return discrepancies.empty() && self_factor_convention_ok; }
};

/*
 * Randomized cross-check of the three equivalent Bethe-solution criteria
 * on a mix of reproduction descendants of (1,...,1) and random monic
 * tuples: divisibility <=> fertility on generic tuples, and agreement
 * with the direct equation check whenever it applies. Deterministic for
 * a fixed seed.
 */
HarnessReport equivalence_harness(const std::vector<ProblemGenerator>& generators, int trials_per_type,
                                  std::uint64_t seed);

}  // namespace bethe
