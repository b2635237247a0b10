#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "bethe/bethe.hpp"

namespace bethe {

struct NotFertileError : std::runtime_error {
    explicit NotFertileError(int direction_)
        : std::runtime_error("tuple is not fertile in direction " + std::to_string(direction_ + 1)),
          direction(direction_) {}
    int direction;
};

struct SeedNotFertileError : std::runtime_error {
    explicit SeedNotFertileError(int direction_)
        : std::runtime_error("seed is not fertile in direction " + std::to_string(direction_ + 1)),
          direction(direction_) {}
    int direction;
};

struct ExplorationLimits {
    std::size_t max_nodes = 256;
    std::size_t max_depth = 16;
    int c_samples = 64;

    void validate() const {
        if (max_nodes < 1 || max_depth < 1 || c_samples < 1)
            throw std::invalid_argument("exploration limits must be positive");
    }
};

struct DescendantResult {
    FertilityLine line;
    Tuple canonical_descendant;
};

// Reproduction in direction i: the fertility line plus the tuple whose
// i-th entry is the canonical line member. Throws NotFertileError.
DescendantResult immediate_descendants(const BetheProblem& p, const Tuple& t, int i);

struct GenericSample {
    Tuple tuple;
    Rational c;
};

/*
 * First generic tuple (y_1, ..., canonical + c*y_i, ..., y_r) with c
 * drawn from 0, 1, -1, 2, -2, ... (at most c_samples attempts), or
 * nullopt when every attempt is non-generic.
 */
std::optional<GenericSample> sample_generic_member_with_c(const BetheProblem& p, const Tuple& t,
                                                          const FertilityLine& line, int c_samples);
std::optional<Tuple> sample_generic_member(const BetheProblem& p, const Tuple& t,
                                           const FertilityLine& line, int c_samples);

struct PopulationNode {
    std::size_t id = 0;
    Tuple tuple;
    std::vector<long long> degrees;
    Weight weight;           // weight at infinity
    Verdict verdict = Verdict::FertileNotGeneric;  // Bethe or FertileNotGeneric
    std::size_t depth = 0;   // BFS distance from the seed
};

struct PopulationEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    int direction = 0;
    FertilityLine family;
};

struct PopulationGraph {
    std::vector<PopulationNode> nodes;  // indexed by id
    std::vector<PopulationEdge> edges;
    bool truncated = false;
    WronskianStep step = WronskianStep::FullHi;
};

/*
 * Reproduction procedure as a deterministic BFS over canonical tuples:
 * nodes are deduplicated by exact monic coefficient vectors, directions
 * are expanded in index order, and only canonical descendants are
 * enqueued (same-degree members stay on the recorded edge family).
 * Truncation by max_nodes or max_depth is a reported outcome, not an
 * error. Throws SeedNotFertileError when the seed fails in some
 * direction.
 */
PopulationGraph explore(const BetheProblem& p, const Tuple& seed, const ExplorationLimits& limits);

std::set<Weight> weights_realized(const PopulationGraph& g);

}  // namespace bethe
