#include "bethe/population.hpp"

#include <deque>
#include <map>
#include <string>

namespace bethe {

DescendantResult immediate_descendants(const BetheProblem& p, const Tuple& t, int i) {
    auto line = fertility_solve(p, t, i);
    if (!line) throw NotFertileError(i);
    Tuple descendant = t.with_entry(i, line->canonical);
    return DescendantResult{std::move(*line), std::move(descendant)};
}

namespace {

// 0, 1, -1, 2, -2, ...
Rational c_sequence(int k) {
    if (k == 0) return Rational(0);
    int half = (k + 1) / 2;
    return k % 2 == 1 ? Rational(half) : Rational(-half);
}

}  // namespace

std::optional<GenericSample> sample_generic_member_with_c(const BetheProblem& p, const Tuple& t,
                                                          const FertilityLine& line, int c_samples) {
    for (int k = 0; k < c_samples; ++k) {
        const Rational c = c_sequence(k);
        Tuple candidate = t.with_entry(line.direction, ProjectivePolynomial(line.member(c)));
        if (is_generic(p, candidate)) return GenericSample{std::move(candidate), c};
    }
    return std::nullopt;
}

std::optional<Tuple> sample_generic_member(const BetheProblem& p, const Tuple& t,
                                           const FertilityLine& line, int c_samples) {
    auto sample = sample_generic_member_with_c(p, t, line, c_samples);
    if (!sample) return std::nullopt;
    return std::move(sample->tuple);
}

namespace {

/*
 * Verdict of a node: is_bethe on the node itself when generic, otherwise
 * on a generic same-degree sample of the line it was created on (all
 * non-canonical members share the node's degree vector exactly when the
 * canonical degree is >= the offset degree). A node that cannot be
 * certified stays FertileNotGeneric.
 */
Verdict node_verdict(const BetheProblem& p, const Tuple& tuple, const FertilityLine* incoming,
                     const Tuple* parent, int c_samples) {
    if (is_generic(p, tuple)) return is_bethe(p, tuple) == Verdict::Bethe ? Verdict::Bethe : Verdict::FertileNotGeneric;
    if (incoming != nullptr && parent != nullptr &&
        incoming->canonical.degree() >= incoming->offset.degree()) {
        for (int k = 1; k < c_samples; ++k) {
            Polynomial member = incoming->member(c_sequence(k));
            Tuple candidate = parent->with_entry(incoming->direction, ProjectivePolynomial(member));
            if (!is_generic(p, candidate)) continue;
            return is_bethe(p, candidate) == Verdict::Bethe ? Verdict::Bethe : Verdict::FertileNotGeneric;
        }
    }
    return Verdict::FertileNotGeneric;
}

}  // namespace

PopulationGraph explore(const BetheProblem& p, const Tuple& seed, const ExplorationLimits& limits) {
    limits.validate();
    if (seed.rank() != p.rank()) throw std::invalid_argument("explore: seed rank mismatch");
    for (int i = 0; i < p.rank(); ++i)
        if (!fertility_solve(p, seed, i)) throw SeedNotFertileError(i);

    PopulationGraph g;
    g.step = p.wronskian_step();

    std::map<std::string, std::size_t> index;  // tuple key -> node id
    auto add_node = [&](const Tuple& tuple, std::size_t depth, const FertilityLine* incoming,
                        const Tuple* parent) {
        std::size_t id = g.nodes.size();
        g.nodes.push_back(PopulationNode{id, tuple, tuple.degrees(), weight_at_infinity(p, tuple),
                                         node_verdict(p, tuple, incoming, parent, limits.c_samples),
                                         depth});
        index.emplace(tuple.key(), id);
        return id;
    };

    add_node(seed, 0, nullptr, nullptr);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t source = queue.front();
        queue.pop_front();
        if (g.nodes[source].depth >= limits.max_depth) {
            g.truncated = true;  // unexpanded frontier
            continue;
        }
        for (int i = 0; i < p.rank(); ++i) {
            // Copy, not reference: g.nodes may reallocate as nodes are added.
            const Tuple source_tuple = g.nodes[source].tuple;
            auto line = fertility_solve(p, source_tuple, i);
            if (!line) continue;  // sterile direction; possible only off the Bethe tower
            Tuple descendant = source_tuple.with_entry(i, line->canonical);
            auto it = index.find(descendant.key());
            std::size_t target;
            if (it != index.end()) {
                target = it->second;
            } else {
                if (g.nodes.size() >= limits.max_nodes) {
                    g.truncated = true;
                    continue;
                }
                target = add_node(descendant, g.nodes[source].depth + 1, &*line, &source_tuple);
                queue.push_back(target);
            }
            g.edges.push_back(PopulationEdge{source, target, i, std::move(*line)});
        }
    }
    return g;
}

std::set<Weight> weights_realized(const PopulationGraph& g) {
    std::set<Weight> out;
    for (const auto& node : g.nodes) out.insert(node.weight);
    return out;
}

}  // namespace bethe
