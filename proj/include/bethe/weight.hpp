#pragma once

#include <cstddef>
#include <vector>

#include "bethe/cartan.hpp"

namespace bethe {

/*
 * Integral weight in coroot coordinates: m_j = <lambda, alpha_j^vee>.
 * This is the minimal faithful data for every formula implemented here;
 * for degenerate Cartan matrices the kernel components of h* are
 * deliberately forgotten (degree vectors are tracked separately where
 * that would matter).
 */
struct Weight {
    std::vector<long long> m;

    Weight() = default;
    explicit Weight(std::vector<long long> coords) : m(std::move(coords)) {}

    int rank() const { return static_cast<int>(m.size()); }
    long long operator[](int j) const { return m[static_cast<size_t>(j)]; }

    friend bool operator==(const Weight& a, const Weight& b) { return a.m == b.m; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.m != b.m; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.m < b.m; }

    friend Weight operator+(const Weight& a, const Weight& b);
    friend Weight operator-(const Weight& a, const Weight& b);
};

// A Weyl group element as a word in the simple reflections (indices 0..r-1).
using WeylWord = std::vector<int>;

// rho in coroot coordinates: the all-ones vector.
Weight rho(int rank);

bool is_dominant(const Weight& w);

// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i, in coordinates
// m'_j = m_j - m_i a_ji.
Weight reflect(const CartanData& cartan, const Weight& w, int i);

// Shifted action s_i . lambda = s_i(lambda + rho) - rho.
Weight shifted_reflect(const CartanData& cartan, const Weight& w, int i);

Weight apply_word(const CartanData& cartan, const Weight& w, const WeylWord& word);
Weight apply_word_shifted(const CartanData& cartan, const Weight& w, const WeylWord& word);

struct OrbitResult {
    std::vector<Weight> weights;  // sorted lexicographically
    bool truncated = false;       // hit max_nodes before the orbit closed
};

// BFS closure of w0 under all shifted reflections, capped at max_nodes
// (the Weyl group may be infinite).
OrbitResult shifted_orbit(const CartanData& cartan, const Weight& w0, std::size_t max_nodes);

}  // namespace bethe
