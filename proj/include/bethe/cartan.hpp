#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

// A generalized-Cartan axiom is violated (diagonal, sign, or zero pattern).
struct NotGeneralizedCartanError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The ratio constraints d_i a_ij = d_j a_ji admit no positive solution.
struct NotSymmetrizableError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/*
 * Validated generalized Cartan matrix A together with its symmetrizer D:
 * the unique coprime positive integers d_i with d_i a_ij = d_j a_ji
 * (normalized per connected component of the Dynkin diagram). Derived
 * pairings: (alpha_i, alpha_j) = d_i a_ij and the direction-dependent
 * step h_i = (alpha_i, alpha_i) h = 2 d_i h.
 */
class CartanData {
  public:
    static CartanData build(const std::vector<std::vector<long long>>& A);

    int rank() const { return static_cast<int>(a_.size()); }
    long long a(int i, int j) const { return a_[check(i)][check(j)]; }
    long long d(int i) const { return d_[check(i)]; }
    const std::vector<std::vector<long long>>& matrix() const { return a_; }
    const std::vector<long long>& symmetrizer() const { return d_; }

    // (alpha_i, alpha_j) = d_i a_ij.
    long long bilinear(int i, int j) const { return d(i) * a(i, j); }
    // h_i = 2 d_i h.
    Rational step(int i, const Rational& h) const { return Rational(2 * d(i)) * h; }

  private:
    CartanData() = default;
    size_t check(int i) const {
        if (i < 0 || i >= rank()) throw std::out_of_range("CartanData: index out of range");
        return static_cast<size_t>(i);
    }
    std::vector<std::vector<long long>> a_;
    std::vector<long long> d_;
};

inline CartanData build_cartan(const std::vector<std::vector<long long>>& A) { return CartanData::build(A); }

}  // namespace bethe
