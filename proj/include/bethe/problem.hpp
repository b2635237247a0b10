#pragma once

#include <string>
#include <vector>

#include "bethe/cartan.hpp"
#include "bethe/polynomial.hpp"
#include "bethe/weight.hpp"

namespace bethe {

/*
 * Shift-step convention for the right side of the fertility (discrete
 * Wronskian) equation: the neighbor factors are y_m(x + a_im h_i/2 + p*s)
 * with s = h_i (default) or s = h_i/2. Only the fertility right side is
 * affected; the master polynomials, genericity tests and the divisibility
 * polynomial are unambiguous. Under FullHi the divisibility and fertility
 * criteria are provably equivalent for generic tuples; HalfHi is exposed
 * for experimentation and is echoed in all CLI output.
 */
enum class WronskianStep { FullHi, HalfHi };

const char* to_string(WronskianStep step);
WronskianStep wronskian_step_from_string(const std::string& s);  // "hi" | "hi/2"

/*
 * Problem data for the XXX Bethe equations: Cartan data, a nonzero
 * rational step h, distinct rational marked points z_s and dominant
 * integral weights Lambda_s in coroot coordinates (one per point).
 */
class BetheProblem {
  public:
    BetheProblem(CartanData cartan, Rational h, std::vector<Rational> z, std::vector<Weight> lambdas,
                 WronskianStep step = WronskianStep::FullHi);

    const CartanData& cartan() const { return cartan_; }
    int rank() const { return cartan_.rank(); }
    const Rational& h() const { return h_; }
    int points() const { return static_cast<int>(z_.size()); }
    const std::vector<Rational>& z() const { return z_; }
    const std::vector<Weight>& lambdas() const { return lambdas_; }

    // <Lambda_s, alpha_i^vee>.
    long long lambda_pairing(int s, int i) const { return lambdas_[static_cast<size_t>(s)][i]; }
    // h_i = 2 d_i h.
    Rational step_scale(int i) const { return cartan_.step(i, h_); }

    WronskianStep wronskian_step() const { return step_; }

  private:
    CartanData cartan_;
    Rational h_;
    std::vector<Rational> z_;
    std::vector<Weight> lambdas_;
    WronskianStep step_;
};

/*
 * An r-tuple of nonzero polynomials up to scalar (stored monic), one per
 * simple root direction; the root multiset of entry i is the variable
 * group t^(i). The degree vector l is derived.
 */
class Tuple {
  public:
    explicit Tuple(std::vector<ProjectivePolynomial> polys);

    static Tuple ones(int rank);

    int rank() const { return static_cast<int>(polys_.size()); }
    const ProjectivePolynomial& operator[](int i) const { return polys_[static_cast<size_t>(i)]; }
    const std::vector<ProjectivePolynomial>& polys() const { return polys_; }

    std::vector<long long> degrees() const;
    Tuple with_entry(int i, ProjectivePolynomial p) const;

    // Exact dedup key: the monic coefficient vectors, serialized.
    std::string key() const;

    friend bool operator==(const Tuple& a, const Tuple& b) { return a.polys_ == b.polys_; }
    friend bool operator!=(const Tuple& a, const Tuple& b) { return !(a == b); }

  private:
    std::vector<ProjectivePolynomial> polys_;
};

}  // namespace bethe
