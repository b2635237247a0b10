#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bethe/problem.hpp"

namespace bethe {

/*
 * Master polynomial of direction i:
 *   T_i(x) = prod_s prod_{p=1..<Lambda_s,alpha_i^vee>} (x - z_s - <Lambda_s,alpha_i^vee> h_i/2 + p h_i).
 * Degree is sum_s <Lambda_s, alpha_i^vee>; the empty product is 1.
 */
Polynomial master_polynomial(const BetheProblem& p, int i);

// Lambda_infinity = sum_s Lambda_s - sum_i l_i alpha_i, in coroot
// coordinates m_j = sum_s <Lambda_s,alpha_j^vee> - sum_i l_i a_ji.
Weight weight_at_infinity(const BetheProblem& p, const std::vector<long long>& degrees);
Weight weight_at_infinity(const BetheProblem& p, const Tuple& t);

/*
 * Right side of the fertility equation in direction i:
 *   T_i(x) * prod_{m: a_im<0} prod_{p=1..-a_im} y_m(x + a_im h_i/2 + p s_i)
 * with s_i = h_i under the default step convention (see WronskianStep).
 * Never the zero polynomial.
 */
Polynomial wronskian_rhs(const BetheProblem& p, const Tuple& t, int i);

struct GenericityReport {
    bool generic = true;
    std::vector<std::string> violations;  // human-readable, one per failure
};

/*
 * A tuple is generic when every y_i is squarefree and shares no root
 * with y_i(x+h_i), with T_i, or with y_m(x + a_im h_i/2 + p h_i) for
 * a_im < 0, p = 1..-a_im.
 */
GenericityReport check_generic(const BetheProblem& p, const Tuple& t);
bool is_generic(const BetheProblem& p, const Tuple& t);

/*
 * The divisibility criterion of direction i: y_i(x) must divide
 *   [prod_s (x - z_s - <L_s,a_i^v> h_i/2) prod_{m:a_im<0} y_m(x + a_im h_i/2)] y_i(x+h_i)
 * + [prod_s (x - z_s + <L_s,a_i^v> h_i/2) prod_{m:a_im<0} y_m(x - a_im h_i/2)] y_i(x-h_i).
 * For squarefree y_i this is exactly the Bethe equation at the roots of y_i.
 */
Polynomial divisibility_polynomial(const BetheProblem& p, const Tuple& t, int i);
bool divisibility_check(const BetheProblem& p, const Tuple& t, int i);

/*
 * The affine line of solutions ytilde of the fertility equation
 *   W(y_i, ytilde, h_i) = wronskian_rhs(p, t, i),
 * presented as { canonical + c * offset : c in Q } with offset = y_i.
 * The canonical member is the unique solution whose coefficient of
 * x^(deg y_i) vanishes; it is stored monic and its degree always differs
 * from deg y_i (the `exceptional` flag guards the impossible case).
 */
struct FertilityLine {
    int direction = 0;
    ProjectivePolynomial canonical;
    ProjectivePolynomial offset;  // y_i of the tuple the line was solved at
    bool degree_changed = false;  // deg canonical != deg y_i
    bool exceptional = false;     // every member would have degree deg y_i (never observed)

    // canonical + c * offset, in the scale where both are monic.
    Polynomial member(const Rational& c) const;
    // true iff q is, up to scalar, canonical + c * offset for some c.
    bool contains(const Polynomial& q) const;
};

/*
 * Solve the fertility equation in direction i as an exact affine-linear
 * system in the coefficients of ytilde, with the complete degree bound
 * max(l_i, 1 + deg T_i - sum_{m != i} a_im l_m - l_i). Returns nullopt
 * when the tuple is not fertile in direction i. Throws std::logic_error
 * if the homogeneous solution space is not exactly span{y_i}.
 */
std::optional<FertilityLine> fertility_solve(const BetheProblem& p, const Tuple& t, int i);

enum class Verdict { Bethe, FertileNotGeneric, NotFertile };
const char* to_string(Verdict v);

/*
 * Bethe          : generic and the divisibility criterion holds in every direction.
 * FertileNotGeneric: fertile in every direction but not generic.
 * NotFertile     : everything else.
 * Under the default step convention this also asserts that divisibility
 * and fertility agree on generic tuples.
 */
Verdict is_bethe(const BetheProblem& p, const Tuple& t);

// l_i + <Lambda_inf + rho, alpha_i^vee>: the degree every degree-changing
// solution of the fertility equation in direction i must have.
long long expected_descendant_degree(const BetheProblem& p, const Tuple& t, int i);
long long expected_descendant_degree(const BetheProblem& p, const std::vector<long long>& degrees, int i);

/*
 * Fixed-point obstruction: some coordinate of Lambda_inf + rho vanishes
 * (s_i . Lambda_inf = Lambda_inf). True means no Bethe solutions exist
 * for this data.
 */
bool obstruction_fixed_point(const BetheProblem& p, const std::vector<long long>& degrees);

struct ConeObstruction {
    bool obstructed = false;
    bool truncated = false;
};

/*
 * Cone obstruction: walk the shifted orbit of Lambda_inf by propagating
 * the degree vector (l'_i = l_i + <Lambda_inf + rho, alpha_i^vee>, the
 * other coordinates fixed); the obstruction fires as soon as a reachable
 * degree vector has a negative coordinate. Degree-vector propagation
 * stays correct for degenerate (affine) Cartan matrices, where the root
 * cone is not visible in coroot coordinates.
 */
ConeObstruction obstruction_cone(const BetheProblem& p, const std::vector<long long>& degrees,
                                 std::size_t max_nodes);

}  // namespace bethe
