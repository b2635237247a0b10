#include "bethe/bethe.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bethe/linalg.hpp"

namespace bethe {

Polynomial master_polynomial(const BetheProblem& p, int i) {
    const Rational hi = p.step_scale(i);
    const Rational half_hi = hi / Rational(2);
    Polynomial T(Rational(1));
    for (int s = 0; s < p.points(); ++s) {
        const long long pairing = p.lambda_pairing(s, i);
        for (long long q = 1; q <= pairing; ++q) {
            Rational root = p.z()[static_cast<size_t>(s)] + Rational(pairing) * half_hi - Rational(q) * hi;
            T = T * Polynomial({-root, Rational(1)});
        }
    }
    return T;
}

Weight weight_at_infinity(const BetheProblem& p, const std::vector<long long>& degrees) {
    const int r = p.rank();
    if (static_cast<int>(degrees.size()) != r)
        throw std::invalid_argument("weight_at_infinity: degree vector has wrong length");
    std::vector<long long> m(static_cast<size_t>(r), 0);
    for (int j = 0; j < r; ++j) {
        long long v = 0;
        for (int s = 0; s < p.points(); ++s) v += p.lambda_pairing(s, j);
        for (int i = 0; i < r; ++i) v -= degrees[static_cast<size_t>(i)] * p.cartan().a(j, i);
        m[static_cast<size_t>(j)] = v;
    }
    return Weight(std::move(m));
}

Weight weight_at_infinity(const BetheProblem& p, const Tuple& t) {
    return weight_at_infinity(p, t.degrees());
}

Polynomial wronskian_rhs(const BetheProblem& p, const Tuple& t, int i) {
    const Rational hi = p.step_scale(i);
    const Rational half_hi = hi / Rational(2);
    const Rational step = p.wronskian_step() == WronskianStep::FullHi ? hi : half_hi;
    Polynomial rhs = master_polynomial(p, i);
    for (int m = 0; m < p.rank(); ++m) {
        const long long aim = p.cartan().a(i, m);
        if (aim >= 0) continue;
        for (long long q = 1; q <= -aim; ++q)
            rhs = rhs * shift(t[m].poly(), Rational(aim) * half_hi + Rational(q) * step);
    }
    return rhs;
}

GenericityReport check_generic(const BetheProblem& p, const Tuple& t) {
    GenericityReport report;
    auto fail = [&report](const std::string& msg) {
        report.generic = false;
        report.violations.push_back(msg);
    };
    for (int i = 0; i < p.rank(); ++i) {
        const Polynomial& yi = t[i].poly();
        const Rational hi = p.step_scale(i);
        const Rational half_hi = hi / Rational(2);
        std::string yi_name = "y_" + std::to_string(i + 1);

        if (has_multiple_roots(yi)) fail(yi_name + " has a multiple root");
        if (gcd(yi, shift(yi, hi)).degree() > 0)
            fail(yi_name + " shares a root with " + yi_name + "(x+h_" + std::to_string(i + 1) + ")");
        if (gcd(yi, master_polynomial(p, i)).degree() > 0)
            fail(yi_name + " shares a root with T_" + std::to_string(i + 1));
        for (int m = 0; m < p.rank(); ++m) {
            const long long aim = p.cartan().a(i, m);
            if (aim >= 0) continue;
            for (long long q = 1; q <= -aim; ++q) {
                Polynomial shifted = shift(t[m].poly(), Rational(aim) * half_hi + Rational(q) * hi);
                if (gcd(yi, shifted).degree() > 0) {
                    std::ostringstream os;
                    os << yi_name << " shares a root with y_" << m + 1 << "(x+a_im h_i/2+p h_i), p=" << q;
                    fail(os.str());
                }
            }
        }
    }
    return report;
}

bool is_generic(const BetheProblem& p, const Tuple& t) { return check_generic(p, t).generic; }

Polynomial divisibility_polynomial(const BetheProblem& p, const Tuple& t, int i) {
    const Rational hi = p.step_scale(i);
    const Rational half_hi = hi / Rational(2);

    Polynomial minus(Rational(1)), plus(Rational(1));
    for (int s = 0; s < p.points(); ++s) {
        const Rational offset = Rational(p.lambda_pairing(s, i)) * half_hi;
        const Rational& zs = p.z()[static_cast<size_t>(s)];
        minus = minus * Polynomial({-(zs + offset), Rational(1)});
        plus = plus * Polynomial({-(zs - offset), Rational(1)});
    }
    for (int m = 0; m < p.rank(); ++m) {
        const long long aim = p.cartan().a(i, m);
        if (aim >= 0) continue;
        minus = minus * shift(t[m].poly(), Rational(aim) * half_hi);
        plus = plus * shift(t[m].poly(), Rational(-aim) * half_hi);
    }
    const Polynomial& yi = t[i].poly();
    return minus * shift(yi, hi) + plus * shift(yi, -hi);
}

bool divisibility_check(const BetheProblem& p, const Tuple& t, int i) {
    return divides(t[i].poly(), divisibility_polynomial(p, t, i));
}

Polynomial FertilityLine::member(const Rational& c) const {
    return canonical.poly() + c * offset.poly();
}

bool FertilityLine::contains(const Polynomial& q) const {
    if (q.is_zero()) return false;
    // Solve lambda * q = canonical + c * offset for scalars (lambda, c);
    // a solution with lambda != 0 puts q on the line.
    const int n = std::max(q.degree(), std::max(canonical.degree(), offset.degree())) + 1;
    RationalMatrix M(static_cast<size_t>(n), RationalVector(2));
    RationalVector b(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        M[static_cast<size_t>(k)][0] = q.coefficient(k);
        M[static_cast<size_t>(k)][1] = -offset.poly().coefficient(k);
        b[static_cast<size_t>(k)] = canonical.poly().coefficient(k);
    }
    auto sol = solve_affine_linear(M, b);
    if (!sol) return false;
    if (!sol->particular[0].is_zero()) return true;
    // lambda is forced to zero only if q is not on the line; a free lambda
    // (q proportional to offset with canonical = 0) cannot occur since
    // canonical is nonzero.
    for (const auto& v : sol->null_basis)
        if (!v[0].is_zero()) return true;
    return false;
}

std::optional<FertilityLine> fertility_solve(const BetheProblem& p, const Tuple& t, int i) {
    if (i < 0 || i >= p.rank()) throw std::out_of_range("fertility_solve: direction out of range");
    const Polynomial& y = t[i].poly();  // monic
    const int l = y.degree();
    const Rational hi = p.step_scale(i);
    const Polynomial rhs = wronskian_rhs(p, t, i);
    const int rhs_deg = rhs.degree();

    // Complete degree bound: any solution has degree l or 1 + deg(rhs) - l.
    const int bound = std::max(l, 1 + rhs_deg - l);
    const int rows = std::max(l + bound, rhs_deg + 1);

    RationalMatrix M(static_cast<size_t>(rows), RationalVector(static_cast<size_t>(bound) + 1));
    for (int k = 0; k <= bound; ++k) {
        Polynomial image = discrete_wronskian(y, Polynomial::monomial(Rational(1), k), hi);
        for (int row = 0; row < rows; ++row)
            M[static_cast<size_t>(row)][static_cast<size_t>(k)] = image.coefficient(row);
    }
    RationalVector b(static_cast<size_t>(rows));
    for (int row = 0; row < rows; ++row) b[static_cast<size_t>(row)] = rhs.coefficient(row);

    auto sol = solve_affine_linear(M, b);
    if (!sol) return std::nullopt;

    // The kernel of ytilde -> W(y_i, ytilde, h_i) is span{y_i} over any
    // field of characteristic zero; anything else indicates a bug.
    if (sol->null_basis.size() != 1)
        throw std::logic_error("fertility_solve: Wronskian kernel dimension is " +
                               std::to_string(sol->null_basis.size()) + ", expected 1");
    Polynomial kernel(sol->null_basis.front());
    if (kernel.is_zero() || kernel.monic() != y)
        throw std::logic_error("fertility_solve: Wronskian kernel is not spanned by y_i");

    Polynomial particular(sol->particular);
    // Canonical member: kill the coefficient of x^l against monic y_i.
    Polynomial canonical = particular - particular.coefficient(l) * y;

    FertilityLine line;
    line.direction = i;
    line.canonical = ProjectivePolynomial(canonical);
    line.offset = t[i];
    line.degree_changed = (canonical.degree() != l);
    line.exceptional = !line.degree_changed;
    return line;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Bethe: return "Bethe";
        case Verdict::FertileNotGeneric: return "FertileNotGeneric";
        default: return "NotFertile";
    }
}

Verdict is_bethe(const BetheProblem& p, const Tuple& t) {
    const bool generic = is_generic(p, t);
    bool divisible_all = true;
    for (int i = 0; i < p.rank() && divisible_all; ++i)
        if (!divisibility_check(p, t, i)) divisible_all = false;
    bool fertile_all = true;
    for (int i = 0; i < p.rank() && fertile_all; ++i)
        if (!fertility_solve(p, t, i)) fertile_all = false;

    if (generic && p.wronskian_step() == WronskianStep::FullHi && divisible_all != fertile_all)
        throw std::logic_error("is_bethe: divisibility and fertility disagree on a generic tuple");

    if (generic) return divisible_all ? Verdict::Bethe : Verdict::NotFertile;
    return fertile_all ? Verdict::FertileNotGeneric : Verdict::NotFertile;
}

long long expected_descendant_degree(const BetheProblem& p, const std::vector<long long>& degrees, int i) {
    if (i < 0 || i >= p.rank()) throw std::out_of_range("expected_descendant_degree: direction out of range");
    const Weight w = weight_at_infinity(p, degrees);
    return degrees[static_cast<size_t>(i)] + w[i] + 1;
}

long long expected_descendant_degree(const BetheProblem& p, const Tuple& t, int i) {
    return expected_descendant_degree(p, t.degrees(), i);
}

bool obstruction_fixed_point(const BetheProblem& p, const std::vector<long long>& degrees) {
    const Weight w = weight_at_infinity(p, degrees);
    for (int i = 0; i < p.rank(); ++i)
        if (w[i] == -1) return true;
    return false;
}

ConeObstruction obstruction_cone(const BetheProblem& p, const std::vector<long long>& degrees,
                                 std::size_t max_nodes) {
    if (max_nodes < 1) throw std::invalid_argument("obstruction_cone: max_nodes must be at least 1");
    ConeObstruction out;
    for (long long l : degrees)
        if (l < 0) {
            out.obstructed = true;
            return out;
        }

    std::set<std::vector<long long>> visited{degrees};
    std::deque<std::vector<long long>> queue{degrees};
    while (!queue.empty()) {
        std::vector<long long> l = queue.front();
        queue.pop_front();
        const Weight w = weight_at_infinity(p, l);
        for (int i = 0; i < p.rank(); ++i) {
            std::vector<long long> next = l;
            next[static_cast<size_t>(i)] += w[i] + 1;
            if (next[static_cast<size_t>(i)] < 0) {
                out.obstructed = true;
                return out;
            }
            if (visited.count(next)) continue;
            if (visited.size() >= max_nodes) {
                out.truncated = true;
                queue.clear();
                break;
            }
            visited.insert(next);
            queue.push_back(next);
        }
    }
    return out;
}

}  // namespace bethe
