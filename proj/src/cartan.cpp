#include "bethe/cartan.hpp"

#include <deque>
#include <numeric>

namespace bethe {

CartanData CartanData::build(const std::vector<std::vector<long long>>& A) {
    const size_t n = A.size();
    if (n == 0) throw NotGeneralizedCartanError("Cartan matrix must be nonempty");
    for (const auto& row : A)
        if (row.size() != n) throw NotGeneralizedCartanError("Cartan matrix must be square");

    for (size_t i = 0; i < n; ++i) {
        if (A[i][i] != 2)
            throw NotGeneralizedCartanError("a_" + std::to_string(i + 1) + std::to_string(i + 1) + " must be 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (A[i][j] > 0)
                throw NotGeneralizedCartanError("off-diagonal entries must be nonpositive");
            if ((A[i][j] == 0) != (A[j][i] == 0))
                throw NotGeneralizedCartanError("zero pattern must be symmetric (a_ij = 0 iff a_ji = 0)");
        }
    }

    // Propagate d_j = d_i * a_ij / a_ji along edges of the Dynkin graph,
    // one BFS per connected component, then check consistency globally.
    std::vector<Rational> d(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<size_t> component;
        d[root] = Rational(1);
        seen[root] = true;
        std::deque<size_t> queue{root};
        while (!queue.empty()) {
            size_t i = queue.front();
            queue.pop_front();
            component.push_back(i);
            for (size_t j = 0; j < n; ++j) {
                if (i == j || A[i][j] == 0) continue;
                Rational dj = d[i] * Rational(A[i][j], A[j][i]);
                if (seen[j]) {
                    if (d[j] != dj)
                        throw NotSymmetrizableError("inconsistent symmetrizer ratios on a cycle");
                } else {
                    d[j] = dj;
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        // Scale the component to coprime positive integers.
        mpz_class lcm = 1;
        for (size_t i : component) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d[i].denominator().get_mpz_t());
        mpz_class g = 0;
        for (size_t i : component) {
            mpz_class v = d[i].numerator() * (lcm / d[i].denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        for (size_t i : component) d[i] = d[i] * Rational(mpq_class(lcm, g));
    }

    // The whole vector is already integral; divide by the global gcd so
    // the d_i are relatively prime as one family.
    mpz_class global = 0;
    for (size_t i = 0; i < n; ++i)
        mpz_gcd(global.get_mpz_t(), global.get_mpz_t(), d[i].numerator().get_mpz_t());
    CartanData out;
    out.a_ = A;
    out.d_.resize(n);
    for (size_t i = 0; i < n; ++i) {
        mpz_class v = d[i].numerator() / global;
        if (!d[i].is_integer() || v <= 0 || !v.fits_slong_p())
            throw NotSymmetrizableError("symmetrizer normalization failed");
        out.d_[i] = v.get_si();
    }

    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (out.d_[i] * A[i][j] != out.d_[j] * A[j][i])
                throw NotSymmetrizableError("DA is not symmetric");
    return out;
}

}  // namespace bethe
