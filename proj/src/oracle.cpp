#include "bethe/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bethe {

RootData extract_roots(const Tuple& t) {
    RootData data;
    data.roots.resize(static_cast<size_t>(t.rank()));
    data.complete.resize(static_cast<size_t>(t.rank()));
    for (int i = 0; i < t.rank(); ++i) {
        RationalRoots rr = rational_roots(t[i].poly());
        data.complete[static_cast<size_t>(i)] = rr.complete;
        for (const auto& [root, mult] : rr.roots)
            for (int k = 0; k < mult; ++k) data.roots[static_cast<size_t>(i)].push_back(root);
        std::sort(data.roots[static_cast<size_t>(i)].begin(), data.roots[static_cast<size_t>(i)].end());
    }
    return data;
}

std::optional<Rational> bethe_equation_lhs(const BetheProblem& p, const RootData& data, int i, int j,
                                           bool include_self, std::string* diagnostic) {
    const Rational& h = p.h();
    const Rational t = data.roots[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Rational lhs(1);

    for (int s = 0; s < p.points(); ++s) {
        const long long pairing = p.cartan().d(i) * p.lambda_pairing(s, i);  // (Lambda_s, alpha_i)
        if (pairing == 0) continue;
        const Rational offset = Rational(pairing) * h;
        const Rational den = t - p.z()[static_cast<size_t>(s)] - offset;
        if (den.is_zero()) {
            if (diagnostic) {
                std::ostringstream os;
                os << "zero denominator: t_" << j + 1 << "^(" << i + 1 << ") collides with z_" << s + 1
                   << " + (Lambda_" << s + 1 << ",alpha_" << i + 1 << ")h";
                *diagnostic = os.str();
            }
            return std::nullopt;
        }
        lhs *= (t - p.z()[static_cast<size_t>(s)] + offset) / den;
    }

    for (int m = 0; m < p.rank(); ++m) {
        const long long pairing = p.cartan().d(i) * p.cartan().a(i, m);  // (alpha_m, alpha_i)
        if (pairing == 0) continue;
        const Rational offset = Rational(pairing) * h;
        const auto& tm = data.roots[static_cast<size_t>(m)];
        for (size_t k = 0; k < tm.size(); ++k) {
            if (m == i && static_cast<int>(k) == j) {
                if (include_self) lhs *= Rational(-1);  // (-h_i)/(h_i)
                continue;
            }
            const Rational den = t - tm[k] + offset;
            if (den.is_zero()) {
                if (diagnostic) {
                    std::ostringstream os;
                    os << "zero denominator: t_" << j + 1 << "^(" << i + 1 << ") collides with t_" << k + 1
                       << "^(" << m + 1 << ") - (alpha_" << m + 1 << ",alpha_" << i + 1 << ")h";
                    *diagnostic = os.str();
                }
                return std::nullopt;
            }
            lhs *= (t - tm[k] - offset) / den;
        }
    }
    return lhs;
}

const char* to_string(DirectCheckStatus s) {
    switch (s) {
        case DirectCheckStatus::Pass: return "Pass";
        case DirectCheckStatus::Fail: return "Fail";
        default: return "Inapplicable";
    }
}

DirectCheckResult direct_bethe_check(const BetheProblem& p, const Tuple& t) {
    DirectCheckResult result;
    result.roots = extract_roots(t);
    if (!result.roots.all_complete()) {
        result.status = DirectCheckStatus::Inapplicable;
        result.diagnostics.push_back("some y_i does not split into rational linear factors");
        return result;
    }

    // Solution-exclusion rules, root-level form of genericity.
    auto exclude = [&result](const std::string& msg) { result.diagnostics.push_back(msg); };
    for (int i = 0; i < p.rank(); ++i) {
        const auto& ti = result.roots.roots[static_cast<size_t>(i)];
        const Rational hi = p.step_scale(i);
        const Rational half_hi = hi / Rational(2);
        for (size_t j = 0; j < ti.size(); ++j)
            for (size_t k = 0; k < ti.size(); ++k) {
                if (j == k) continue;
                if (ti[j] == ti[k] && j < k)
                    exclude("coincident roots t_" + std::to_string(j + 1) + ", t_" + std::to_string(k + 1) +
                            " in direction " + std::to_string(i + 1));
                if (ti[j] == ti[k] + hi)
                    exclude("roots t_" + std::to_string(j + 1) + ", t_" + std::to_string(k + 1) +
                            " in direction " + std::to_string(i + 1) + " differ by h_i");
            }
        for (int m = 0; m < p.rank(); ++m) {
            const long long aim = p.cartan().a(i, m);
            if (m == i || aim >= 0) continue;
            const auto& tm = result.roots.roots[static_cast<size_t>(m)];
            for (long long q = 1; q <= -aim; ++q)
                for (size_t j = 0; j < ti.size(); ++j)
                    for (size_t k = 0; k < tm.size(); ++k)
                        if (ti[j] == tm[k] - Rational(aim) * half_hi - Rational(q) * hi)
                            exclude("root t_" + std::to_string(j + 1) + "^(" + std::to_string(i + 1) +
                                    ") collides with a shifted root of direction " + std::to_string(m + 1));
        }
        for (int s = 0; s < p.points(); ++s) {
            const long long pairing = p.lambda_pairing(s, i);
            for (long long q = 1; q <= pairing; ++q)
                for (size_t j = 0; j < ti.size(); ++j)
                    if (ti[j] == p.z()[static_cast<size_t>(s)] + Rational(pairing) * half_hi - Rational(q) * hi)
                        exclude("root t_" + std::to_string(j + 1) + "^(" + std::to_string(i + 1) +
                                ") collides with shifted marked point z_" + std::to_string(s + 1));
        }
    }
    if (!result.diagnostics.empty()) {
        result.status = DirectCheckStatus::Fail;
        return result;
    }

    result.preconditions_ok = true;
    for (int i = 0; i < p.rank(); ++i) {
        const auto& ti = result.roots.roots[static_cast<size_t>(i)];
        for (size_t j = 0; j < ti.size(); ++j) {
            std::string diag;
            auto lhs = bethe_equation_lhs(p, result.roots, i, static_cast<int>(j), true, &diag);
            if (!lhs) {
                result.preconditions_ok = false;
                result.diagnostics.push_back(diag);
                continue;
            }
            if (*lhs != Rational(-1)) {
                std::ostringstream os;
                os << "equation for t_" << j + 1 << "^(" << i + 1 << "): left side is " << lhs->str()
                   << ", expected -1";
                result.diagnostics.push_back(os.str());
            }
        }
    }
    result.status = result.diagnostics.empty() ? DirectCheckStatus::Pass : DirectCheckStatus::Fail;
    return result;
}

namespace {

std::vector<Rational> coefficient_grid(int height) {
    std::vector<Rational> grid;
    for (int q = 1; q <= height; ++q)
        for (int p = -height; p <= height; ++p) {
            if (q > 1 && std::gcd(std::abs(p), q) != 1) continue;
            grid.push_back(Rational(p, q));
        }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace

std::vector<Tuple> exhaustive_fertile_search(const BetheProblem& p, const std::vector<long long>& degrees,
                                             int coefficient_height) {
    if (static_cast<int>(degrees.size()) != p.rank())
        throw std::invalid_argument("exhaustive_fertile_search: degree vector has wrong length");
    for (long long l : degrees)
        if (l < 0) throw std::invalid_argument("exhaustive_fertile_search: negative degree");
    if (coefficient_height < 1)
        throw std::invalid_argument("exhaustive_fertile_search: height must be positive");

    const std::vector<Rational> grid = coefficient_grid(coefficient_height);
    long long total_coeffs = 0;
    for (long long l : degrees) total_coeffs += l;

    double candidates = 1;
    for (long long c = 0; c < total_coeffs; ++c) candidates *= static_cast<double>(grid.size());
    if (candidates > 2e6)
        throw std::invalid_argument("exhaustive_fertile_search: grid too large (" +
                                    std::to_string(candidates) + " candidates)");

    std::vector<Tuple> found;
    std::vector<size_t> odometer(static_cast<size_t>(total_coeffs), 0);
    while (true) {
        std::vector<ProjectivePolynomial> polys;
        polys.reserve(degrees.size());
        size_t pos = 0;
        for (long long l : degrees) {
            std::vector<Rational> coeffs(static_cast<size_t>(l) + 1, Rational(1));
            for (long long k = 0; k < l; ++k) coeffs[static_cast<size_t>(k)] = grid[odometer[pos++]];
            polys.emplace_back(Polynomial(std::move(coeffs)));
        }
        Tuple candidate(std::move(polys));

        bool passes = is_generic(p, candidate);
        for (int i = 0; i < p.rank() && passes; ++i)
            if (!divisibility_check(p, candidate, i)) passes = false;
        if (passes) found.push_back(std::move(candidate));

        // Advance the odometer (empty odometer: single candidate).
        size_t d = 0;
        while (d < odometer.size()) {
            if (++odometer[d] < grid.size()) break;
            odometer[d++] = 0;
        }
        if (d == odometer.size()) break;
    }
    return found;
}

namespace {

std::string describe_problem(const BetheProblem& p) {
    std::ostringstream os;
    os << "cartan=[";
    for (int i = 0; i < p.rank(); ++i) {
        os << (i ? "," : "") << "[";
        for (int j = 0; j < p.rank(); ++j) os << (j ? "," : "") << p.cartan().a(i, j);
        os << "]";
    }
    os << "] h=" << p.h().str() << " z=[";
    for (int s = 0; s < p.points(); ++s) os << (s ? "," : "") << p.z()[static_cast<size_t>(s)].str();
    os << "] weights=[";
    for (int s = 0; s < p.points(); ++s) {
        os << (s ? "," : "") << "[";
        for (int j = 0; j < p.rank(); ++j) os << (j ? "," : "") << p.lambda_pairing(s, j);
        os << "]";
    }
    os << "] step=" << to_string(p.wronskian_step());
    return os.str();
}

std::string describe_tuple(const Tuple& t) {
    std::ostringstream os;
    os << "tuple=[";
    for (int i = 0; i < t.rank(); ++i) {
        os << (i ? "," : "") << "[";
        const auto& coeffs = t[i].poly().coefficients();
        for (size_t k = 0; k < coeffs.size(); ++k) os << (k ? "," : "") << coeffs[k].str();
        os << "]";
    }
    os << "]";
    return os.str();
}

BetheProblem random_problem(const CartanData& cartan, std::mt19937_64& rng, WronskianStep step) {
    static const Rational h_choices[] = {Rational(1, 2), Rational(1), Rational(1, 3)};
    std::uniform_int_distribution<int> h_pick(0, 2);
    std::uniform_int_distribution<int> n_pick(1, 3);
    std::uniform_int_distribution<long long> coord_pick(0, 2);

    const Rational h = h_choices[h_pick(rng)];
    const int n = n_pick(rng);
    // Small distinct rational points.
    static const Rational z_pool[] = {Rational(0),     Rational(1),  Rational(-1), Rational(1, 2),
                                      Rational(-1, 2), Rational(2),  Rational(-2), Rational(1, 3),
                                      Rational(3),     Rational(-3), Rational(5, 2)};
    std::vector<int> pool_index(std::size(z_pool));
    for (size_t k = 0; k < pool_index.size(); ++k) pool_index[k] = static_cast<int>(k);
    std::shuffle(pool_index.begin(), pool_index.end(), rng);
    std::vector<Rational> z;
    for (int s = 0; s < n; ++s) z.push_back(z_pool[pool_index[static_cast<size_t>(s)]]);

    std::vector<Weight> lambdas;
    for (int s = 0; s < n; ++s) {
        std::vector<long long> m(static_cast<size_t>(cartan.rank()));
        for (auto& v : m) v = coord_pick(rng);
        lambdas.emplace_back(std::move(m));
    }
    return BetheProblem(cartan, h, std::move(z), std::move(lambdas), step);
}

Tuple random_monic_tuple(int rank, std::mt19937_64& rng) {
    static const Rational coeff_pool[] = {Rational(0),  Rational(1),     Rational(-1),
                                          Rational(2),  Rational(-2),    Rational(1, 2),
                                          Rational(-1, 2), Rational(3)};
    std::uniform_int_distribution<int> deg_pick(0, 2);
    std::uniform_int_distribution<size_t> coeff_pick(0, std::size(coeff_pool) - 1);
    std::vector<ProjectivePolynomial> polys;
    for (int i = 0; i < rank; ++i) {
        int deg = deg_pick(rng);
        std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(1));
        for (int k = 0; k < deg; ++k) coeffs[static_cast<size_t>(k)] = coeff_pool[coeff_pick(rng)];
        polys.emplace_back(Polynomial(std::move(coeffs)));
    }
    return Tuple(std::move(polys));
}

// A few reproduction steps from (1,...,1), with a random line member
// (canonical included) at each step.
Tuple random_descendant(const BetheProblem& p, std::mt19937_64& rng) {
    static const Rational c_pool[] = {Rational(0), Rational(1), Rational(-1), Rational(2)};
    std::uniform_int_distribution<int> steps_pick(1, 3);
    std::uniform_int_distribution<int> dir_pick(0, p.rank() - 1);
    std::uniform_int_distribution<size_t> c_pick(0, std::size(c_pool) - 1);

    Tuple t = Tuple::ones(p.rank());
    const int steps = steps_pick(rng);
    for (int k = 0; k < steps; ++k) {
        auto line = fertility_solve(p, t, dir_pick(rng));
        if (!line) break;  // sterile direction: keep what we have
        t = t.with_entry(line->direction, ProjectivePolynomial(line->member(c_pool[c_pick(rng)])));
    }
    return t;
}

bool check_self_factor_convention() {
    BetheProblem p(build_cartan({{2}}), Rational(1, 2), {Rational(0)}, {Weight({1})});
    Tuple t(std::vector<ProjectivePolynomial>{
        ProjectivePolynomial(Polynomial({Rational(-1), Rational(0), Rational(1)}))});  // x^2 - 1
    RootData data = extract_roots(t);
    if (!data.all_complete()) return false;
    for (int j = 0; j < 2; ++j) {
        auto with_self = bethe_equation_lhs(p, data, 0, j, true);
        auto without_self = bethe_equation_lhs(p, data, 0, j, false);
        if (!with_self || *with_self != Rational(-1)) return false;
        if (!without_self || *without_self != Rational(1)) return false;
    }
    return true;
}

}  // namespace

std::vector<ProblemGenerator> standard_problem_generators(WronskianStep step) {
    struct Named {
        const char* name;
        std::vector<std::vector<long long>> matrix;
    };
    static const Named types[] = {
        {"A1", {{2}}},
        {"A2", {{2, -1}, {-1, 2}}},
        {"B2", {{2, -1}, {-2, 2}}},
        {"G2", {{2, -1}, {-3, 2}}},
        {"affine_A1", {{2, -2}, {-2, 2}}},
    };
    std::vector<ProblemGenerator> out;
    for (const auto& type : types) {
        CartanData cartan = build_cartan(type.matrix);
        out.push_back(ProblemGenerator{
            type.name, [cartan, step](std::mt19937_64& rng) { return random_problem(cartan, rng, step); }});
    }
    return out;
}

HarnessReport equivalence_harness(const std::vector<ProblemGenerator>& generators, int trials_per_type,
                                  std::uint64_t seed) {
    if (trials_per_type < 1) throw std::invalid_argument("equivalence_harness: trials must be positive");
    HarnessReport report;
    report.trials_per_type = trials_per_type;
    report.self_factor_convention_ok = check_self_factor_convention();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> tuple_kind(0, 1);
    for (const auto& gen : generators) {
        HarnessTally& tally = report.per_type[gen.name];
        for (int trial = 0; trial < trials_per_type; ++trial) {
            BetheProblem p = gen.make(rng);
            Tuple t = tuple_kind(rng) == 0 ? random_descendant(p, rng) : random_monic_tuple(p.rank(), rng);
            ++tally.instances;

            const bool generic = is_generic(p, t);
            bool divisible_all = true, fertile_all = true;
            for (int i = 0; i < p.rank(); ++i) {
                if (!divisibility_check(p, t, i)) divisible_all = false;
                if (!fertility_solve(p, t, i)) fertile_all = false;
            }
            if (generic) ++tally.generic;
            if (fertile_all) ++tally.fertile;
            if (generic && divisible_all) ++tally.bethe;

            if (generic && p.wronskian_step() == WronskianStep::FullHi && divisible_all != fertile_all)
                report.discrepancies.push_back("divisibility/fertility mismatch: " + describe_problem(p) +
                                               " " + describe_tuple(t));

            DirectCheckResult direct = direct_bethe_check(p, t);
            if (direct.status != DirectCheckStatus::Inapplicable) {
                ++tally.direct_applicable;
                if (direct.status == DirectCheckStatus::Pass) ++tally.direct_pass;
                if (generic && direct.preconditions_ok &&
                    (direct.status == DirectCheckStatus::Pass) != divisible_all)
                    report.discrepancies.push_back("direct/divisibility mismatch: " + describe_problem(p) +
                                                   " " + describe_tuple(t));
            }
        }
    }
    std::sort(report.discrepancies.begin(), report.discrepancies.end());
    return report;
}

}  // namespace bethe
