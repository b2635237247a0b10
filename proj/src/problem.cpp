#include "bethe/problem.hpp"

#include <sstream>
#include <stdexcept>

namespace bethe {

const char* to_string(WronskianStep step) { return step == WronskianStep::FullHi ? "hi" : "hi/2"; }

WronskianStep wronskian_step_from_string(const std::string& s) {
    if (s == "hi") return WronskianStep::FullHi;
    if (s == "hi/2") return WronskianStep::HalfHi;
    throw std::invalid_argument("wronskian step must be \"hi\" or \"hi/2\", got \"" + s + "\"");
}

BetheProblem::BetheProblem(CartanData cartan, Rational h, std::vector<Rational> z,
                           std::vector<Weight> lambdas, WronskianStep step)
    : cartan_(std::move(cartan)), h_(std::move(h)), z_(std::move(z)), lambdas_(std::move(lambdas)), step_(step) {
    if (h_.is_zero()) throw std::invalid_argument("step h must be nonzero");
    if (z_.size() != lambdas_.size())
        throw std::invalid_argument("points and weights must have the same length");
    for (size_t s = 0; s < z_.size(); ++s)
        for (size_t u = s + 1; u < z_.size(); ++u)
            if (z_[s] == z_[u]) throw std::invalid_argument("points must be distinct");
    for (size_t s = 0; s < lambdas_.size(); ++s) {
        if (lambdas_[s].rank() != cartan_.rank())
            throw std::invalid_argument("weights[" + std::to_string(s) + "] has wrong length");
        if (!is_dominant(lambdas_[s]))
            throw std::invalid_argument("weights[" + std::to_string(s) + "] must be dominant");
    }
}

Tuple::Tuple(std::vector<ProjectivePolynomial> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw std::invalid_argument("Tuple: must have at least one entry");
}

Tuple Tuple::ones(int rank) {
    std::vector<ProjectivePolynomial> polys;
    polys.reserve(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) polys.emplace_back(Polynomial(Rational(1)));
    return Tuple(std::move(polys));
}

std::vector<long long> Tuple::degrees() const {
    std::vector<long long> l;
    l.reserve(polys_.size());
    for (const auto& p : polys_) l.push_back(p.degree());
    return l;
}

Tuple Tuple::with_entry(int i, ProjectivePolynomial p) const {
    auto polys = polys_;
    polys.at(static_cast<size_t>(i)) = std::move(p);
    return Tuple(std::move(polys));
}

std::string Tuple::key() const {
    std::ostringstream os;
    for (const auto& p : polys_) {
        for (const auto& c : p.poly().coefficients()) os << c.str() << ',';
        os << ';';
    }
    return os.str();
}

}  // namespace bethe
