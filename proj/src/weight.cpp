#include "bethe/weight.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace bethe {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("weight coordinate overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("weight coordinate overflow");
    return r;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("weight coordinate overflow");
    return r;
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
    if (a.m.size() != b.m.size()) throw std::invalid_argument("Weight: rank mismatch");
    Weight r = a;
    for (size_t j = 0; j < r.m.size(); ++j) r.m[j] = checked_add(r.m[j], b.m[j]);
    return r;
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.m.size() != b.m.size()) throw std::invalid_argument("Weight: rank mismatch");
    Weight r = a;
    for (size_t j = 0; j < r.m.size(); ++j) r.m[j] = checked_sub(r.m[j], b.m[j]);
    return r;
}

Weight rho(int rank) { return Weight(std::vector<long long>(static_cast<size_t>(rank), 1)); }

bool is_dominant(const Weight& w) {
    for (long long v : w.m)
        if (v < 0) return false;
    return true;
}

Weight reflect(const CartanData& cartan, const Weight& w, int i) {
    if (w.rank() != cartan.rank()) throw std::invalid_argument("reflect: rank mismatch");
    if (i < 0 || i >= cartan.rank()) throw std::out_of_range("reflect: direction out of range");
    Weight r = w;
    const long long mi = w[i];
    for (int j = 0; j < cartan.rank(); ++j)
        r.m[static_cast<size_t>(j)] = checked_sub(w[j], checked_mul(mi, cartan.a(j, i)));
    return r;
}

Weight shifted_reflect(const CartanData& cartan, const Weight& w, int i) {
    Weight r = reflect(cartan, w + rho(cartan.rank()), i);
    return r - rho(cartan.rank());
}

Weight apply_word(const CartanData& cartan, const Weight& w, const WeylWord& word) {
    Weight r = w;
    for (int i : word) r = reflect(cartan, r, i);
    return r;
}

Weight apply_word_shifted(const CartanData& cartan, const Weight& w, const WeylWord& word) {
    Weight r = w;
    for (int i : word) r = shifted_reflect(cartan, r, i);
    return r;
}

OrbitResult shifted_orbit(const CartanData& cartan, const Weight& w0, std::size_t max_nodes) {
    if (max_nodes < 1) throw std::invalid_argument("shifted_orbit: max_nodes must be at least 1");
    OrbitResult out;
    std::set<Weight> visited{w0};
    std::deque<Weight> queue{w0};
    while (!queue.empty()) {
        Weight w = queue.front();
        queue.pop_front();
        for (int i = 0; i < cartan.rank(); ++i) {
            Weight next = shifted_reflect(cartan, w, i);
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
    out.weights.assign(visited.begin(), visited.end());
    return out;
}

}  // namespace bethe
