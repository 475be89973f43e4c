#pragma once

#include <stdexcept>
#include <vector>

namespace ringdec {

// Length (q-1)*n vector blocked per symbol position, block i indexed by the
// nonzero ring elements alpha = 1..q-1. Shared shape of the indicator
// embedding, the LLR cost vector and the LP f-variables.
template <class S>
struct SymbolBlockVec {
    int n = 0;
    int q = 0;
    std::vector<S> v;

    SymbolBlockVec() = default;
    SymbolBlockVec(int n_, int q_) : n(n_), q(q_), v(static_cast<std::size_t>(n_) * (q_ - 1)) {}

    int size() const { return n * (q - 1); }

    S& at(int i, int alpha) { return v[idx(i, alpha)]; }
    const S& at(int i, int alpha) const { return v[idx(i, alpha)]; }

    std::size_t idx(int i, int alpha) const {
        if (i < 0 || i >= n || alpha < 1 || alpha >= q)
            throw std::out_of_range("block index out of range");
        return static_cast<std::size_t>(i) * (q - 1) + (alpha - 1);
    }

    bool operator==(const SymbolBlockVec&) const = default;
};

template <class S>
S dot(const SymbolBlockVec<S>& a, const SymbolBlockVec<S>& b) {
    if (a.n != b.n || a.q != b.q) throw std::invalid_argument("dot: shape mismatch");
    S acc = 0;
    for (std::size_t k = 0; k < a.v.size(); ++k) acc += a.v[k] * b.v[k];
    return acc;
}

}  // namespace ringdec
