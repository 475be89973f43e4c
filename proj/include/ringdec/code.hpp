#pragma once

#include "ringdec/blockvec.hpp"
#include "ringdec/errors.hpp"
#include "ringdec/numeric.hpp"
#include "ringdec/ring.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ringdec {

inline constexpr std::size_t kDefaultSpcBound = 1'000'000;   // sum over checks of |C_j|
inline constexpr std::size_t kDefaultEnumBound = 1u << 20;   // q^n cap for brute force

struct Word {
    std::uint32_t ring_id = 0;
    std::vector<int> symbols;

    int size() const { return static_cast<int>(symbols.size()); }
    bool is_zero() const {
        for (int s : symbols)
            if (s != 0) return false;
        return true;
    }
    bool operator==(const Word&) const = default;
};

std::string to_string(const Word& w);

// Linear code c H^T = 0 over a finite ring. Row/column supports and the
// per-check local codebooks C_j are precomputed at construction; the object
// is immutable afterwards.
class Code {
public:
    Code(Ring ring, std::vector<std::vector<int>> h, std::size_t spc_bound = kDefaultSpcBound);

    // Text format: "pcm q m n", then m rows of n element indices. A table
    // ring may be supplied for non-Z_q codes; default is the cyclic ring.
    static Code load(std::istream& in, std::optional<Ring> ring = std::nullopt,
                     std::size_t spc_bound = kDefaultSpcBound);
    static Code load_file(const std::string& path, std::optional<Ring> ring = std::nullopt,
                          std::size_t spc_bound = kDefaultSpcBound);
    void save(std::ostream& out) const;

    const Ring& ring() const { return ring_; }
    int n() const { return n_; }
    int m() const { return m_; }
    int q() const { return ring_.q(); }
    int h(int j, int i) const { return h_[check_index(j) * n_ + i]; }

    const std::vector<int>& row_support(int j) const { return row_supports_[check_index(j)]; }
    const std::vector<int>& col_support(int i) const;

    // C_j as local words aligned with row_support(j), in lexicographic order
    // of element indices.
    const std::vector<std::vector<int>>& local_codebook(int j) const {
        return spc_books_[check_index(j)];
    }
    // Position of a local word in C_j, or -1 when it does not satisfy the check.
    int local_index(int j, const std::vector<int>& local) const;

    Word word(std::vector<int> symbols) const;
    Word zero_word() const { return {ring_.id(), std::vector<int>(n_, 0)}; }
    void check_word(const Word& w) const;

    Word add(const Word& a, const Word& b) const;
    Word sub(const Word& a, const Word& b) const;
    Word scale(int beta, const Word& a) const;

    bool check_satisfied(int j, const Word& w) const;
    bool is_codeword(const Word& w) const;
    std::vector<int> project(int j, const Word& w) const;

    // Brute force over all q^n words; refuses when q^n exceeds the bound.
    std::vector<Word> enumerate_codewords(std::size_t bound = kDefaultEnumBound) const;

private:
    int check_index(int j) const;

    Ring ring_;
    int m_ = 0, n_ = 0;
    std::vector<int> h_;  // flattened m x n element indices
    std::vector<std::vector<int>> row_supports_;
    std::vector<std::vector<int>> col_supports_;
    std::vector<std::vector<std::vector<int>>> spc_books_;
};

// Indicator embedding: symbol -> 0/1 block with a one at the symbol's
// position (zero symbol -> all-zero block), applied per coordinate.
template <class S>
SymbolBlockVec<S> embed(const Ring& ring, const Word& w) {
    if (w.ring_id != ring.id()) throw std::invalid_argument("embed: word from different ring");
    SymbolBlockVec<S> f(w.size(), ring.q());
    for (int i = 0; i < w.size(); ++i)
        if (w.symbols[i] != 0) f.at(i, w.symbols[i]) = 1;
    return f;
}

// Inverse of the embedding. Every block must be a valid indicator image:
// entries 0/1 within tol, at most one 1.
template <class S>
Word unembed(const Ring& ring, const SymbolBlockVec<S>& f, const S& tol = NumTraits<S>::int_tol()) {
    if (f.q != ring.q()) throw std::invalid_argument("unembed: block shape does not match ring");
    Word w{ring.id(), std::vector<int>(f.n, 0)};
    for (int i = 0; i < f.n; ++i) {
        int ones = 0;
        for (int alpha = 1; alpha < f.q; ++alpha) {
            const S& x = f.at(i, alpha);
            if (abs_val<S>(x) <= tol) continue;
            if (abs_val<S>(x - S(1)) <= tol) {
                ++ones;
                w.symbols[i] = alpha;
            } else {
                throw NotIntegralError("unembed: block " + std::to_string(i) +
                                       " holds a non-indicator entry");
            }
        }
        if (ones > 1)
            throw NotIntegralError("unembed: block " + std::to_string(i) +
                                   " holds more than one unit entry");
    }
    return w;
}

// lambda . Xi(w): cost a word pays under a blocked cost vector.
template <class S>
S indicator_cost(const SymbolBlockVec<S>& lambda, const Word& w) {
    if (lambda.n != w.size()) throw std::invalid_argument("indicator_cost: length mismatch");
    S acc = 0;
    for (int i = 0; i < w.size(); ++i)
        if (w.symbols[i] != 0) acc += lambda.at(i, w.symbols[i]);
    return acc;
}

}  // namespace ringdec
