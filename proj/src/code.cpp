#include "ringdec/code.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ringdec {

std::string to_string(const Word& w) {
    std::ostringstream out;
    for (int i = 0; i < w.size(); ++i) out << (i ? " " : "") << w.symbols[i];
    return out.str();
}

namespace {

// All local words on a support satisfying sum_t b_t * coeff_t = 0, in
// lexicographic order. The first d-1 positions run free; the last position
// is read off a precomputed solve list per required residual.
std::vector<std::vector<int>> enumerate_spc_rows(const Ring& ring, const std::vector<int>& coeffs) {
    const int q = ring.q();
    const int d = static_cast<int>(coeffs.size());
    std::vector<std::vector<int>> book;
    if (d == 0) return book;

    // solutions[t] = all x with x * coeff_last = t, ascending
    std::vector<std::vector<int>> solutions(q);
    for (int x = 0; x < q; ++x) solutions[ring.mul_i(x, coeffs[d - 1])].push_back(x);

    std::vector<int> prefix(d, 0);
    while (true) {
        int partial = 0;
        for (int t = 0; t < d - 1; ++t)
            partial = ring.add_i(partial, ring.mul_i(prefix[t], coeffs[t]));
        for (int x : solutions[ring.neg_i(partial)]) {
            prefix[d - 1] = x;
            book.push_back(prefix);
        }
        int t = d - 2;
        while (t >= 0 && prefix[t] == q - 1) prefix[t--] = 0;
        if (t < 0) break;
        ++prefix[t];
    }
    return book;
}

}  // namespace

Code::Code(Ring ring, std::vector<std::vector<int>> h, std::size_t spc_bound)
    : ring_(std::move(ring)) {
    m_ = static_cast<int>(h.size());
    if (m_ == 0) throw std::invalid_argument("parity-check matrix needs at least one row");
    n_ = static_cast<int>(h[0].size());
    if (n_ == 0) throw std::invalid_argument("parity-check matrix needs at least one column");
    h_.reserve(static_cast<std::size_t>(m_) * n_);
    for (const auto& row : h) {
        if (static_cast<int>(row.size()) != n_)
            throw std::invalid_argument("parity-check matrix rows differ in length");
        for (int e : row) {
            if (e < 0 || e >= ring_.q())
                throw std::invalid_argument("parity-check entry " + std::to_string(e) +
                                            " is not a ring element index");
            h_.push_back(e);
        }
    }

    row_supports_.resize(m_);
    col_supports_.resize(n_);
    for (int j = 0; j < m_; ++j)
        for (int i = 0; i < n_; ++i)
            if (this->h(j, i) != 0) {
                row_supports_[j].push_back(i);
                col_supports_[i].push_back(j);
            }

    // Size estimate before enumeration: each degree-d row costs q^(d-1).
    double estimate = 0;
    for (int j = 0; j < m_; ++j) {
        if (row_supports_[j].empty())
            throw std::invalid_argument("parity-check row " + std::to_string(j) +
                                        " has empty support");
        double rows = 1;
        for (std::size_t t = 0; t + 1 < row_supports_[j].size(); ++t) rows *= ring_.q();
        estimate += rows;
    }
    if (estimate > static_cast<double>(spc_bound) * ring_.q())
        throw SizeRefusalError("local codebooks would hold about " + std::to_string(estimate) +
                               " words, over the bound " + std::to_string(spc_bound));

    spc_books_.resize(m_);
    std::size_t total = 0;
    for (int j = 0; j < m_; ++j) {
        std::vector<int> coeffs;
        coeffs.reserve(row_supports_[j].size());
        for (int i : row_supports_[j]) coeffs.push_back(this->h(j, i));
        spc_books_[j] = enumerate_spc_rows(ring_, coeffs);
        total += spc_books_[j].size();
        if (total > spc_bound)
            throw SizeRefusalError("local codebooks exceed the bound " +
                                   std::to_string(spc_bound));
    }
}

Code Code::load(std::istream& in, std::optional<Ring> ring, std::size_t spc_bound) {
    std::string tag;
    int q = 0, m = 0, n = 0;
    if (!(in >> tag >> q >> m >> n) || tag != "pcm")
        throw std::invalid_argument("code file must start with 'pcm q m n'");
    if (ring && ring->q() != q)
        throw std::invalid_argument("code file expects q=" + std::to_string(q) +
                                    " but the supplied ring has q=" + std::to_string(ring->q()));
    std::vector<std::vector<int>> h(m, std::vector<int>(n));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
            if (!(in >> h[j][i])) throw std::invalid_argument("code file: truncated matrix");
    return Code(ring ? *ring : Ring::cyclic(q), std::move(h), spc_bound);
}

Code Code::load_file(const std::string& path, std::optional<Ring> ring, std::size_t spc_bound) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    return load(in, std::move(ring), spc_bound);
}

void Code::save(std::ostream& out) const {
    out << "pcm " << q() << " " << m_ << " " << n_ << "\n";
    for (int j = 0; j < m_; ++j) {
        for (int i = 0; i < n_; ++i) out << (i ? " " : "") << h(j, i);
        out << "\n";
    }
}

int Code::check_index(int j) const {
    if (j < 0 || j >= m_) throw std::out_of_range("check index " + std::to_string(j));
    return j;
}

const std::vector<int>& Code::col_support(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("column index " + std::to_string(i));
    return col_supports_[i];
}

int Code::local_index(int j, const std::vector<int>& local) const {
    const auto& book = local_codebook(j);
    auto it = std::lower_bound(book.begin(), book.end(), local);
    if (it == book.end() || *it != local) return -1;
    return static_cast<int>(it - book.begin());
}

Word Code::word(std::vector<int> symbols) const {
    if (static_cast<int>(symbols.size()) != n_)
        throw std::invalid_argument("word length " + std::to_string(symbols.size()) +
                                    " does not match n=" + std::to_string(n_));
    for (int s : symbols)
        if (s < 0 || s >= ring_.q())
            throw std::invalid_argument("word symbol " + std::to_string(s) +
                                        " is not a ring element index");
    return {ring_.id(), std::move(symbols)};
}

void Code::check_word(const Word& w) const {
    if (w.ring_id != ring_.id())
        throw std::invalid_argument("word belongs to a different ring");
    if (w.size() != n_)
        throw std::invalid_argument("word length does not match the code");
}

Word Code::add(const Word& a, const Word& b) const {
    check_word(a);
    check_word(b);
    Word out{ring_.id(), std::vector<int>(n_)};
    for (int i = 0; i < n_; ++i) out.symbols[i] = ring_.add_i(a.symbols[i], b.symbols[i]);
    return out;
}

Word Code::sub(const Word& a, const Word& b) const {
    check_word(a);
    check_word(b);
    Word out{ring_.id(), std::vector<int>(n_)};
    for (int i = 0; i < n_; ++i) out.symbols[i] = ring_.sub_i(a.symbols[i], b.symbols[i]);
    return out;
}

Word Code::scale(int beta, const Word& a) const {
    check_word(a);
    if (beta < 0 || beta >= ring_.q()) throw std::invalid_argument("scale: bad element index");
    Word out{ring_.id(), std::vector<int>(n_)};
    for (int i = 0; i < n_; ++i) out.symbols[i] = ring_.mul_i(beta, a.symbols[i]);
    return out;
}

bool Code::check_satisfied(int j, const Word& w) const {
    check_word(w);
    int acc = 0;
    for (int i : row_support(j)) acc = ring_.add_i(acc, ring_.mul_i(w.symbols[i], h(j, i)));
    return acc == 0;
}

bool Code::is_codeword(const Word& w) const {
    for (int j = 0; j < m_; ++j)
        if (!check_satisfied(j, w)) return false;
    return true;
}

std::vector<int> Code::project(int j, const Word& w) const {
    check_word(w);
    std::vector<int> local;
    local.reserve(row_support(j).size());
    for (int i : row_support(j)) local.push_back(w.symbols[i]);
    return local;
}

std::vector<Word> Code::enumerate_codewords(std::size_t bound) const {
    double total = 1;
    for (int i = 0; i < n_; ++i) total *= ring_.q();
    if (total > static_cast<double>(bound))
        throw SizeRefusalError("codeword enumeration needs about " + std::to_string(total) +
                               " words, over the bound " + std::to_string(bound));
    std::vector<Word> out;
    Word w = zero_word();
    while (true) {
        if (is_codeword(w)) out.push_back(w);
        int i = n_ - 1;
        while (i >= 0 && w.symbols[i] == ring_.q() - 1) w.symbols[i--] = 0;
        if (i < 0) break;
        ++w.symbols[i];
    }
    return out;
}

}  // namespace ringdec
