#include "ringdec/ring.hpp"

#include <atomic>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ringdec {

namespace {

std::uint32_t next_ring_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}

std::string triple(const char* op, int a, int b, int c) {
    std::ostringstream out;
    out << "(" << Ring::label(a) << " " << op << " " << Ring::label(b) << ") " << op << " "
        << Ring::label(c);
    return out.str();
}

// Full axiom audit; throws std::invalid_argument naming the first failed
// axiom together with a witness.
void validate_tables(int q, const std::vector<int>& add, const std::vector<int>& mul) {
    auto at = [q](const std::vector<int>& t, int a, int b) { return t[a * q + b]; };

    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (at(add, a, b) < 0 || at(add, a, b) >= q)
                throw std::invalid_argument("addition table entry out of range at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            if (at(mul, a, b) < 0 || at(mul, a, b) >= q)
                throw std::invalid_argument("multiplication table entry out of range at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
        }

    for (int a = 0; a < q; ++a) {
        if (at(add, 0, a) != a || at(add, a, 0) != a)
            throw std::invalid_argument("additive identity axiom fails: a_0 + " + Ring::label(a) +
                                        " = " + Ring::label(at(add, 0, a)));
    }

    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (at(add, a, b) != at(add, b, a))
                throw std::invalid_argument("addition is not commutative: witness (" +
                                            Ring::label(a) + ", " + Ring::label(b) + ")");

    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
                    throw std::invalid_argument("addition is not associative: witness " +
                                                triple("+", a, b, c));
                if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
                    throw std::invalid_argument("multiplication is not associative: witness " +
                                                triple("*", a, b, c));
                if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
                    throw std::invalid_argument("left distributivity fails: witness " +
                                                triple("*,+", a, b, c));
                if (at(mul, at(add, b, c), a) != at(add, at(mul, b, a), at(mul, c, a)))
                    throw std::invalid_argument("right distributivity fails: witness " +
                                                triple("+,*", a, b, c));
            }

    for (int a = 0; a < q; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < q; ++b)
            if (at(add, a, b) == 0) {
                has_inverse = true;
                break;
            }
        if (!has_inverse)
            throw std::invalid_argument("additive inverse missing for " + Ring::label(a));
    }

    for (int a = 0; a < q; ++a)
        if (at(mul, 0, a) != 0 || at(mul, a, 0) != 0)
            throw std::invalid_argument("zero is not absorbing: witness " + Ring::label(a));
}

}  // namespace

Ring Ring::cyclic(int q) {
    if (q < 2) throw std::invalid_argument("cyclic ring needs q >= 2");
    if (q > kMaxRingSize)
        throw std::invalid_argument("ring size " + std::to_string(q) + " exceeds cap " +
                                    std::to_string(kMaxRingSize));
    std::vector<std::vector<int>> add(q, std::vector<int>(q));
    std::vector<std::vector<int>> mul(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            add[a][b] = (a + b) % q;
            mul[a][b] = (a * b) % q;
        }
    return from_tables(q, add, mul);
}

Ring Ring::from_tables(int q, const std::vector<std::vector<int>>& add,
                       const std::vector<std::vector<int>>& mul) {
    if (q < 2) throw std::invalid_argument("ring needs q >= 2");
    if (q > kMaxRingSize)
        throw std::invalid_argument("ring size " + std::to_string(q) + " exceeds cap " +
                                    std::to_string(kMaxRingSize));
    if (static_cast<int>(add.size()) != q || static_cast<int>(mul.size()) != q)
        throw std::invalid_argument("operation tables must have q rows");
    std::vector<int> add_flat, mul_flat;
    add_flat.reserve(q * q);
    mul_flat.reserve(q * q);
    for (int r = 0; r < q; ++r) {
        if (static_cast<int>(add[r].size()) != q || static_cast<int>(mul[r].size()) != q)
            throw std::invalid_argument("operation tables must have q columns");
        add_flat.insert(add_flat.end(), add[r].begin(), add[r].end());
        mul_flat.insert(mul_flat.end(), mul[r].begin(), mul[r].end());
    }
    validate_tables(q, add_flat, mul_flat);

    std::vector<int> neg(q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (add_flat[a * q + b] == 0) {
                neg[a] = b;
                break;
            }

    Ring r;
    r.q_ = q;
    r.id_ = next_ring_id();
    r.add_store_ = std::make_shared<const std::vector<int>>(std::move(add_flat));
    r.mul_store_ = std::make_shared<const std::vector<int>>(std::move(mul_flat));
    r.neg_store_ = std::make_shared<const std::vector<int>>(std::move(neg));
    r.add_ = r.add_store_->data();
    r.mul_ = r.mul_store_->data();
    r.neg_ = r.neg_store_->data();
    return r;
}

Ring Ring::load(std::istream& in) {
    std::string tag;
    int q = 0;
    if (!(in >> tag >> q) || tag != "ring")
        throw std::invalid_argument("ring file must start with 'ring q'");
    auto read_table = [&](const char* what) {
        std::vector<std::vector<int>> t(q, std::vector<int>(q));
        for (int r = 0; r < q; ++r)
            for (int c = 0; c < q; ++c)
                if (!(in >> t[r][c]))
                    throw std::invalid_argument(std::string("ring file: truncated ") + what +
                                                " table");
        return t;
    };
    auto add = read_table("addition");
    auto mul = read_table("multiplication");
    return from_tables(q, add, mul);
}

Ring Ring::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open ring file: " + path);
    return load(in);
}

void Ring::save(std::ostream& out) const {
    out << "ring " << q_ << "\n";
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) out << (b ? " " : "") << add_i(a, b);
        out << "\n";
    }
    out << "\n";
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) out << (b ? " " : "") << mul_i(a, b);
        out << "\n";
    }
}

RingElement Ring::element(int index) const {
    if (index < 0 || index >= q_)
        throw std::out_of_range("element index " + std::to_string(index) + " not in [0," +
                                std::to_string(q_) + ")");
    return {index, id_};
}

void Ring::check_element(RingElement a, const char* op) const {
    if (a.ring_id != id_)
        throw std::invalid_argument(std::string(op) + ": element belongs to a different ring");
    if (a.index < 0 || a.index >= q_)
        throw std::out_of_range(std::string(op) + ": element index out of range");
}

RingElement Ring::add(RingElement a, RingElement b) const {
    check_element(a, "add");
    check_element(b, "add");
    return {add_i(a.index, b.index), id_};
}

RingElement Ring::sub(RingElement a, RingElement b) const {
    check_element(a, "sub");
    check_element(b, "sub");
    return {sub_i(a.index, b.index), id_};
}

RingElement Ring::mul(RingElement a, RingElement b) const {
    check_element(a, "mul");
    check_element(b, "mul");
    return {mul_i(a.index, b.index), id_};
}

RingElement Ring::neg(RingElement a) const {
    check_element(a, "neg");
    return {neg_i(a.index), id_};
}

std::optional<int> Ring::additive_generator() const {
    for (int g = 0; g < q_; ++g) {
        int order = 1;
        int acc = g;
        while (acc != 0 && order <= q_) {
            acc = add_i(acc, g);
            ++order;
        }
        if (acc == 0 && order == q_) return g;
    }
    return std::nullopt;
}

bool Ring::canonical_cyclic_labels() const {
    for (int k = 0; k < q_; ++k)
        for (int l = 0; l < q_; ++l)
            if (add_i(k, l) != (k + l) % q_) return false;
    return true;
}

}  // namespace ringdec
