#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ringdec {

// Operation tables are q x q; anything larger blows past desk scale downstream.
inline constexpr int kMaxRingSize = 64;

struct RingElement {
    int index = 0;
    std::uint32_t ring_id = 0;

    bool operator==(const RingElement&) const = default;
};

// Finite ring with exhaustive operation tables. Element index 0 is always
// the additive identity, so the canonical cyclic labeling a_k + a_l =
// a_{(k+l) mod q} can be read directly off indices when it holds.
// Immutable after construction; copies share the tables.
class Ring {
public:
    // Z_q: addition and multiplication mod q.
    static Ring cyclic(int q);

    // Arbitrary tables (Galois fields, product rings, ...). Validates every
    // ring axiom by exhaustion and reports a witness triple on failure.
    static Ring from_tables(int q, const std::vector<std::vector<int>>& add,
                            const std::vector<std::vector<int>>& mul);

    // Text format: "ring q", q rows of addition, blank line, q rows of
    // multiplication.
    static Ring load(std::istream& in);
    static Ring load_file(const std::string& path);
    void save(std::ostream& out) const;

    int q() const { return q_; }
    std::uint32_t id() const { return id_; }

    RingElement element(int index) const;
    RingElement zero() const { return {0, id_}; }
    static std::string label(int index) { return "a_" + std::to_string(index); }

    RingElement add(RingElement a, RingElement b) const;
    RingElement sub(RingElement a, RingElement b) const;
    RingElement mul(RingElement a, RingElement b) const;
    RingElement neg(RingElement a) const;

    // Index-level arithmetic for the hot loops; bounds are the caller's job.
    int add_i(int a, int b) const { return add_[a * q_ + b]; }
    int mul_i(int a, int b) const { return mul_[a * q_ + b]; }
    int neg_i(int a) const { return neg_[a]; }
    int sub_i(int a, int b) const { return add_[a * q_ + neg_[b]]; }

    // Additive generator of order q, when the additive group is cyclic.
    std::optional<int> additive_generator() const;
    bool additively_cyclic() const { return additive_generator().has_value(); }

    // True when add(a_k, a_l) = a_{(k+l) mod q}: the labeling the PSK
    // modulation mapping requires.
    bool canonical_cyclic_labels() const;

    bool same_ring(const Ring& other) const { return id_ == other.id_; }

private:
    Ring() = default;
    void check_element(RingElement a, const char* op) const;

    int q_ = 0;
    std::uint32_t id_ = 0;
    std::shared_ptr<const std::vector<int>> add_store_, mul_store_;
    // Raw views of the shared tables (flattened q*q) and derived negation.
    const int* add_ = nullptr;
    const int* mul_ = nullptr;
    std::shared_ptr<const std::vector<int>> neg_store_;
    const int* neg_ = nullptr;
};

}  // namespace ringdec
