#pragma once

#include <cstdint>

namespace ringdec {

// Counter-based generator: every draw is a pure function of (seed, stream,
// counter), so parallel trials keyed by trial index never share state and a
// report is reproducible from the seed alone.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    double next_unit();    // uniform [0, 1)
    double next_normal();  // standard normal (Box-Muller)
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ringdec
