#pragma once

#include <cstdint>
#include <vector>

namespace ovib {

/// Counter-based pseudo-random generator built on the splitmix64 finalizer.
///
/// Every draw is a pure function of (seed, stream, counter): the n-th output
/// is finalize(base(seed, stream) + n * GOLDEN). State is three integers, so
/// substreams are cheap and any consumer that takes an RngState by value or
/// reference is reproducible bit-for-bit within this implementation.
struct RngState {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t counter = 0;

    RngState() = default;
    RngState(std::uint64_t seed_, std::uint64_t stream_ = 0)
        : seed(seed_), stream(stream_) {}

    /// Next raw 64-bit draw; advances the counter.
    std::uint64_t next_u64();

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_unit();

    /// Uniform double in (0, 1]; never returns 0 (safe under log()).
    double next_unit_open();

    /// Standard normal via Box-Muller. Consumes exactly two raw draws and
    /// keeps no cached spare, so the state advance is input-independent.
    double next_gaussian();

    /// Derived generator with an independent stream; does not advance *this.
    RngState substream(std::uint64_t idx) const;
};

/// n i.i.d. standard-normal draws; advances rng deterministically.
std::vector<double> sample_gaussian(RngState& rng, std::size_t n);

}  // namespace ovib
