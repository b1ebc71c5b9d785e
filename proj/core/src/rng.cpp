#include "ovib/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ovib {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 output function (Steele, Lea, Flood 2014).
inline std::uint64_t finalize(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_base(std::uint64_t seed, std::uint64_t stream) {
    return finalize(seed) ^ finalize(stream ^ 0xD1B54A32D192ED03ull);
}

}  // namespace

std::uint64_t RngState::next_u64() {
    return finalize(stream_base(seed, stream) + (counter++) * kGolden);
}

double RngState::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngState::next_unit_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngState::next_gaussian() {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

RngState RngState::substream(std::uint64_t idx) const {
    RngState out;
    out.seed = seed;
    out.stream = finalize(stream + kGolden * (idx + 1));
    out.counter = 0;
    return out;
}

std::vector<double> sample_gaussian(RngState& rng, std::size_t n) {
    if (n == 0) throw std::invalid_argument("sample_gaussian: n must be >= 1");
    std::vector<double> out(n);
    for (auto& v : out) v = rng.next_gaussian();
    return out;
}

}  // namespace ovib
