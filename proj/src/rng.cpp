#include "seqauct/rng.hpp"

#include <cmath>
#include <stdexcept>

#include "seqauct/numeric.hpp"

namespace seqauct {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

RngStream::RngStream(std::uint64_t seed) : key_(seed) {
    std::uint64_t sm = seed;
    for (auto& s : s_) s = splitmix64(sm);
}

RngStream RngStream::substream(std::uint64_t index) const {
    std::uint64_t sm = key_ ^ (0x9E3779B97F4A7C15ULL * (index + 1));
    return RngStream(splitmix64(sm));
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() {
    return ((double)(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double RngStream::normal() { return std_normal_quantile(uniform()); }

double RngStream::lognormal(double mu, double sigma) {
    return std::exp(mu + sigma * normal());
}

int RngStream::discrete_uniform(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("discrete_uniform: hi < lo");
    const int span = hi - lo + 1;
    int k = (int)(uniform() * (double)span);
    if (k >= span) k = span - 1;
    return lo + k;
}

}  // namespace seqauct
