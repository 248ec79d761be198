#pragma once
// Deterministic, splittable random stream (xoshiro256++ seeded through
// SplitMix64).  Substreams are derived from the stream's key and an
// index, never from draw position, so parallel and serial Monte Carlo
// runs produce identical output.  No libstdc++ distributions are used:
// their output is implementation-defined and would break byte-identical
// reruns.

#include <cstdint>

namespace seqauct {

class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    // Child stream for (replication, auction, ...) index paths.
    RngStream substream(std::uint64_t index) const;

    std::uint64_t next_u64();

    // Uniform on (0, 1); never returns an exact endpoint.
    double uniform();
    double uniform(double lo, double hi);

    // Inverse-CDF draws, so determinism is pinned to our own quantile.
    double normal();
    double lognormal(double mu, double sigma);

    // Integer uniform on {lo, ..., hi} inclusive.
    int discrete_uniform(int lo, int hi);

private:
    std::uint64_t key_;
    std::uint64_t s_[4];
};

}  // namespace seqauct
