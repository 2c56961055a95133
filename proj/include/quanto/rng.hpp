#pragma once

#include <cstdint>
#include <random>

#include <boost/random/normal_distribution.hpp>

namespace quanto {

/// Standard normal variates from a 64-bit Mersenne Twister seeded through
/// std::seed_seq over (seed, stream_id), with Boost's ziggurat transform.
/// Both pieces are fully specified algorithms, so a given (seed, stream_id)
/// yields the same sequence on every platform.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream_id);

    double operator()() { return dist_(engine_); }

private:
    std::mt19937_64 engine_;
    boost::random::normal_distribution<double> dist_;
};

NormalStream rng_stream(std::uint64_t seed, std::uint64_t stream_id);

}  // namespace quanto
