#include "quanto/rng.hpp"

namespace quanto {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream_id) {
    // seed_seq consumes 32-bit words; split both 64-bit inputs and add a tag
    // so (seed, id) and (id, seed) land on unrelated states.
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32), 0x71a9c3u};
    return std::mt19937_64(seq);
}

}  // namespace

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream_id)
    : engine_(seeded_engine(seed, stream_id)) {}

NormalStream rng_stream(std::uint64_t seed, std::uint64_t stream_id) {
    return NormalStream(seed, stream_id);
}

}  // namespace quanto
