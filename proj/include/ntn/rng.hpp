#pragma once

#include <array>
#include <cstdint>
#include <random>

namespace ntn {

using RandomStream = std::mt19937_64;

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
} // namespace detail

// Counter-derived substream: (seed, stream_index) -> independent generator.
// Replication i of a simulation always gets make_stream(seed, i), so results
// do not depend on execution order or on how work is split across threads.
inline RandomStream make_stream(std::uint64_t seed, std::uint64_t stream_index) {
    std::uint64_t s = seed ^ (0x632be59bd9b4e019ull + 0x9e3779b97f4a7c15ull * stream_index);
    std::array<std::uint32_t, 8> words{};
    for (int i = 0; i < 4; ++i) {
        std::uint64_t w = detail::splitmix64(s);
        words[2 * i] = static_cast<std::uint32_t>(w);
        words[2 * i + 1] = static_cast<std::uint32_t>(w >> 32);
    }
    std::seed_seq seq(words.begin(), words.end());
    return RandomStream(seq);
}

inline double uniform01(RandomStream& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace ntn
