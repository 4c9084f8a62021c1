#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace symgraph {

// Seedable random streams with a stable cross-platform sequence. Every random
// choice draws from a stream derived from (master seed, purpose label, id),
// so results do not depend on evaluation order across classes or trials.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                 std::uint64_t id) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the label
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return splitmix64(splitmix64(master ^ h) ^ splitmix64(id));
}

inline std::mt19937_64 make_stream(std::uint64_t master, std::string_view label,
                                   std::uint64_t id) {
    return std::mt19937_64(derive_seed(master, label, id));
}

// Uniform draw from [0, n) by rejection; avoids the implementation-defined
// std::uniform_int_distribution.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

}  // namespace symgraph
