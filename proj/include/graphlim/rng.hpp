#ifndef GRAPHLIM_RNG_HPP
#define GRAPHLIM_RNG_HPP

#include <cstdint>

namespace graphlim::rng {

// Counter-based random numbers: every variate is a pure function of
// (seed, stream tag, indices), so results are bit-reproducible across runs,
// platforms, and thread schedules, and independent streams never need
// coordination.
//
// Stream-splitting rule used throughout the library:
//   kStreamNode  — latent uniform u_i of node i in a W-random draw
//   kStreamEdge  — the edge coin of pair (i, j), i < j
//   kStreamTrial — Monte Carlo trial t, node i
//   kStreamMass  — raw masses of randomly generated distributions
// New call sites must pick a fresh tag rather than reuse one of these.

inline constexpr std::uint64_t kStreamNode = 0x6e6f6465;  // "node"
inline constexpr std::uint64_t kStreamEdge = 0x65646765;  // "edge"
inline constexpr std::uint64_t kStreamTrial = 0x7472696c; // "tril"
inline constexpr std::uint64_t kStreamMass = 0x6d617373;  // "mass"

// SplitMix64 output function.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Key of variate (a, b) in sub-stream `tag` of `seed`.
inline constexpr std::uint64_t stream(std::uint64_t seed, std::uint64_t tag,
                                      std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = mix64(seed ^ 0x853c49e6748fea9bull);
    h = mix64(h ^ tag);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return h;
}

// Uniform double in [0, 1), 53 random bits.
inline constexpr double unit_double(std::uint64_t key) {
    return static_cast<double>(key >> 11) * 0x1.0p-53;
}

inline constexpr double uniform(std::uint64_t seed, std::uint64_t tag,
                                std::uint64_t a = 0, std::uint64_t b = 0) {
    return unit_double(stream(seed, tag, a, b));
}

} // namespace graphlim::rng

#endif
