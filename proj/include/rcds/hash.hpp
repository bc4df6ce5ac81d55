#pragma once

#include <cstdint>
#include <string_view>

namespace rcds {

// 64-bit FNV-1a, applied byte-wise. Stable across platforms; both peers
// must compute identical values for every substring they exchange.
inline constexpr uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr uint64_t kFnvPrime = 1099511628211ULL;

inline uint64_t hash64(std::string_view data) {
    uint64_t h = kFnvOffsetBasis;
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

// Continuation form for hashing logically concatenated inputs without
// materializing them.
inline uint64_t hash64_extend(uint64_t h, std::string_view data) {
    for (unsigned char c : data) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

inline uint64_t hash64_extend_u8(uint64_t h, uint8_t v) {
    h ^= v;
    h *= kFnvPrime;
    return h;
}

inline uint64_t hash64_extend_u32(uint64_t h, uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) h = hash64_extend_u8(h, static_cast<uint8_t>(v >> shift));
    return h;
}

inline uint64_t hash64_extend_u64(uint64_t h, uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) h = hash64_extend_u8(h, static_cast<uint8_t>(v >> shift));
    return h;
}

// Deterministic uniform reduction of a 64-bit random word onto [0, n).
// uniform_int_distribution is implementation-defined, so seeded tests and
// the bench harness use this instead.
inline uint64_t reduce_u64(uint64_t word, uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(word) * n) >> 64);
}

}  // namespace rcds
