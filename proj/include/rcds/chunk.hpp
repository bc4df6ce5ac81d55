#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace rcds {

// Parameters for one round of content-defined chunking.
struct ChunkParams {
    uint32_t window = 16;       // w, bytes hashed per rolling-hash position
    uint64_t space = 65536;     // s, output hash space; values lie in [0, s)
    uint64_t min_distance = 1;  // h, minimum inter-partition distance in hash positions

    bool valid() const { return window >= 1 && space >= 2 && min_distance >= 1; }
};

// Content hash values of every window position. Empty when the input is
// shorter than the window (the caller then treats the whole input as a
// single partition).
using HashArray = std::vector<uint64_t>;

// Half-open byte range into the chunked string.
struct ByteSpan {
    size_t begin = 0;
    size_t end = 0;

    size_t size() const { return end - begin; }
    bool operator==(const ByteSpan&) const = default;
};

// Polynomial rolling hash: R(b[0..w)) = sum b[i] * 257^(w-1-i) mod (2^61 - 1),
// reduced mod s on output. Sliding one byte is O(1).
class RollingHasher {
public:
    RollingHasher(uint32_t window, uint64_t space);

    // Hash of the first full window of `data`; data.size() must be >= window.
    uint64_t prime(std::string_view data);
    // Slide one byte: drop `out`, append `in`, return the new reduced value.
    uint64_t slide(uint8_t out, uint8_t in);

private:
    uint64_t acc_ = 0;     // current window value mod 2^61-1
    uint64_t top_pow_;     // 257^(w-1) mod 2^61-1
    uint32_t window_;
    uint64_t space_;
};

// Hash value for every window position of `data`; result has
// max(0, data.size() - window + 1) entries, each in [0, space).
HashArray content_hash_array(std::string_view data, const ChunkParams& params);

// Indices k where values[k] is a non-strict local minimum over [k-h, k+h]
// (clamped to the array) and strictly below every value in [k-h, k-1], so
// the leftmost of equal minima wins. Returned indices are strictly
// increasing and pairwise more than h apart.
std::vector<size_t> find_cut_points(const HashArray& values, uint64_t h);

// Content-defined partition of `data`. Each interior cut point at hash
// index k starts a partition at byte offset k; the spans concatenate to
// exactly `data`. Degenerate inputs yield a single span.
std::vector<ByteSpan> partition(std::string_view data, const ChunkParams& params);

}  // namespace rcds
