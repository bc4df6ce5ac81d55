#include "rcds/chunk.hpp"

#include <cassert>
#include <deque>

namespace rcds {

namespace {

constexpr uint64_t kMersenne61 = (uint64_t{1} << 61) - 1;
constexpr uint64_t kBase = 257;

uint64_t mod61(uint64_t v) {
    v = (v & kMersenne61) + (v >> 61);
    if (v >= kMersenne61) v -= kMersenne61;
    return v;
}

uint64_t mul61(uint64_t a, uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    uint64_t lo = static_cast<uint64_t>(p & kMersenne61);
    uint64_t hi = static_cast<uint64_t>(p >> 61);
    uint64_t r = lo + hi;
    if (r >= kMersenne61) r -= kMersenne61;
    return r;
}

uint64_t pow61(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    uint64_t b = mod61(base);
    while (exp) {
        if (exp & 1) r = mul61(r, b);
        b = mul61(b, b);
        exp >>= 1;
    }
    return r;
}

// Sliding-window minima of the h values strictly before each index
// (forward=true) or strictly after it (forward=false). Monotonic deque,
// O(n) total. Positions with an empty window get UINT64_MAX.
std::vector<uint64_t> neighbor_minima(const HashArray& v, uint64_t h, bool before) {
    const size_t n = v.size();
    std::vector<uint64_t> out(n, UINT64_MAX);
    std::deque<size_t> q;  // indices with increasing values
    if (before) {
        for (size_t k = 0; k < n; ++k) {
            while (!q.empty() && q.front() + h < k) q.pop_front();
            if (!q.empty()) out[k] = v[q.front()];
            while (!q.empty() && v[q.back()] >= v[k]) q.pop_back();
            q.push_back(k);
        }
    } else {
        for (size_t i = n; i-- > 0;) {
            while (!q.empty() && q.front() > i + h) q.pop_front();
            if (!q.empty()) out[i] = v[q.front()];
            while (!q.empty() && v[q.back()] >= v[i]) q.pop_back();
            q.push_back(i);
        }
    }
    return out;
}

}  // namespace

RollingHasher::RollingHasher(uint32_t window, uint64_t space)
    : top_pow_(pow61(kBase, window > 0 ? window - 1 : 0)), window_(window), space_(space) {
    assert(window_ >= 1);
    assert(space_ >= 2);
}

uint64_t RollingHasher::prime(std::string_view data) {
    acc_ = 0;
    for (uint32_t i = 0; i < window_; ++i)
        acc_ = mod61(mul61(acc_, kBase) + static_cast<uint8_t>(data[i]));
    return acc_ % space_;
}

uint64_t RollingHasher::slide(uint8_t out, uint8_t in) {
    uint64_t drop = mul61(top_pow_, out);
    acc_ = mod61(acc_ + kMersenne61 - drop);
    acc_ = mod61(mul61(acc_, kBase) + in);
    return acc_ % space_;
}

HashArray content_hash_array(std::string_view data, const ChunkParams& params) {
    assert(params.valid());
    HashArray values;
    if (data.size() < params.window) return values;  // EmptyHashArray signal

    const size_t n = data.size() - params.window + 1;
    values.reserve(n);
    RollingHasher rh(params.window, params.space);
    values.push_back(rh.prime(data));
    for (size_t k = 1; k < n; ++k) {
        values.push_back(rh.slide(static_cast<uint8_t>(data[k - 1]),
                                  static_cast<uint8_t>(data[k + params.window - 1])));
    }
    return values;
}

std::vector<size_t> find_cut_points(const HashArray& values, uint64_t h) {
    std::vector<size_t> cuts;
    if (values.empty()) return cuts;

    // values[k] must be <= min of the right half-window and < min of the
    // left half-window; the left strictness implements the leftmost-tie rule.
    std::vector<uint64_t> left_min = neighbor_minima(values, h, true);
    std::vector<uint64_t> right_min = neighbor_minima(values, h, false);
    for (size_t k = 0; k < values.size(); ++k) {
        if (values[k] < left_min[k] && values[k] <= right_min[k]) cuts.push_back(k);
    }
    return cuts;
}

std::vector<ByteSpan> partition(std::string_view data, const ChunkParams& params) {
    std::vector<ByteSpan> spans;
    if (data.size() < params.window || data.empty()) {
        spans.push_back({0, data.size()});
        return spans;
    }

    HashArray values = content_hash_array(data, params);
    std::vector<size_t> cuts = find_cut_points(values, params.min_distance);

    size_t start = 0;
    for (size_t k : cuts) {
        if (k == 0) continue;  // a cut at the first window is absorbed into the start
        spans.push_back({start, k});
        start = k;
    }
    spans.push_back({start, data.size()});
    return spans;
}

}  // namespace rcds
