#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rcds/chunk.hpp"

namespace rcds {

// Parameters for building an L-level p-ary hash partition tree.
//
// schedule_n overrides the string length used by the per-level parameter
// schedule. Reconciling peers must chunk with identical parameters, so the
// protocol sets it to the larger of the two string lengths; 0 means "use
// the length of the string being built".
struct TreeParams {
    uint32_t levels = 4;   // L
    uint32_t branch = 8;   // p, schedule target for children per node
    uint32_t window = 16;  // w
    uint64_t schedule_n = 0;

    bool valid() const { return levels >= 1 && branch >= 2 && window >= 1; }
    bool operator==(const TreeParams&) const = default;
};

struct TreeNode {
    uint64_t hash = 0;
    uint32_t level = 0;
    ByteSpan span;
    std::vector<TreeNode> children;

    bool is_leaf() const { return children.empty(); }
};

// hash -> substring dictionary. Values are views into buffers the catalog
// owns (retained sources, received literals, reconstructed strings), so
// lookups stay valid for the catalog's lifetime. Inserting two distinct
// strings under one hash throws CatalogCollision.
class HashCatalog {
public:
    // Takes ownership of a buffer and returns a stable view of it.
    std::string_view retain(std::string buffer);

    // Insert a view into an already-retained buffer. Returns false when the
    // hash was already present (with identical bytes).
    bool insert(uint64_t hash, std::string_view bytes);

    // Copy `bytes` into the catalog's arena, then insert.
    bool insert_copy(uint64_t hash, std::string_view bytes);

    bool contains(uint64_t hash) const { return entries_.count(hash) != 0; }

    // nullptr when absent.
    const std::string_view* lookup(uint64_t hash) const;

    size_t size() const { return entries_.size(); }

private:
    std::deque<std::string> arena_;
    std::unordered_map<uint64_t, std::string_view> entries_;
};

// Chunking parameters for level l in [1, L]: s = w * p^(L-l+1) and
// h = N / p^l, clamped to their minimum legal values. Powers saturate
// instead of overflowing.
ChunkParams schedule(uint32_t level, uint64_t n, const TreeParams& params);

struct BuiltTree {
    TreeNode root;
    std::shared_ptr<HashCatalog> catalog;
    uint64_t node_count = 0;
};

// Recursively partitions `data` into an L-level tree, registering every
// node's (hash, substring) pair in the catalog. A node whose partition
// yields a single span becomes a leaf regardless of level.
BuiltTree build_tree(std::string_view data, const TreeParams& params);

}  // namespace rcds
