#pragma once

#include "parafield/diagrams.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace parafield {

/// Hashable identity of a crossing graph. When `canonical` is set the rows
/// are the adjacency of a canonical relabeling, so isomorphic graphs share a
/// key; otherwise they are the graph's own adjacency rows.
struct GraphKey {
    bool canonical = false;
    std::vector<std::uint32_t> rows;

    friend bool operator==(const GraphKey&, const GraphKey&) = default;
};

struct GraphKeyHash {
    std::size_t operator()(const GraphKey& key) const noexcept;
};

/// Canonical labeling by colour refinement plus individualization with
/// exhaustive tie-breaking. The search gives up after `leaf_budget` leaves
/// (graphs with large automorphism groups) and returns the plain labelled key.
GraphKey canonical_key(const CrossingGraph& g, std::size_t leaf_budget = 2048);

/// Exhaustive isomorphism test over all vertex permutations; for tests and small n.
bool isomorphic_bruteforce(const CrossingGraph& a, const CrossingGraph& b);

} // namespace parafield
