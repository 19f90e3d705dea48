#pragma once

#include "parafield/diagrams.hpp"
#include "parafield/errors.hpp"
#include "parafield/graph_canon.hpp"
#include "parafield/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>

namespace parafield {

/// Direct sum over every index assignment alpha in {1..p}^n of the product,
/// over crossing edges {i,j}, of (2 delta - 1) for parabose or (1 - 2 delta)
/// for parafermi. This is the reference oracle; it refuses with CapExceeded
/// when p^n exceeds `budget`.
BigInt coefficient_bruteforce(const CrossingGraph& g, std::uint64_t p,
                              Statistics statistics = Statistics::Parabose,
                              std::uint64_t budget = Limits::kDefaultOracleBudget);

/// Visits every set partition of {0..n-1} as a restricted-growth string
/// (blocks labelled by first appearance), in lexicographic order.
void for_each_set_partition(int n, const std::function<void(std::span<const int> block_of, int blocks)>& visit);

/// Exact parabose coefficient: sum over set partitions pi of the vertices of
/// sign(pi, g) * p (p-1) ... (p - |pi| + 1), where sign multiplies -1 for
/// every edge whose endpoints fall in different blocks.
PPolynomial coefficient_polynomial(const CrossingGraph& g,
                                   int max_vertices = Limits::kDefaultMaxCoefficientVertices);

/// Coefficient of the fully crossed n-chord diagram from integer partitions
/// of n: sum over lambda of (-1)^A(lambda) E(lambda).
PPolynomial coefficient_saturated(int n);

/// (-1)^|edges| times the parabose coefficient.
PPolynomial parafermi_coefficient(const CrossingGraph& g,
                                  int max_vertices = Limits::kDefaultMaxCoefficientVertices);

PPolynomial coefficient_for(const CrossingGraph& g, Statistics statistics,
                            int max_vertices = Limits::kDefaultMaxCoefficientVertices);

/// Memoizes parabose coefficients by canonical crossing-graph form. Results
/// are identical with or without the cache.
class CoefficientCache {
public:
    explicit CoefficientCache(int max_vertices = Limits::kDefaultMaxCoefficientVertices)
        : max_vertices_(max_vertices) {}

    PPolynomial get(const CrossingGraph& g, Statistics statistics);

    std::size_t size() const noexcept { return table_.size(); }
    std::size_t hits() const noexcept { return hits_; }

private:
    int max_vertices_;
    std::unordered_map<GraphKey, PPolynomial, GraphKeyHash> table_;
    std::size_t hits_ = 0;
};

} // namespace parafield
