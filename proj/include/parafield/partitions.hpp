#pragma once

#include "parafield/polynomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace parafield {

struct Part {
    int value = 0;
    int multiplicity = 0;

    friend bool operator==(const Part&, const Part&) = default;
};

/// Integer partition held as distinct part values in strictly decreasing
/// order, each with its multiplicity.
class IntegerPartition {
public:
    /// From a run-length form. Throws std::invalid_argument on bad order or zero entries.
    explicit IntegerPartition(std::vector<Part> parts);
    /// From a plain non-increasing list such as {3, 2, 1}.
    static IntegerPartition from_values(std::span<const int> values);

    std::span<const Part> parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    /// Total number of parts, counting multiplicity.
    int part_count() const noexcept;
    int distinct_part_count() const noexcept { return static_cast<int>(parts_.size()); }
    std::vector<int> values() const;

    /// "[3,2,1]"
    std::string to_string() const;

    friend bool operator==(const IntegerPartition&, const IntegerPartition&) = default;

private:
    std::vector<Part> parts_;
    int weight_ = 0;
};

/// Derived per-partition quantities for the saturated coefficient sum.
struct PartitionStats {
    IntegerPartition partition;
    int k = 0;        ///< number of parts = distinct values taken by the indices
    BigInt X;         ///< index assignments realising this block shape: n! / prod (lambda_i!^m_i m_i!)
    long long Abar = 0; ///< index pairs that coincide: sum m_i lambda_i (lambda_i - 1) / 2
    long long A = 0;  ///< index pairs that differ: n(n-1)/2 - Abar
    PPolynomial E;    ///< X * p (p-1) ... (p-k+1)
};

/// All unrestricted partitions of n in reverse-lexicographic order ([n] first, [1,...,1] last).
std::vector<IntegerPartition> generate_partitions(int n);

PartitionStats partition_stats(const IntegerPartition& partition);

BigInt factorial(int n);

/// p (p-1) ... (p-k+1); zero when k > p.
BigInt falling_factorial(const BigInt& p, int k);

/// Checks sum_s X^(s) [p]_{k^(s)} == p^n exactly.
bool verify_pn_identity(int n, const BigInt& p);

} // namespace parafield
