#include "parafield/partitions.hpp"

#include <stdexcept>

namespace parafield {

IntegerPartition::IntegerPartition(std::vector<Part> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("a partition needs at least one part");
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].value < 1 || parts_[i].multiplicity < 1) {
            throw std::invalid_argument("partition parts and multiplicities must be positive");
        }
        if (i > 0 && parts_[i].value >= parts_[i - 1].value) {
            throw std::invalid_argument("partition parts must be strictly decreasing");
        }
        weight_ += parts_[i].value * parts_[i].multiplicity;
    }
}

IntegerPartition IntegerPartition::from_values(std::span<const int> values) {
    std::vector<Part> parts;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && values[i] > values[i - 1]) {
            throw std::invalid_argument("partition values must be non-increasing");
        }
        if (!parts.empty() && parts.back().value == values[i]) {
            ++parts.back().multiplicity;
        } else {
            parts.push_back({values[i], 1});
        }
    }
    return IntegerPartition(std::move(parts));
}

int IntegerPartition::part_count() const noexcept {
    int k = 0;
    for (const auto& part : parts_) {
        k += part.multiplicity;
    }
    return k;
}

std::vector<int> IntegerPartition::values() const {
    std::vector<int> out;
    for (const auto& part : parts_) {
        out.insert(out.end(), static_cast<std::size_t>(part.multiplicity), part.value);
    }
    return out;
}

std::string IntegerPartition::to_string() const {
    std::string out = "[";
    for (int v : values()) {
        if (out.size() > 1) {
            out += ',';
        }
        out += std::to_string(v);
    }
    return out + "]";
}

std::vector<IntegerPartition> generate_partitions(int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    std::vector<IntegerPartition> out;
    std::vector<int> current{n};
    while (true) {
        out.push_back(IntegerPartition::from_values(current));
        // Rightmost part larger than one; everything after it is ones.
        int ones = 0;
        while (!current.empty() && current.back() == 1) {
            current.pop_back();
            ++ones;
        }
        if (current.empty()) {
            break;
        }
        const int split = --current.back();
        int remaining = ones + 1;
        while (remaining > 0) {
            const int part = std::min(split, remaining);
            current.push_back(part);
            remaining -= part;
        }
    }
    return out;
}

BigInt factorial(int n) {
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

BigInt falling_factorial(const BigInt& p, int k) {
    BigInt out = 1;
    for (int i = 0; i < k; ++i) {
        const BigInt factor = p - i;
        if (factor <= 0) {
            return 0;
        }
        out *= factor;
    }
    return out;
}

PartitionStats partition_stats(const IntegerPartition& partition) {
    const int n = partition.weight();
    PartitionStats stats{partition, partition.part_count(), 0, 0, 0, {}};

    BigInt denominator = 1;
    for (const auto& [value, multiplicity] : partition.parts()) {
        denominator *= boost::multiprecision::pow(factorial(value), static_cast<unsigned>(multiplicity));
        denominator *= factorial(multiplicity);
        stats.Abar += static_cast<long long>(multiplicity) * value * (value - 1) / 2;
    }
    const BigInt numerator = factorial(n);
    if (numerator % denominator != 0) {
        throw std::logic_error("non-integral multinomial for " + partition.to_string());
    }
    stats.X = numerator / denominator;
    stats.A = static_cast<long long>(n) * (n - 1) / 2 - stats.Abar;
    stats.E = PPolynomial::falling_factorial(static_cast<std::size_t>(stats.k)) * stats.X;
    return stats;
}

bool verify_pn_identity(int n, const BigInt& p) {
    if (p < 0) {
        return false;
    }
    BigInt total = 0;
    for (const auto& partition : generate_partitions(n)) {
        const auto stats = partition_stats(partition);
        total += stats.X * falling_factorial(p, stats.k);
    }
    return total == boost::multiprecision::pow(p, static_cast<unsigned>(n));
}

} // namespace parafield
