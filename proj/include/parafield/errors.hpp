#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parafield {

/// Raised when a request would exceed one of the configured resource caps.
/// `flag()` names the command-line option that raises the cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::string flag)
        : std::runtime_error(what), flag_(std::move(flag)) {}

    const std::string& flag() const noexcept { return flag_; }

private:
    std::string flag_;
};

/// Malformed diagram string or chord list.
class InvalidDiagram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Field pattern that is odd-length, empty, unbalanced or mixes bose and fermi kinds.
class InvalidPattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Limits {
    static constexpr int kDefaultMaxChords = 8;
    static constexpr int kDefaultMaxCoefficientVertices = 10;
    static constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

    int max_chords = kDefaultMaxChords;
    int max_coefficient_vertices = kDefaultMaxCoefficientVertices;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
};

} // namespace parafield
