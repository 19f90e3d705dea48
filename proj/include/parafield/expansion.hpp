#pragma once

#include "parafield/coefficients.hpp"
#include "parafield/diagrams.hpp"
#include "parafield/polynomial.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parafield {

enum class PropagatorKind { DeltaPlus, SPlus };

/// Symbolic two-point function of (x_i - x_j), i < j. Never evaluated numerically.
struct PropagatorToken {
    PropagatorKind kind = PropagatorKind::DeltaPlus;
    int i = 0;
    int j = 0;

    friend bool operator==(const PropagatorToken&, const PropagatorToken&) = default;
};

struct ExpansionTerm {
    ChordDiagram diagram;
    int crossings = 0;
    PPolynomial coefficient;
    std::vector<PropagatorToken> propagators;
};

/// Vacuum matrix element of a field product as a sum over contraction terms,
/// in canonical diagram order.
struct Expansion {
    FieldPattern pattern;
    std::vector<ExpansionTerm> terms;
};

Expansion expand(const FieldPattern& pattern, const Limits& limits = {});

/// Visits the terms of expand(pattern) in the same order without holding them all.
void for_each_term(const FieldPattern& pattern, const std::function<void(const ExpansionTerm&)>& visit,
                   const Limits& limits = {});

std::vector<std::pair<ChordDiagram, BigInt>> evaluate_at(const Expansion& e, const BigInt& p);

enum class RenderFormat { Text, Latex, Json };

struct RenderOptions {
    bool group_by_coefficient = false;
    /// When set, evaluated integer coefficients are emitted alongside.
    std::optional<BigInt> p;
};

std::string render(const Expansion& e, RenderFormat format, const RenderOptions& options = {});

/// Streams exactly render(expand(pattern, limits), format, options). Terms are
/// written as they are produced unless grouping is requested.
void write_expansion(std::ostream& out, const FieldPattern& pattern, RenderFormat format,
                     const RenderOptions& options = {}, const Limits& limits = {});

std::string_view to_string(PropagatorKind kind);

} // namespace parafield
