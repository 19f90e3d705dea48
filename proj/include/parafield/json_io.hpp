#pragma once

#include "parafield/diagrams.hpp"
#include "parafield/expansion.hpp"
#include "parafield/partitions.hpp"
#include "parafield/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>

namespace parafield {

/// {"n": n, "chords": [[a, b], ...]}
nlohmann::json to_json(const ChordDiagram& d);

/// {"coeffs": ["c0", "c1", ...]}, ascending powers as decimal strings.
nlohmann::json to_json(const PPolynomial& poly);

/// {"n": n, "counts": {"0": c0, ...}, "total": t}
nlohmann::json census_to_json(int n, const std::map<int, std::uint64_t>& census);

/// {"partition": [...], "k": k, "X": "...", "A": A, "E": "<polynomial>"}
nlohmann::json to_json(const PartitionStats& stats);

/// {"chords": ..., "coeffs": ..., "crossings": m, "propagators": [...]} plus
/// "value" when options.p is set.
nlohmann::json term_to_json(const ExpansionTerm& term, const RenderOptions& options = {});

nlohmann::json to_json(const Expansion& e, const RenderOptions& options = {});

/// Inverse of the polynomial rendering above; throws std::invalid_argument.
PPolynomial polynomial_from_json(const nlohmann::json& j);

} // namespace parafield
