#pragma once

// Satake diagrams: coloring, arrows, canonical labeling, real-form lookup, rendering.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iwasawa/roots.hpp"

namespace iwasawa {

enum class NodeColor { White, Black };

struct SatakeDiagram {
  CartanMatrixData dynkin;
  std::vector<NodeColor> colors;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  ///< 0-based, first < second, sorted
  std::optional<std::string> real_form_label;

  /// Label-insensitive structural equality.
  bool same_diagram(const SatakeDiagram& other) const;
};

/// Restriction of a root to the split part of the Cartan (its first split_rank values).
QVec project_rho(const ComplexRoot& root, std::size_t split_rank);

std::vector<NodeColor> color_nodes(const std::vector<QVec>& rho_of_simple);

/// Pairs of white nodes with equal restriction. Throws InconsistencyError when more
/// than two white nodes share a restriction.
std::vector<std::pair<std::size_t, std::size_t>> detect_arrows(const std::vector<QVec>& rho_of_simple,
                                                               const std::vector<NodeColor>& colors);

/// Validates the diagram invariants, renumbers nodes to the canonical labeling and
/// attaches the real-form label when the diagram is in the table.
SatakeDiagram assemble_satake(const CartanMatrixData& dynkin, const std::vector<NodeColor>& colors,
                              const std::vector<std::pair<std::size_t, std::size_t>>& arrows);

/// Canonical relabeling only (no lookup); idempotent.
SatakeDiagram canonicalize(const SatakeDiagram& d);

std::optional<std::string> identify_real_form(const SatakeDiagram& d);

/// The table entry for a real-form label (e.g. "su(2,1)", "EIII"), canonical form.
/// Throws PreconditionError for unknown labels.
SatakeDiagram satake_for_label(const std::string& label);

/// Labels in the lookup table, in insertion order.
std::vector<std::string> known_real_forms();

/// "text", "dot" or "json"; throws PreconditionError otherwise.
std::string render(const SatakeDiagram& d, const std::string& format);

/// Color string with 'o' for white and '*' for black, in node order.
std::string color_string(const SatakeDiagram& d);

}  // namespace iwasawa
