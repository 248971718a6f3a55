#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncdiff/cartan.hpp"

namespace ncd {

/// Contents of a `.nc` model file. Only structural checks happen at parse
/// time, so a file with a non-confluent algebra still loads and can be
/// reported on.
struct ModelFile {
  AlgebraPresentation algebra;
  std::vector<std::string> basis;
  /// One matrix per generator when `basis` is non-empty.
  std::vector<AlgMatrix> structure;
  std::optional<std::vector<BimElement>> differential;
  /// action[i][j] = E_i^ρ(g_j).
  std::optional<std::vector<std::vector<AlgElement>>> action;
  /// Directive key (e.g. "rule:y x", "left:x dx") -> 1-based source line.
  std::map<std::string, std::size_t> source_lines;

  bool has_bimodule() const { return !basis.empty(); }

  friend bool operator==(const ModelFile& a, const ModelFile& b) {
    return a.algebra == b.algebra && a.basis == b.basis && a.structure == b.structure &&
           a.differential == b.differential && a.action == b.action;
  }
};

ModelFile parse_model(std::string_view text);

/// Expression arguments in the context of a parsed model. Results are in
/// normal form. Errors carry line 1 and the column within `text`.
AlgElement parse_expr(std::string_view text, const AlgebraPresentation& p);
/// `dx.( 5 x ) + dy.( 1 )`
BimElement parse_module_element(std::string_view text, const AlgebraPresentation& p,
                                const std::vector<std::string>& basis);
/// `dx`, `2 dy`, `( x ).dx + dy`
DualElement parse_dual_element(std::string_view text, const AlgebraPresentation& p,
                               const std::vector<std::string>& basis);

/// Canonical text; parse_model(emit(m)) == m.
std::string emit(const ModelFile& m);

/// Validated views. Throw PresentationError / ModelError when the required
/// sections are missing or fail validation.
BimodulePresentation bimodule_of(const ModelFile& m);
CalculusModel calculus_of(const ModelFile& m);
/// From the `rho` section when present, otherwise the partial-derivative pair
/// of the calculus.
RightCartanPair pair_of(const ModelFile& m);

ModelFile to_model(const CalculusModel& c);
ModelFile to_model(const RightCartanPair& pair);

/// Opposite model: algebra, structure, differential and action all mirrored.
/// Only the algebra's rule shape is validated.
ModelFile mirror(const ModelFile& m);

/// Aligned `key  STATUS  detail` lines followed by an `overall` line.
std::string emit_human(const ValidationReport& r);
/// `key<TAB>STATUS<TAB>detail` lines followed by `overall<TAB>STATUS<TAB>`.
std::string emit_machine(const ValidationReport& r);

} // namespace ncd
