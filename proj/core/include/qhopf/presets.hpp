#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qhopf/braiding.hpp"

namespace qhopf {

enum class PresetId { trivial, abelian, qsl2 };

std::string to_string(PresetId id);
/// Throws Error for unknown names.
PresetId preset_from_string(const std::string& name);

struct PresetDescriptor {
  PresetId id = PresetId::abelian;
  int order = kDefaultOrder;
  /// Extra orders carried while computing series quotients (qsl2 only).
  int internal_margin = 2;
};

/// An emitted, validated quasitriangular Hopf algebra.
struct Preset {
  PresetDescriptor descriptor;
  PresentationPtr presentation;
  std::shared_ptr<const QTContext> qt;
};

/// Builds one of the built-in presentations and validates it: the Hopf axioms
/// and the quasitriangularity axioms must hold at the requested order, or
/// PresetInvalid is thrown naming the failing axiom.
///
///   trivial  x, y commuting and primitive, R = 1 (x) 1
///   abelian  same algebra, R = exp(h x (x) y)
///   qsl2     generators F < H < E with q = e^h, K = e^{hH}:
///            [H,E] = 2E, [H,F] = -2F, [E,F] = (K - K^{-1}) / (q - q^{-1}),
///            D(H) = H (x) 1 + 1 (x) H, D(E) = E (x) K + 1 (x) E,
///            D(F) = F (x) 1 + K^{-1} (x) F, counit 0 on generators,
///            R = exp(h H (x) H / 2) sum_n q^{n(n-1)/2} (q - q^{-1})^n / [n]_q! E^n (x) F^n.
///            Classical limit r = H (x) H / 2 + 2 E (x) F.
Preset build_preset(const PresetDescriptor& descriptor);

/// Unvalidated qsl2 presentation (used by the validator and by tests).
Presentation make_qsl2_presentation(int order, int internal_margin);

/// Reads a presentation from the JSON document format described in
/// docs/presentation-format.md. `order_override` replaces the file's order.
Presentation parse_presentation_json(const std::string& json_text, std::optional<int> order_override = {});

/// Validates a user presentation the same way build_preset validates presets.
/// Presentations without an R-matrix get a null qt.
Preset validate_presentation(Presentation p, const std::string& label);

}  // namespace qhopf
