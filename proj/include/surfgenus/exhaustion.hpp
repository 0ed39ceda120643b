#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfgenus/complex.hpp"

namespace surfgenus {

// Vertex injection from one step into the next.
using VertexMap = std::map<VertexId, VertexId>;

/// Increasing chain of compact connected subsurfaces M_0 ⊂ M_1 ⊂ ...
///
/// inclusions[i] maps the vertices of steps[i] into steps[i+1]; the constructor
/// checks that it is injective and carries every oriented triangle onto an
/// oriented triangle of the next step (BadInclusion), and that each step is
/// connected (NotConnected).
class ExhaustionSequence {
 public:
  ExhaustionSequence(std::vector<TriangulatedSurface> steps, std::vector<VertexMap> inclusions);

  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<TriangulatedSurface>& steps() const noexcept { return steps_; }
  const std::vector<VertexMap>& inclusions() const noexcept { return inclusions_; }

  // Nested triangle subsets of one surface, with identity inclusions.
  static ExhaustionSequence from_nested(const TriangulatedSurface& whole,
                                        const std::vector<std::vector<std::size_t>>& keep_sets);

 private:
  std::vector<TriangulatedSurface> steps_;
  std::vector<VertexMap> inclusions_;
};

enum class Family { Flute, Ladder, LochNess, GenusTail };

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f) noexcept;

/// Generated exhaustions, built as nested block prefixes of one chain surface.
///
///   Flute      step i: sphere with i+1 boundary loops
///   Ladder     step i: genus i+1, two boundary loops
///   LochNess   step i: genus i+1, one boundary loop
///   GenusTail  genus grows by one per step up to `genus`, then annular pieces only
///
/// Throws BadParams for zero steps or genus > steps.
ExhaustionSequence generate_family(Family family, std::size_t steps, std::size_t genus = 0);

std::vector<std::size_t> c1_sequence(const ExhaustionSequence& e);

enum class StabilizationStatus { Stabilized, NotStabilized };

// c_1 of each connected piece of step+1 minus the image of step.
struct ComplementCheck {
  std::size_t step = 0;
  std::vector<std::size_t> component_c1;
  bool valid = true;  // false if some piece is not a surface
};

struct StabilizationVerdict {
  std::vector<std::size_t> c1_sequence;
  StabilizationStatus status = StabilizationStatus::NotStabilized;
  std::size_t genus_estimate = 0;
  std::optional<std::size_t> plateau_start;
  std::size_t window = 0;
  std::vector<ComplementCheck> complement_checks;  // plateau steps, STABILIZED only

  bool complements_planar() const;
};

/// STABILIZED iff the last `window` entries of the c_1 sequence agree.
///
/// Throws BadParams for window < 2, WindowTooLarge if the sequence is shorter
/// than the window, and OracleMismatch if the sequence ever decreases.
StabilizationVerdict classify(const ExhaustionSequence& e, std::size_t window = 3);

// Human-readable verdict, including the caveat that finite data only bounds the genus from below.
std::string describe(const StabilizationVerdict& v);

std::string_view status_name(StabilizationStatus s) noexcept;

}  // namespace surfgenus
