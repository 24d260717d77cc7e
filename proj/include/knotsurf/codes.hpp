#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "knotsurf/error.hpp"

namespace knotsurf {

enum class Passage { Over, Under };

/// One visit of the knot to a crossing.
struct GaussEntry {
  int label = 0;
  Passage passage = Passage::Over;
  int sign = 1;  // +1 right-handed, -1 left-handed

  bool operator==(const GaussEntry&) const = default;
};

/// Signed Gauss code of a knot diagram: the ordered passages along the knot.
/// Each label occurs exactly twice, once Over and once Under, with one sign.
struct SignedGaussCode {
  std::vector<GaussEntry> entries;

  int crossing_count() const { return static_cast<int>(entries.size()) / 2; }
  bool operator==(const SignedGaussCode&) const = default;
};

/// Planar diagram code. Each tuple lists arc labels counterclockwise around a
/// crossing, starting with the incoming under-strand.
struct PlanarDiagramCode {
  std::vector<std::array<int, 4>> crossings;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  bool operator==(const PlanarDiagramCode&) const = default;
};

// Parsers validate everything they promise in their invariants and throw
// knotsurf::Error on failure.
SignedGaussCode parse_gauss(std::string_view text);
PlanarDiagramCode parse_pd(std::string_view text);
/// Dowker-Thistlethwaite code. Odd passages are Over when the paired even
/// entry is positive. Crossing signs come from a planar realisation search.
SignedGaussCode parse_dt(std::string_view text);

/// Validation used by the parsers; exposed for codes built in memory.
void validate(const SignedGaussCode& code);
void validate(const PlanarDiagramCode& code);

/// Relabel crossings 1..n in order of first appearance.
SignedGaussCode canonical(const SignedGaussCode& code);
std::string render_gauss(const SignedGaussCode& code);
std::string render_pd(const PlanarDiagramCode& code);

/// True iff the cyclic passage sequence strictly alternates.
bool is_alternating(const SignedGaussCode& code);

/// Copy of the code with the passages at one crossing exchanged.
SignedGaussCode switch_crossing(const SignedGaussCode& code, int label);

}  // namespace knotsurf
