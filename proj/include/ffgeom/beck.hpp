#pragma once

#include <cstdint>
#include <vector>

#include "ffgeom/plane.hpp"
#include "ffgeom/rational.hpp"

namespace ffgeom {

/// Every threshold used by the Beck pipeline, exact where possible.
struct BeckThresholds {
  std::uint32_t q = 0;
  std::uint64_t n = 0;
  Rational mean;          ///< |E|/q
  Rational working_low;   ///< 1 + |E|/2q (inclusive)
  Rational working_high;  ///< 2|E|/q (inclusive)
  Rational pinned_low;    ///< |E|/2q (inclusive, excludes z)
  Rational pinned_high;   ///< 2|E|/q (exclusive, excludes z)
  unsigned log2_ceil = 0; ///< number of dyadic bands, ceil(log2 q)
  long double hypothesis_raw = 0;     ///< 64 q log2 q
  std::uint64_t hypothesis_ceil = 0;  ///< ceil(64 q log2 q)
  bool hypothesis_met = false;        ///< |E| >= 64 q log2 q
  Rational lines_target;        ///< q^2/8
  Rational pairs_target;        ///< |E|^2/4
  Rational incidence_target;    ///< q|E|/4
  std::uint64_t pinned_target = 0;  ///< ceil(q/4)

  static BeckThresholds make(std::uint32_t q, std::uint64_t n);
};

/// ceil(64 q log2 q): the smallest set size meeting the Beck hypothesis.
std::uint64_t beck_hypothesis_size(std::uint32_t q);

struct RichnessClass {
  std::uint64_t lines = 0;
  std::uint64_t pairs = 0;  ///< sum of C(nu, 2)
};

struct DyadicBand {
  unsigned j = 0;
  Rational low;   ///< exclusive: |E| 2^j / q
  Rational high;  ///< inclusive: |E| 2^{j+1} / q
  RichnessClass cls;
  std::uint32_t min_richness = 0;  ///< smallest integer above low
  bool stb_applicable = false;     ///< min_richness > |E|/q
  bool stb_satisfied = true;       ///< |L_j| <= |L_k| <= q|E| / (k - |E|/q)^2 with k = min_richness
};

/// Partition of the spanned lines by richness: poor (< 1 + |E|/2q), working
/// [1 + |E|/2q, 2|E|/q], then bands (|E|2^j/q, |E|2^{j+1}/q] for j = 1..ceil(log2 q).
struct DyadicClassReport {
  BeckThresholds thresholds;
  RichnessClass poor;
  RichnessClass working;
  std::vector<DyadicBand> bands;
  std::uint64_t total_pairs = 0;
  bool partition_ok = false;     ///< class pairs sum to C(|E|, 2)
  unsigned __int128 poor_bound = 0;  ///< q(q+1) C(ceil(|E|/2q), 2)
  bool poor_bound_ok = false;
};

DyadicClassReport dyadic_classes(const PointSet& E, const std::vector<std::uint32_t>& richness);
DyadicClassReport dyadic_classes(const PointSet& E, unsigned workers = 1);

/// Working band membership: 1 + |E|/2q <= nu <= 2|E|/q.
bool in_working_band(std::uint32_t richness, std::uint32_t q, std::uint64_t n);
/// Per-line conclusion for points other than z: |E|/2q <= m < 2|E|/q.
bool in_pinned_interval(std::uint64_t others, std::uint32_t q, std::uint64_t n);

struct WorkingLines {
  std::vector<LineRichness> lines;  ///< canonical order
  std::uint64_t pair_coverage = 0;
  std::uint64_t incidences = 0;     ///< sum of nu over the family
};

WorkingLines working_lines(const PointSet& E, const std::vector<std::uint32_t>& richness);
WorkingLines working_lines(const PointSet& E, unsigned workers = 1);

struct PinnedLine {
  Line line;
  std::uint32_t others = 0;  ///< points of E on the line other than z
  bool in_interval = false;
};

struct BeckReport {
  BeckThresholds thresholds;
  std::uint64_t spanned_count = 0;
  std::uint64_t working_count = 0;
  std::uint64_t pair_coverage = 0;
  std::uint64_t incidences = 0;
  Point winner;
  std::size_t winner_index = 0;
  std::uint64_t pinned_line_count = 0;  ///< working lines through z
  std::uint64_t pinned_in_interval = 0;
  std::vector<PinnedLine> pinned_lines;  ///< canonical order

  bool lines_ok = false;      ///< |𝓛| >= q^2/8
  bool pairs_ok = false;      ///< pair coverage >= |E|^2/4
  bool incidence_ok = false;  ///< I(E, 𝓛) >= q|E|/4
  bool pinned_ok = false;     ///< >= ceil(q/4) lines through z in the interval

  bool conclusions_hold() const { return lines_ok && pairs_ok && incidence_ok && pinned_ok; }
};

/// Winner z maximizes the number of incident working lines; ties go to the
/// smallest point in canonical order.
BeckReport beck_report(const PointSet& E, const std::vector<std::uint32_t>& richness, unsigned workers = 1);
BeckReport beck_report(const PointSet& E, unsigned workers = 1);

struct RefinedSet {
  PointSet points;           ///< E', containing z
  std::vector<Line> lines_used;
  std::uint64_t per_line_cap = 0;  ///< floor(2|E|/q)
  bool size_ok = false;            ///< |E'| > |E|/8
};

/// First ceil(q/4) in-interval lines through z in canonical order, and on each
/// the first floor(2|E|/q) points other than z in canonical order.
/// Throws InsufficientPinnedLines.
RefinedSet refine_for_pinned(const PointSet& E, const BeckReport& report);

}  // namespace ffgeom
