#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffgeom/point_set.hpp"
#include "ffgeom/rational.hpp"

namespace ffgeom {

/// Direction class of a line through the origin: slope m in [0, q) for
/// span{(1, m)}, or q for the vertical span{(0, 1)}.
using Direction = std::uint32_t;

/// Canonical affine line of GF(q)^2: y = slope*x + intercept, or x = abscissa.
struct Line {
  enum class Kind { NonVertical, Vertical };

  Kind kind = Kind::NonVertical;
  Fe slope{};
  Fe intercept{};
  Fe abscissa{};

  static Line non_vertical(Fe slope, Fe intercept) { return {Kind::NonVertical, slope, intercept, Fe{}}; }
  static Line vertical(Fe abscissa) { return {Kind::Vertical, Fe{}, Fe{}, abscissa}; }

  /// Dense id in [0, q(q+1)): direction * q + offset. Ascending id is the
  /// canonical line order.
  std::uint32_t id(std::uint32_t q) const {
    return kind == Kind::Vertical ? q * q + abscissa.v : slope.v * q + intercept.v;
  }
  static Line from_id(std::uint32_t id, std::uint32_t q) {
    const std::uint32_t dir = id / q, off = id % q;
    return dir == q ? vertical(Fe{off}) : non_vertical(Fe{dir}, Fe{off});
  }
  Direction direction(std::uint32_t q) const { return kind == Kind::Vertical ? q : slope.v; }

  friend bool operator==(const Line&, const Line&) = default;
};

inline std::uint32_t line_count(std::uint32_t q) { return q * (q + 1); }

/// Offset of point (x, y) within the parallel class dir: y - m*x, or x for vertical.
inline Fe line_offset(const Field& f, Direction dir, Fe x, Fe y) {
  return dir == f.q() ? x : f.sub(y, f.mul(Fe{dir}, x));
}

/// Throws CoincidentPoints, DimensionMismatch.
Line line_through(const Field& f, std::span<const Fe> a, std::span<const Fe> b);
bool incident(const Field& f, const Line& line, std::span<const Fe> p);
/// The q points of line, in canonical point order.
std::vector<Point> points_on(const Field& f, const Line& line);

/// Richness nu(l) = |E ∩ l| for every line, indexed by Line::id.
/// Buckets E once per parallel class; directions are sharded across workers
/// and each shard writes a disjoint slice, so the result never depends on workers.
std::vector<std::uint32_t> richness_table(const PointSet& E, unsigned workers = 1);

struct LineRichness {
  Line line;
  std::uint32_t richness = 0;
};

/// Lines with >= 2 points of E, canonical order. Throws TooFewPoints, DimensionMismatch.
std::vector<LineRichness> spanned_lines(const PointSet& E, unsigned workers = 1);

struct RichLinesReport {
  std::uint32_t k = 0;
  std::vector<LineRichness> lines;
  bool bound_applicable = false;  ///< k > |E|/q
  Rational bound;                 ///< q|E| / (k - |E|/q)^2 when applicable
  bool bound_satisfied = true;
};

RichLinesReport rich_lines(const PointSet& E, std::uint32_t k, unsigned workers = 1);
/// Same, from a precomputed richness table.
RichLinesReport rich_lines(const PointSet& E, const std::vector<std::uint32_t>& richness, std::uint32_t k);

struct IncidenceReport {
  std::uint64_t incidences = 0;
  std::uint64_t points = 0;
  std::uint64_t lines = 0;
  Rational main_term;  ///< |E||L|/q
  double vinh_bound = 0;  ///< main term + sqrt(q|E||L|), for display only
  bool satisfied = true;
};

/// Verdict uses only integers: (q*I - |E||L|)^2 <= q^3 |E||L| whenever q*I > |E||L|.
bool vinh_holds(std::uint64_t incidences, std::uint64_t points, std::uint64_t lines, std::uint32_t q);

/// Duplicate lines in L are counted once.
IncidenceReport check_vinh(const PointSet& E, const std::vector<Line>& L);

/// Directions L with (E - E) ∩ (L \ {0}) nonempty, ascending. Throws TooFewPoints.
std::vector<Direction> directions(const PointSet& E);

struct SumsetReport {
  std::vector<std::uint64_t> sizes;  ///< |E + L| per direction
  Direction best = 0;                ///< first direction attaining the maximum
  std::uint64_t best_size = 0;
  std::uint64_t bound = 0;           ///< q(q+1)/2, rounded down (q(q+1) is even)
  bool bound_applicable = false;     ///< |E| > q
  bool bound_satisfied = true;
};

SumsetReport best_line_sumset(const PointSet& E);

}  // namespace ffgeom
