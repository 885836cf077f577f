#include "ffgeom/plane.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ffgeom/parallel.hpp"

namespace ffgeom {

namespace {

void require_plane(const PointSet& E) {
  if (E.dim() != 2) throw Error(Errc::DimensionMismatch, "plane operation on dimension " + std::to_string(E.dim()));
}

}  // namespace

Line line_through(const Field& f, std::span<const Fe> a, std::span<const Fe> b) {
  if (a.size() != 2 || b.size() != 2) throw Error(Errc::DimensionMismatch, "line_through needs planar points");
  if (a[0] == b[0] && a[1] == b[1]) throw Error(Errc::CoincidentPoints, "points coincide");
  if (a[0] == b[0]) return Line::vertical(a[0]);
  const Fe slope = f.mul(f.sub(b[1], a[1]), f.inv(f.sub(b[0], a[0])));
  return Line::non_vertical(slope, f.sub(a[1], f.mul(slope, a[0])));
}

bool incident(const Field& f, const Line& line, std::span<const Fe> p) {
  if (line.kind == Line::Kind::Vertical) return p[0] == line.abscissa;
  return p[1] == f.add(f.mul(line.slope, p[0]), line.intercept);
}

std::vector<Point> points_on(const Field& f, const Line& line) {
  std::vector<Point> pts;
  pts.reserve(f.q());
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    if (line.kind == Line::Kind::Vertical)
      pts.push_back({line.abscissa, Fe{t}});
    else
      pts.push_back({Fe{t}, f.add(f.mul(line.slope, Fe{t}), line.intercept)});
  }
  std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
    return pack_point(a, f.q()) < pack_point(b, f.q());
  });
  return pts;
}

std::vector<std::uint32_t> richness_table(const PointSet& E, unsigned workers) {
  require_plane(E);
  const Field& f = E.field();
  const std::uint32_t q = f.q();
  std::vector<std::uint32_t> counts(line_count(q), 0);
  const std::size_t n = E.size();
  const Fe* xy = E.coords().data();

  parallel_shards(q + 1, workers, [&](unsigned, std::size_t begin, std::size_t end) {
    std::vector<Fe> scaled(q);
    for (std::size_t dir = begin; dir < end; ++dir) {
      std::uint32_t* slice = counts.data() + dir * q;
      if (dir == q) {
        for (std::size_t i = 0; i < n; ++i) ++slice[xy[2 * i].v];
        continue;
      }
      for (std::uint32_t x = 0; x < q; ++x) scaled[x] = f.mul(Fe{static_cast<std::uint32_t>(dir)}, Fe{x});
      for (std::size_t i = 0; i < n; ++i) ++slice[f.sub(xy[2 * i + 1], scaled[xy[2 * i].v]).v];
    }
  });
  return counts;
}

std::vector<LineRichness> spanned_lines(const PointSet& E, unsigned workers) {
  require_plane(E);
  if (E.size() < 2) throw Error(Errc::TooFewPoints, "spanned lines need at least 2 points");
  const auto counts = richness_table(E, workers);
  const std::uint32_t q = E.field().q();
  std::vector<LineRichness> out;
  for (std::uint32_t id = 0; id < counts.size(); ++id)
    if (counts[id] >= 2) out.push_back({Line::from_id(id, q), counts[id]});
  return out;
}

RichLinesReport rich_lines(const PointSet& E, const std::vector<std::uint32_t>& richness, std::uint32_t k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "k must be >= 2");
  const std::uint32_t q = E.field().q();
  const std::int64_t n = static_cast<std::int64_t>(E.size());
  RichLinesReport report;
  report.k = k;
  for (std::uint32_t id = 0; id < richness.size(); ++id)
    if (richness[id] >= k) report.lines.push_back({Line::from_id(id, q), richness[id]});
  // k > n/q  <=>  kq > n;  |L_k| <= q n / (k - n/q)^2 = q^3 n / (kq - n)^2.
  const std::int64_t gap = static_cast<std::int64_t>(k) * q - n;
  report.bound_applicable = gap > 0;
  if (report.bound_applicable) {
    const std::int64_t q3n = static_cast<std::int64_t>(q) * q * q * n;
    report.bound = Rational(q3n, gap * gap);
    const __int128 lhs = static_cast<__int128>(report.lines.size()) * gap * gap;
    report.bound_satisfied = lhs <= q3n;
  }
  return report;
}

RichLinesReport rich_lines(const PointSet& E, std::uint32_t k, unsigned workers) {
  return rich_lines(E, richness_table(E, workers), k);
}

bool vinh_holds(std::uint64_t incidences, std::uint64_t points, std::uint64_t lines, std::uint32_t q) {
  const __int128 excess = static_cast<__int128>(incidences) * q - static_cast<__int128>(points) * lines;
  if (excess <= 0) return true;
  const __int128 rhs = static_cast<__int128>(q) * q * q * points * lines;
  return excess * excess <= rhs;
}

IncidenceReport check_vinh(const PointSet& E, const std::vector<Line>& L) {
  require_plane(E);
  const Field& f = E.field();
  const std::uint32_t q = f.q();
  std::set<std::uint32_t> ids;
  for (const auto& l : L) ids.insert(l.id(q));
  IncidenceReport r;
  r.points = E.size();
  r.lines = ids.size();
  if (!ids.empty()) {
    std::vector<char> member(line_count(q), 0);
    for (auto id : ids) member[id] = 1;
    for (std::size_t i = 0; i < E.size(); ++i) {
      const auto p = E[i];
      for (Direction dir = 0; dir <= q; ++dir)
        r.incidences += member[dir * q + line_offset(f, dir, p[0], p[1]).v];
    }
  }
  r.main_term = Rational(static_cast<std::int64_t>(r.points * r.lines), q);
  r.vinh_bound = r.main_term.to_double() + std::sqrt(static_cast<double>(q) * r.points * r.lines);
  r.satisfied = vinh_holds(r.incidences, r.points, r.lines, q);
  return r;
}

std::vector<Direction> directions(const PointSet& E) {
  require_plane(E);
  if (E.size() < 2) throw Error(Errc::TooFewPoints, "directions need at least 2 points");
  const Field& f = E.field();
  const std::uint32_t q = f.q();
  std::vector<Direction> out;
  std::vector<char> seen(q);
  for (Direction dir = 0; dir <= q; ++dir) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < E.size(); ++i) {
      const auto p = E[i];
      char& s = seen[line_offset(f, dir, p[0], p[1]).v];
      if (s) {
        out.push_back(dir);
        break;
      }
      s = 1;
    }
  }
  return out;
}

SumsetReport best_line_sumset(const PointSet& E) {
  require_plane(E);
  const Field& f = E.field();
  const std::uint32_t q = f.q();
  SumsetReport r;
  r.sizes.assign(q + 1, 0);
  // E + L is the union of the lines of direction L through points of E.
  std::vector<char> seen(q);
  for (Direction dir = 0; dir <= q; ++dir) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint64_t cosets = 0;
    for (std::size_t i = 0; i < E.size(); ++i) {
      const auto p = E[i];
      char& s = seen[line_offset(f, dir, p[0], p[1]).v];
      cosets += !s;
      s = 1;
    }
    r.sizes[dir] = cosets * q;
    if (r.sizes[dir] > r.best_size) {
      r.best_size = r.sizes[dir];
      r.best = dir;
    }
  }
  r.bound = static_cast<std::uint64_t>(q) * (q + 1) / 2;
  r.bound_applicable = E.size() > q;
  r.bound_satisfied = !r.bound_applicable || r.best_size >= r.bound;
  return r;
}

}  // namespace ffgeom
