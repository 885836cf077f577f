#include "ffgeom/beck.hpp"

#include <algorithm>
#include <cmath>

#include "ffgeom/parallel.hpp"

namespace ffgeom {

namespace {

std::uint64_t pairs_of(std::uint64_t m) { return m * (m - (m > 0 ? 1 : 0)) / 2; }

std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

std::uint64_t beck_hypothesis_size(std::uint32_t q) {
  return static_cast<std::uint64_t>(std::ceil(64.0L * q * std::log2(static_cast<long double>(q))));
}

BeckThresholds BeckThresholds::make(std::uint32_t q, std::uint64_t n) {
  BeckThresholds t;
  t.q = q;
  t.n = n;
  const std::int64_t sn = as_signed(n), sq = q;
  t.mean = Rational(sn, sq);
  t.working_low = Rational(2 * sq + sn, 2 * sq);
  t.working_high = Rational(2 * sn, sq);
  t.pinned_low = Rational(sn, 2 * sq);
  t.pinned_high = Rational(2 * sn, sq);
  while ((std::uint64_t{1} << t.log2_ceil) < q) ++t.log2_ceil;
  t.hypothesis_raw = 64.0L * q * std::log2(static_cast<long double>(q));
  t.hypothesis_ceil = beck_hypothesis_size(q);
  t.hypothesis_met = static_cast<long double>(n) >= t.hypothesis_raw;
  t.lines_target = Rational(sq * sq, 8);
  t.pairs_target = Rational(sn * sn, 4);
  t.incidence_target = Rational(sq * sn, 4);
  t.pinned_target = (q + 3) / 4;
  return t;
}

bool in_working_band(std::uint32_t richness, std::uint32_t q, std::uint64_t n) {
  const std::uint64_t qr = static_cast<std::uint64_t>(q) * richness;
  return 2 * static_cast<std::uint64_t>(q) + n <= 2 * qr && qr <= 2 * n;
}

bool in_pinned_interval(std::uint64_t others, std::uint32_t q, std::uint64_t n) {
  const std::uint64_t qm = static_cast<std::uint64_t>(q) * others;
  return n <= 2 * qm && qm < 2 * n;
}

DyadicClassReport dyadic_classes(const PointSet& E, const std::vector<std::uint32_t>& richness) {
  if (E.size() < 2) throw Error(Errc::TooFewPoints, "dyadic classes need at least 2 points");
  const std::uint32_t q = E.field().q();
  const std::uint64_t n = E.size();
  DyadicClassReport r;
  r.thresholds = BeckThresholds::make(q, n);
  const unsigned bands = r.thresholds.log2_ceil;
  for (unsigned j = 1; j <= std::max(1u, bands); ++j) {
    DyadicBand b;
    b.j = j;
    b.low = Rational(as_signed(n << j), q);
    b.high = Rational(as_signed(n << (j + 1)), q);
    b.min_richness = static_cast<std::uint32_t>(b.low.floor() + 1);
    b.stb_applicable = static_cast<std::uint64_t>(b.min_richness) * q > n;
    r.bands.push_back(b);
  }

  std::vector<std::uint64_t> histogram(q + 2, 0);
  for (std::uint32_t nu : richness) {
    if (nu < 2) continue;
    ++histogram[nu];
    RichnessClass* cls;
    const std::uint64_t qn = static_cast<std::uint64_t>(q) * nu;
    if (2 * qn < 2 * static_cast<std::uint64_t>(q) + n) {
      cls = &r.poor;
    } else if (qn <= 2 * n) {
      cls = &r.working;
    } else {
      std::size_t j = 1;
      while (j < r.bands.size() && qn > (n << (j + 1))) ++j;
      cls = &r.bands[j - 1].cls;
    }
    ++cls->lines;
    cls->pairs += pairs_of(nu);
  }

  // |L_k| for every k, from the top.
  std::vector<std::uint64_t> at_least(q + 3, 0);
  for (std::size_t k = q + 1; k-- > 0;) at_least[k] = at_least[k + 1] + histogram[k];
  for (auto& b : r.bands) {
    if (!b.stb_applicable) continue;
    const std::uint64_t lk = b.min_richness <= q + 1 ? at_least[b.min_richness] : 0;
    const __int128 gap = static_cast<__int128>(b.min_richness) * q - n;
    const __int128 rhs = static_cast<__int128>(q) * q * q * n;
    b.stb_satisfied = b.cls.lines <= lk && static_cast<__int128>(lk) * gap * gap <= rhs;
  }

  r.total_pairs = r.poor.pairs + r.working.pairs;
  for (const auto& b : r.bands) r.total_pairs += b.cls.pairs;
  r.partition_ok = r.total_pairs == pairs_of(n);
  const std::uint64_t poor_cap = (n + 2 * q - 1) / (2 * q);
  r.poor_bound = static_cast<unsigned __int128>(q) * (q + 1) * pairs_of(poor_cap);
  r.poor_bound_ok = r.poor.pairs <= r.poor_bound;
  return r;
}

DyadicClassReport dyadic_classes(const PointSet& E, unsigned workers) {
  return dyadic_classes(E, richness_table(E, workers));
}

WorkingLines working_lines(const PointSet& E, const std::vector<std::uint32_t>& richness) {
  const std::uint32_t q = E.field().q();
  const std::uint64_t n = E.size();
  WorkingLines w;
  for (std::uint32_t id = 0; id < richness.size(); ++id) {
    const std::uint32_t nu = richness[id];
    if (nu < 2 || !in_working_band(nu, q, n)) continue;
    w.lines.push_back({Line::from_id(id, q), nu});
    w.pair_coverage += pairs_of(nu);
    w.incidences += nu;
  }
  return w;
}

WorkingLines working_lines(const PointSet& E, unsigned workers) {
  return working_lines(E, richness_table(E, workers));
}

BeckReport beck_report(const PointSet& E, const std::vector<std::uint32_t>& richness, unsigned workers) {
  if (E.dim() != 2) throw Error(Errc::DimensionMismatch, "Beck pipeline is planar");
  if (E.empty()) throw Error(Errc::TooFewPoints, "empty point set");
  const Field& f = E.field();
  const std::uint32_t q = f.q();
  const std::uint64_t n = E.size();
  BeckReport r;
  r.thresholds = BeckThresholds::make(q, n);

  std::vector<char> working(richness.size(), 0);
  for (std::uint32_t id = 0; id < richness.size(); ++id) {
    const std::uint32_t nu = richness[id];
    if (nu < 2) continue;
    ++r.spanned_count;
    if (!in_working_band(nu, q, n)) continue;
    working[id] = 1;
    ++r.working_count;
    r.pair_coverage += pairs_of(nu);
    r.incidences += nu;
  }

  // Incident working lines per point; per-shard tallies are summed afterwards.
  const unsigned shards = std::max(1u, std::min<unsigned>(workers, q + 1));
  std::vector<std::vector<std::uint32_t>> tallies(shards);
  const Fe* xy = E.coords().data();
  parallel_shards(q + 1, shards, [&](unsigned w, std::size_t begin, std::size_t end) {
    auto& tally = tallies[w];
    tally.assign(n, 0);
    std::vector<Fe> scaled(q);
    for (std::size_t dir = begin; dir < end; ++dir) {
      const char* flags = working.data() + dir * q;
      if (dir == q) {
        for (std::size_t i = 0; i < n; ++i) tally[i] += flags[xy[2 * i].v];
        continue;
      }
      for (std::uint32_t x = 0; x < q; ++x) scaled[x] = f.mul(Fe{static_cast<std::uint32_t>(dir)}, Fe{x});
      for (std::size_t i = 0; i < n; ++i) tally[i] += flags[f.sub(xy[2 * i + 1], scaled[xy[2 * i].v]).v];
    }
  });
  for (unsigned w = 1; w < shards; ++w)
    for (std::size_t i = 0; i < n; ++i) tallies[0][i] += tallies[w][i];
  const auto& tally = tallies[0];
  r.winner_index = static_cast<std::size_t>(std::max_element(tally.begin(), tally.end()) - tally.begin());
  r.winner = E.point(r.winner_index);
  r.pinned_line_count = tally[r.winner_index];

  const Fe zx = r.winner[0], zy = r.winner[1];
  for (Direction dir = 0; dir <= q; ++dir) {
    const std::uint32_t id = dir * q + line_offset(f, dir, zx, zy).v;
    if (!working[id]) continue;
    PinnedLine pl{Line::from_id(id, q), richness[id] - 1, false};
    pl.in_interval = in_pinned_interval(pl.others, q, n);
    r.pinned_in_interval += pl.in_interval;
    r.pinned_lines.push_back(pl);
  }

  using I = __int128;
  r.lines_ok = static_cast<I>(8) * r.working_count >= static_cast<I>(q) * q;
  r.pairs_ok = static_cast<I>(4) * r.pair_coverage >= static_cast<I>(n) * n;
  r.incidence_ok = static_cast<I>(4) * r.incidences >= static_cast<I>(q) * n;
  r.pinned_ok = r.pinned_in_interval >= r.thresholds.pinned_target;
  return r;
}

BeckReport beck_report(const PointSet& E, unsigned workers) {
  return beck_report(E, richness_table(E, workers), workers);
}

RefinedSet refine_for_pinned(const PointSet& E, const BeckReport& report) {
  const Field& f = E.field();
  const std::uint32_t q = f.q();
  const std::uint64_t n = E.size();
  const std::uint64_t need = (q + 3) / 4;
  if (report.pinned_in_interval < need)
    throw Error(Errc::InsufficientPinnedLines, std::to_string(report.pinned_in_interval) + " qualifying lines through z, need " +
                                                   std::to_string(need));
  RefinedSet out{PointSet(E.field_ptr(), 2), {}, 2 * n / q, false};
  std::vector<std::uint64_t> keys{pack_point(report.winner, q)};
  for (const auto& pl : report.pinned_lines) {
    if (out.lines_used.size() == need) break;
    if (!pl.in_interval) continue;
    out.lines_used.push_back(pl.line);
    std::uint64_t taken = 0;
    for (const auto& p : points_on(f, pl.line)) {
      if (taken == out.per_line_cap) break;
      if (p == report.winner || !E.contains(p)) continue;
      keys.push_back(pack_point(p, q));
      ++taken;
    }
  }
  out.points = PointSet::from_keys(E.field_ptr(), 2, std::move(keys));
  out.size_ok = 8 * static_cast<std::uint64_t>(out.points.size()) > n;
  return out;
}

}  // namespace ffgeom
