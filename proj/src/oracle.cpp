#include "ffgeom/oracle.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "ffgeom/parallel.hpp"

namespace ffgeom::oracle {

namespace {

std::uint64_t guarded_power(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kWorkLimit / base) throw Error(Errc::TooLarge, "brute-force instance exceeds work limit");
    r *= base;
  }
  return r;
}

// Odometer over ordered m-tuples of [0, n).
template <typename Visit>
void for_each_tuple(std::size_t n, unsigned m, Visit&& visit) {
  if (n == 0) return;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    visit(idx);
    unsigned pos = 0;
    while (pos < m && ++idx[pos] == n) idx[pos++] = 0;
    if (pos == m) return;
  }
}

Fe dot(const Field& f, std::span<const Fe> x, std::span<const Fe> y) {
  if (f.k() == 1) {
    const std::uint64_t p = f.p();
    return Fe{static_cast<std::uint32_t>((static_cast<std::uint64_t>(x[0].v) * y[0].v + static_cast<std::uint64_t>(x[1].v) * y[1].v) % p)};
  }
  return f.apply(ArithOp::Add, f.apply(ArithOp::Mul, x[0], y[0]), f.apply(ArithOp::Mul, x[1], y[1]));
}

}  // namespace

VolumeSpectrum bf_volume_spectrum(const PointSet& E) {
  const Field& f = E.field();
  const unsigned d = E.dim();
  VolumeSpectrum s;
  s.q = f.q();
  s.d = d;
  s.multiplicity.assign(f.q(), 0);
  s.tuples_examined = guarded_power(E.size(), d + 1);
  std::vector<Point> tuple(d + 1);
  for_each_tuple(E.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    for (unsigned j = 0; j <= d; ++j) tuple[j] = E.point(idx[j]);
    const Fe v = simplex_volume(f, tuple);
    if (v.v != 0) ++s.multiplicity[v.v];
  });
  return s;
}

VolumeSpectrum bf_pinned_spectrum(const PointSet& E, const Point& z) {
  if (!E.contains(z)) throw Error(Errc::PinNotInSet, "pin is not a point of the set");
  const Field& f = E.field();
  const unsigned d = E.dim();
  VolumeSpectrum s;
  s.q = f.q();
  s.d = d;
  s.pinned = z;
  s.multiplicity.assign(f.q(), 0);
  s.tuples_examined = guarded_power(E.size(), d);
  std::vector<Point> tuple(d + 1);
  tuple[d] = z;
  for_each_tuple(E.size(), d, [&](const std::vector<std::size_t>& idx) {
    for (unsigned j = 0; j < d; ++j) tuple[j] = E.point(idx[j]);
    const Fe v = simplex_volume(f, tuple);
    if (v.v != 0) ++s.multiplicity[v.v];
  });
  return s;
}

DotProductSpectrum bf_dot_spectrum(const PointSet& F, const PointSet& G) {
  if (!F.field().same_as(G.field())) throw Error(Errc::FieldMismatch, "F and G live over different fields");
  if (F.dim() != 2 || G.dim() != 2) throw Error(Errc::DimensionMismatch, "dot products are planar");
  if (F.size() * G.size() > kWorkLimit) throw Error(Errc::TooLarge, "brute-force instance exceeds work limit");
  const Field& f = F.field();
  DotProductSpectrum s;
  s.counts.assign(f.q(), 0);
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) ++s.counts[dot(f, F[i], G[j]).v];
  for (auto c : s.counts) s.energy += static_cast<unsigned __int128>(c) * c;
  return s;
}

std::map<std::uint32_t, std::uint32_t> bf_spanned_lines(const PointSet& E) {
  const std::uint64_t n = E.size();
  if (n * n * n > kWorkLimit) throw Error(Errc::TooLarge, "brute-force instance exceeds work limit");
  const Field& f = E.field();
  std::set<std::uint32_t> ids;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ids.insert(line_through(f, E[i], E[j]).id(f.q()));
  std::map<std::uint32_t, std::uint32_t> out;
  for (auto id : ids) {
    const Line l = Line::from_id(id, f.q());
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += incident(f, l, E[i]);
    out[id] = count;
  }
  return out;
}

std::uint64_t bf_incidences(const PointSet& E, const std::vector<Line>& L) {
  if (E.size() * L.size() > kWorkLimit) throw Error(Errc::TooLarge, "brute-force instance exceeds work limit");
  const Field& f = E.field();
  std::set<std::uint32_t> ids;
  std::uint64_t count = 0;
  for (const auto& l : L) {
    if (!ids.insert(l.id(f.q())).second) continue;
    for (std::size_t i = 0; i < E.size(); ++i) count += incident(f, l, E[i]);
  }
  return count;
}

std::string property_name(SweepProperty p) {
  switch (p) {
    case SweepProperty::Theorem1i: return "theorem1i";
    case SweepProperty::DirectionCoverage: return "direction_coverage";
    case SweepProperty::AllAreas: return "all_areas";
  }
  return "unknown";
}

SweepProperty parse_property(const std::string& name) {
  if (name == "theorem1i") return SweepProperty::Theorem1i;
  if (name == "direction_coverage") return SweepProperty::DirectionCoverage;
  if (name == "all_areas") return SweepProperty::AllAreas;
  throw Error(Errc::InvalidArgument, "unknown sweep property '" + name + "'");
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> unrank_colex(std::uint64_t rank, std::uint64_t k) {
  std::vector<std::uint64_t> c(k);
  for (std::uint64_t i = k; i >= 1; --i) {
    std::uint64_t x = i - 1;
    while (binomial(x + 1, i) <= rank) ++x;
    c[i - 1] = x;
    rank -= binomial(x, i);
  }
  return c;
}

namespace {

struct ShardTally {
  std::uint64_t examined = 0;
  std::uint64_t failure_count = 0;
  std::uint64_t achieved = 0;
  std::vector<SweepFailure> failures;
};

bool next_colex(std::vector<std::uint64_t>& c, std::uint64_t universe) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t limit = i + 1 < k ? c[i + 1] : universe;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

std::string checkpoint_name(SweepProperty p, std::uint32_t q, std::uint64_t n) {
  return "sweep." + property_name(p) + "." + std::to_string(q) + "." + std::to_string(n) + ".ckpt";
}

nlohmann::ordered_json failures_json(const std::vector<SweepFailure>& failures) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& fl : failures) {
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : fl.points) pts.push_back({p[0].v, p[1].v});
    arr.push_back({{"rank", fl.rank}, {"points", pts}});
  }
  return arr;
}

}  // namespace

SweepResult exhaustive_theorem_sweep(const FieldPtr& field, std::uint64_t n, SweepProperty property,
                                     const SweepOptions& options) {
  const std::uint32_t q = field->q();
  const std::uint64_t universe = static_cast<std::uint64_t>(q) * q;
  if (n < 2 || n > universe) throw Error(Errc::InvalidArgument, "subset size must lie in [2, q^2]");
  SweepResult result;
  result.q = q;
  result.n = n;
  result.property = property_name(property);
  result.seed = options.seed;
  result.exhaustive = options.samples == 0;
  if (result.exhaustive) {
    result.total = binomial(universe, n);
    if (result.total > kExhaustiveLimit)
      throw Error(Errc::TooLarge, "C(q^2, n) = " + std::to_string(result.total) + " exceeds the exhaustive limit; pass a sample count");
  } else {
    result.total = options.samples;
  }

  const std::size_t threshold = q / 2;  // ceil((q-1)/2)
  const std::uint64_t half_plane = static_cast<std::uint64_t>(q) * (q + 1) / 2;

  auto evaluate = [&](const PointSet& E, ShardTally& tally, std::uint64_t rank) {
    bool ok = true;
    if (property == SweepProperty::DirectionCoverage) {
      ok = directions(E).size() == q + 1 && best_line_sumset(E).best_size >= half_plane;
    } else {
      const std::size_t distinct = volume_spectrum(E).distinct();
      if (distinct == q - 1) ++tally.achieved;
      if (property == SweepProperty::Theorem1i) ok = distinct >= threshold && shared_base_witness(E, threshold).met;
    }
    ++tally.examined;
    if (!ok) {
      ++tally.failure_count;
      if (tally.failures.size() < options.max_failures_kept) tally.failures.push_back({rank, E.to_points()});
    }
  };

  // Resume.
  std::uint64_t next = 0;
  std::filesystem::path ckpt;
  if (!options.checkpoint_dir.empty()) {
    std::filesystem::create_directories(options.checkpoint_dir);
    ckpt = options.checkpoint_dir / checkpoint_name(property, q, n);
    std::ifstream in(ckpt);
    if (in) {
      const auto j = nlohmann::json::parse(in, nullptr, false);
      if (!j.is_discarded() && j.value("field", "") == field->spec() && j.value("seed", std::uint64_t{0}) == options.seed &&
          j.value("samples", std::uint64_t{0}) == options.samples) {
        next = j.at("next").get<std::uint64_t>();
        result.examined = next;
        result.failure_count = j.at("failure_count").get<std::uint64_t>();
        result.achieved = j.at("achieved").get<std::uint64_t>();
        for (const auto& fj : j.at("failures")) {
          SweepFailure fl{fj.at("rank").get<std::uint64_t>(), {}};
          for (const auto& pj : fj.at("points"))
            fl.points.push_back({Fe{pj[0].get<std::uint32_t>()}, Fe{pj[1].get<std::uint32_t>()}});
          result.failures.push_back(std::move(fl));
        }
      }
    }
  }

  auto write_checkpoint = [&] {
    if (ckpt.empty()) return;
    nlohmann::ordered_json j;
    j["property"] = result.property;
    j["field"] = field->spec();
    j["q"] = q;
    j["n"] = n;
    j["seed"] = options.seed;
    j["samples"] = options.samples;
    j["next"] = next;
    j["failure_count"] = result.failure_count;
    j["achieved"] = result.achieved;
    j["failures"] = failures_json(result.failures);
    const auto tmp = ckpt.string() + ".tmp";
    std::ofstream(tmp) << j.dump() << "\n";
    std::filesystem::rename(tmp, ckpt);
  };

  const std::uint64_t block = std::max<std::uint64_t>(1, options.checkpoint_every);
  std::uint64_t end_all = result.total;
  if (options.stop_after) end_all = std::min(end_all, next + *options.stop_after);
  while (next < end_all) {
    const std::uint64_t block_end = std::min(end_all, next + block);
    const std::uint64_t span = block_end - next;
    const unsigned shards = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.workers, span)));
    std::vector<ShardTally> tallies(shards);
    const std::uint64_t start = next;
    parallel_shards(span, shards, [&](unsigned w, std::size_t b, std::size_t e) {
      auto& tally = tallies[w];
      if (result.exhaustive) {
        auto c = unrank_colex(start + b, n);
        for (std::uint64_t r = start + b; r < start + e; ++r) {
          evaluate(PointSet::from_keys(field, 2, c), tally, r);
          next_colex(c, universe);
        }
      } else {
        for (std::uint64_t s = start + b; s < start + e; ++s) {
          Rng rng(splitmix64(options.seed ^ splitmix64(s)));
          evaluate(PointSet::random(field, 2, n, rng), tally, s);
        }
      }
    });
    for (auto& t : tallies) {
      result.examined += t.examined;
      result.failure_count += t.failure_count;
      result.achieved += t.achieved;
      for (auto& fl : t.failures)
        if (result.failures.size() < options.max_failures_kept) result.failures.push_back(std::move(fl));
    }
    next = block_end;
    write_checkpoint();
  }
  return result;
}

}  // namespace ffgeom::oracle
