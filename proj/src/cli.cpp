#include "ffgeom/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ffgeom/beck.hpp"
#include "ffgeom/fourier.hpp"
#include "ffgeom/io.hpp"
#include "ffgeom/oracle.hpp"
#include "ffgeom/plane.hpp"
#include "ffgeom/volumes.hpp"

namespace ffgeom::cli {

namespace {

using json = nlohmann::ordered_json;

json point_json(std::span<const Fe> p) {
  json a = json::array();
  for (Fe c : p) a.push_back(c.v);
  return a;
}

json rational_json(const Rational& r) {
  return {{"exact", r.str()}, {"value", r.to_double()}, {"floor", r.floor()}, {"ceil", r.ceil()}};
}

json u128_json(unsigned __int128 v) {
  if (v <= UINT64_MAX) return static_cast<std::uint64_t>(v);
  std::string s;
  while (v > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

json line_json(const Line& l, std::optional<std::uint32_t> richness) {
  json j;
  const bool nv = l.kind == Line::Kind::NonVertical;
  j["kind"] = nv ? "nv" : "v";
  j["slope"] = nv ? json(l.slope.v) : json(nullptr);
  j["intercept"] = nv ? json(l.intercept.v) : json(nullptr);
  j["abscissa"] = nv ? json(nullptr) : json(l.abscissa.v);
  j["richness"] = richness ? json(*richness) : json(nullptr);
  return j;
}

json spectrum_json(const VolumeSpectrum& s) {
  json j;
  j["q"] = s.q;
  j["d"] = s.d;
  j["pinned"] = s.pinned ? point_json(*s.pinned) : json(nullptr);
  j["exhaustive"] = s.exhaustive;
  json values = json::array();
  for (Fe v : s.values()) values.push_back({v.v, s.multiplicity[v.v]});
  j["values"] = values;
  j["distinct"] = s.distinct();
  j["tuples_examined"] = s.tuples_examined;
  return j;
}

std::string direction_label(Direction d, std::uint32_t q) { return d == q ? "inf" : std::to_string(d); }

struct Context {
  const RunConfig& cfg;
  FieldPtr field;
  json meta;
  std::ostream& err;
};

FieldPtr field_from_config(const RunConfig& c) {
  return c.field.empty() ? nullptr : Field::parse(c.field);
}

std::uint64_t require_seed(const RunConfig& c, const char* why) {
  if (!c.seed) throw Error(Errc::InvalidArgument, std::string("--seed is required for ") + why);
  return *c.seed;
}

std::uint64_t parse_count(const std::string& text) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw Error(Errc::InvalidArgument, "bad count '" + text + "'");
  return v;
}

PointSet load_source(Context& ctx, bool exclude_origin = false) {
  const RunConfig& c = ctx.cfg;
  const int sources = (!c.in_path.empty()) + (c.random.has_value()) + (c.all_points ? 1 : 0);
  if (sources != 1) throw Error(Errc::InvalidArgument, "exactly one of --in, --random, --all-points is required");
  json source;
  std::optional<PointSet> points;
  if (!c.in_path.empty()) {
    auto loaded = load_pointset(c.in_path, ctx.field);
    if (c.d && *c.d != loaded.points.dim()) throw Error(Errc::DimensionMismatch, "--d disagrees with file header");
    if (loaded.duplicates_removed > 0)
      ctx.err << "warning: removed " << loaded.duplicates_removed << " duplicate point(s) from " << c.in_path << "\n";
    ctx.field = loaded.points.field_ptr();
    points.emplace(std::move(loaded.points));
    source = {{"kind", "file"}, {"path", c.in_path}, {"duplicates_removed", loaded.duplicates_removed}};
  } else {
    if (!ctx.field) throw Error(Errc::InvalidArgument, "--field is required");
    const unsigned d = c.d.value_or(2);
    if (c.all_points) {
      points.emplace(PointSet::all_points(ctx.field, d));
      source = {{"kind", "all"}};
    } else {
      const std::uint32_t q = ctx.field->q();
      std::uint64_t n = 0;
      if (*c.random == "auto") {
        if (d != 2) throw Error(Errc::InvalidArgument, "--random auto is planar");
        n = beck_hypothesis_size(q);
        if (n > static_cast<std::uint64_t>(q) * q)
          throw Error(Errc::InvalidArgument, "ceil(64 q log2 q) = " + std::to_string(n) + " exceeds q^2 = " +
                                                 std::to_string(static_cast<std::uint64_t>(q) * q) +
                                                 "; the Beck hypothesis is unsatisfiable at this q");
      } else {
        n = parse_count(*c.random);
      }
      Rng rng(require_seed(c, "--random"));
      points.emplace(PointSet::random(ctx.field, d, n, rng, exclude_origin));
      source = {{"kind", "random"}, {"size", n}, {"auto", *c.random == "auto"}, {"exclude_origin", exclude_origin}};
    }
  }
  ctx.meta["field"] = ctx.field->spec();
  ctx.meta["q"] = ctx.field->q();
  ctx.meta["d"] = points->dim();
  ctx.meta["source"] = source;
  ctx.meta["size"] = points->size();
  return std::move(*points);
}

SpectrumMode spectrum_mode(const RunConfig& c, std::uint64_t default_target) {
  if (c.mode == "exhaustive") return SpectrumMode::full();
  if (c.mode == "early") return SpectrumMode::early(c.threshold.value_or(default_target), require_seed(c, "--mode early"), c.budget);
  throw Error(Errc::InvalidArgument, "--mode must be exhaustive or early");
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write '" + c.out_path + "'");
  f << text;
}

std::string spectrum_csv(const VolumeSpectrum& s) {
  std::ostringstream o;
  o << "value,multiplicity\n";
  for (Fe v : s.values()) o << v.v << "," << s.multiplicity[v.v] << "\n";
  return o.str();
}

void require_json(const RunConfig& c) {
  if (c.format != OutputFormat::Json) throw Error(Errc::InvalidArgument, "'" + c.command + "' reports are JSON-only");
}

std::string finish(json& report, const json& meta) {
  json full;
  full["meta"] = meta;
  for (auto it = report.begin(); it != report.end(); ++it) full[it.key()] = it.value();
  return full.dump(2) + "\n";
}

// ---------------------------------------------------------------- commands

int cmd_spectrum(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  const PointSet E = load_source(ctx);
  const std::uint32_t q = ctx.field->q();
  VolumeSpectrum s;
  if (c.command == "areas" || c.command == "pinned") {
    if (E.dim() != 2) throw Error(Errc::DimensionMismatch, "'" + c.command + "' needs d = 2");
  }
  const SpectrumMode mode = spectrum_mode(c, q - 1);
  if (c.command == "pinned") {
    if (!c.pin) throw Error(Errc::InvalidArgument, "--pin is required");
    s = pinned_spectrum(E, parse_point(*c.pin, *ctx.field, E.dim()), mode);
  } else {
    s = volume_spectrum(E, mode);
  }
  if (c.format == OutputFormat::Csv) {
    emit(c, out, spectrum_csv(s));
    return kOk;
  }
  json report = spectrum_json(s);
  ctx.meta["mode"] = c.mode;
  if (!mode.exhaustive) ctx.meta["thresholds"] = {{"target", mode.target}, {"budget", mode.budget}};
  emit(c, out, finish(report, ctx.meta));
  return kOk;
}

int cmd_lines(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  const PointSet E = load_source(ctx);
  const auto richness = richness_table(E, c.workers);
  if (E.size() < 2) throw Error(Errc::TooFewPoints, "spanned lines need at least 2 points");
  const std::uint32_t q = ctx.field->q();
  std::vector<LineRichness> lines;
  for (std::uint32_t id = 0; id < richness.size(); ++id)
    if (richness[id] >= 2) lines.push_back({Line::from_id(id, q), richness[id]});
  if (c.format == OutputFormat::Csv) {
    std::ostringstream o;
    o << "kind,slope,intercept,abscissa,richness\n";
    for (const auto& lr : lines) {
      if (lr.line.kind == Line::Kind::NonVertical)
        o << "nv," << lr.line.slope.v << "," << lr.line.intercept.v << ",," << lr.richness << "\n";
      else
        o << "v,,," << lr.line.abscissa.v << "," << lr.richness << "\n";
    }
    emit(c, out, o.str());
    return kOk;
  }
  json report;
  report["spanned"] = lines.size();
  json arr = json::array();
  for (const auto& lr : lines) arr.push_back(line_json(lr.line, lr.richness));
  report["lines"] = arr;
  int code = kOk;
  if (c.k) {
    const auto rich = rich_lines(E, richness, *c.k);
    report["rich"] = {{"k", rich.k},
                      {"count", rich.lines.size()},
                      {"bound_applicable", rich.bound_applicable},
                      {"bound", rich.bound_applicable ? rational_json(rich.bound) : json(nullptr)},
                      {"bound_satisfied", rich.bound_satisfied}};
    ctx.meta["thresholds"] = {{"k", *c.k}, {"mean_richness", rational_json(Rational(static_cast<std::int64_t>(E.size()), q))}};
    if (!rich.bound_satisfied) code = kCheckFailed;
  }
  emit(c, out, finish(report, ctx.meta));
  return code;
}

int cmd_vinh(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  require_json(c);
  const PointSet E = load_source(ctx);
  if (E.dim() != 2) throw Error(Errc::DimensionMismatch, "'vinh' needs d = 2");
  const std::uint32_t q = ctx.field->q();
  std::vector<Line> L;
  json family;
  if (c.all_lines && c.random_lines) throw Error(Errc::InvalidArgument, "--all-lines and --random-lines are exclusive");
  if (c.all_lines) {
    for (std::uint32_t id = 0; id < line_count(q); ++id) L.push_back(Line::from_id(id, q));
    family = "all";
  } else if (c.random_lines) {
    if (*c.random_lines > line_count(q)) throw Error(Errc::InvalidArgument, "more lines requested than exist");
    Rng rng(splitmix64(require_seed(c, "--random-lines") ^ 0x6c696e6573ULL));
    std::vector<std::uint32_t> ids(line_count(q));
    for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
    for (std::uint64_t i = 0; i < *c.random_lines; ++i) {
      std::swap(ids[i], ids[i + rng.below(ids.size() - i)]);
      L.push_back(Line::from_id(ids[i], q));
    }
    family = "random";
  } else {
    for (const auto& lr : spanned_lines(E, c.workers)) L.push_back(lr.line);
    family = "spanned";
  }
  const auto rep = check_vinh(E, L);
  json report;
  report["family"] = family;
  report["incidences"] = rep.incidences;
  report["points"] = rep.points;
  report["lines"] = rep.lines;
  report["main_term"] = rational_json(rep.main_term);
  report["vinh_bound"] = rep.vinh_bound;
  report["satisfied"] = rep.satisfied;
  bool ok = rep.satisfied;
  // Rich-line bound for every k > |E|/q on the spanned lines of E.
  json stb = json::array();
  if (E.size() >= 2) {
    const auto richness = richness_table(E, c.workers);
    std::uint32_t top = 0;
    for (auto r : richness) top = std::max(top, r);
    for (std::uint32_t k = std::max<std::uint32_t>(2, static_cast<std::uint32_t>(E.size() / q) + 1); k <= top; ++k) {
      const auto rich = rich_lines(E, richness, k);
      if (!rich.bound_applicable) continue;
      stb.push_back({{"k", k}, {"count", rich.lines.size()}, {"bound", rational_json(rich.bound)}, {"satisfied", rich.bound_satisfied}});
      ok = ok && rich.bound_satisfied;
    }
  }
  report["rich_line_bounds"] = stb;
  emit(c, out, finish(report, ctx.meta));
  return ok ? kOk : kCheckFailed;
}

json thresholds_json(const BeckThresholds& t) {
  return {{"mean", rational_json(t.mean)},
          {"working_low", rational_json(t.working_low)},
          {"working_high", rational_json(t.working_high)},
          {"pinned_low", rational_json(t.pinned_low)},
          {"pinned_high", rational_json(t.pinned_high)},
          {"dyadic_bands", t.log2_ceil},
          {"hypothesis_raw", static_cast<double>(t.hypothesis_raw)},
          {"hypothesis_ceil", t.hypothesis_ceil},
          {"hypothesis_met", t.hypothesis_met},
          {"lines_target", rational_json(t.lines_target)},
          {"pairs_target", rational_json(t.pairs_target)},
          {"incidence_target", rational_json(t.incidence_target)},
          {"pinned_target", t.pinned_target}};
}

json classes_json(const DyadicClassReport& d) {
  json bands = json::array();
  for (const auto& b : d.bands)
    bands.push_back({{"j", b.j},
                     {"low_exclusive", rational_json(b.low)},
                     {"high_inclusive", rational_json(b.high)},
                     {"lines", b.cls.lines},
                     {"pairs", b.cls.pairs},
                     {"stb_applicable", b.stb_applicable},
                     {"stb_satisfied", b.stb_satisfied}});
  return {{"poor", {{"lines", d.poor.lines}, {"pairs", d.poor.pairs}}},
          {"working", {{"lines", d.working.lines}, {"pairs", d.working.pairs}}},
          {"bands", bands},
          {"total_pairs", d.total_pairs},
          {"partition_ok", d.partition_ok},
          {"poor_bound", u128_json(d.poor_bound)},
          {"poor_bound_ok", d.poor_bound_ok}};
}

bool classes_sound(const DyadicClassReport& d) {
  bool ok = d.partition_ok && d.poor_bound_ok;
  for (const auto& b : d.bands) ok = ok && b.stb_satisfied;
  return ok;
}

json beck_json(const BeckReport& r) {
  json pinned = json::array();
  for (const auto& pl : r.pinned_lines) {
    json l = line_json(pl.line, pl.others + 1);
    l["others"] = pl.others;
    l["in_interval"] = pl.in_interval;
    pinned.push_back(l);
  }
  return {{"spanned_count", r.spanned_count},
          {"working_count", r.working_count},
          {"pair_coverage", r.pair_coverage},
          {"incidences", r.incidences},
          {"winner", point_json(r.winner)},
          {"pinned_line_count", r.pinned_line_count},
          {"pinned_in_interval", r.pinned_in_interval},
          {"checks",
           {{"lines", r.lines_ok}, {"pairs", r.pairs_ok}, {"incidences", r.incidence_ok}, {"pinned", r.pinned_ok}}},
          {"pinned_lines", pinned}};
}

int cmd_beck(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  require_json(c);
  const PointSet E = load_source(ctx);
  if (E.dim() != 2) throw Error(Errc::DimensionMismatch, "'beck' needs d = 2");
  const auto t = BeckThresholds::make(ctx.field->q(), E.size());
  ctx.meta["thresholds"] = thresholds_json(t);
  json report;
  if (c.hypothesis_check && !t.hypothesis_met) {
    report["status"] = "hypothesis_not_met";
    report["reason"] = "|E| < 64 q log2 q; theorem verification not claimed";
    emit(c, out, finish(report, ctx.meta));
    return kCheckFailed;
  }
  const auto richness = richness_table(E, c.workers);
  const auto classes = dyadic_classes(E, richness);
  const auto beck = beck_report(E, richness, c.workers);
  report["classes"] = classes_json(classes);
  const json beck_fields = beck_json(beck);
  for (auto& [key, value] : beck_fields.items()) report[key] = value;
  const bool sound = classes_sound(classes);
  std::string status;
  int code = kOk;
  if (!sound) {
    status = "FAILED: class accounting";
    code = kCheckFailed;
  } else if (!t.hypothesis_met) {
    status = "not_applicable";
  } else if (beck.conclusions_hold()) {
    status = "verified";
  } else {
    status = "FAILED: theorem conclusion";
    code = kCheckFailed;
  }
  report["status"] = status;
  emit(c, out, finish(report, ctx.meta));
  return code;
}

int cmd_l2(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  require_json(c);
  const PointSet F = load_source(ctx, true);
  PointSet G = F;
  json gsource = "F";
  if (!c.in_g_path.empty() && c.random_g) throw Error(Errc::InvalidArgument, "--in-g and --random-g are exclusive");
  if (!c.in_g_path.empty()) {
    G = load_pointset(c.in_g_path, ctx.field).points;
    gsource = {{"kind", "file"}, {"path", c.in_g_path}};
  } else if (c.random_g) {
    Rng rng(splitmix64(require_seed(c, "--random-g") ^ 0x47ULL));
    G = PointSet::random(ctx.field, 2, *c.random_g, rng);
    gsource = {{"kind", "random"}, {"size", *c.random_g}};
  }
  ctx.meta["source_g"] = gsource;
  const auto r = l2_bound_check(F, G);
  json report;
  report["q"] = r.q;
  report["sizeF"] = r.size_f;
  report["sizeG"] = r.size_g;
  json nu = json::array();
  for (std::uint32_t t = 0; t < r.q; ++t) nu.push_back({t, r.spectrum.counts[t]});
  report["nu"] = nu;
  report["energy"] = u128_json(r.spectrum.energy);
  report["bound_main"] = r.bound_main.to_double();
  report["bound_main_exact"] = r.bound_main.str();
  report["bound_error_term"] = u128_json(r.bound_error_term);
  report["max_punctured"] = r.max_punctured;
  report["satisfied"] = r.satisfied;
  emit(c, out, finish(report, ctx.meta));
  return r.satisfied ? kOk : kCheckFailed;
}

int cmd_theorem1(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  require_json(c);
  const PointSet E = load_source(ctx);
  if (E.dim() != 2) throw Error(Errc::DimensionMismatch, "'theorem1' needs d = 2");
  const std::uint32_t q = ctx.field->q();
  const std::uint64_t n = E.size();
  int code = kOk;
  json report;

  // Part (i): |E| > q.
  json part1;
  const std::size_t areas_needed = q / 2;  // ceil((q-1)/2)
  part1["applicable"] = n > q;
  part1["areas_needed"] = areas_needed;
  if (n >= 2) {
    const auto dirs = directions(E);
    const auto sumset = best_line_sumset(E);
    const auto witness = shared_base_witness(E, areas_needed);
    json dir_labels = json::array();
    for (auto d : dirs) dir_labels.push_back(direction_label(d, q));
    part1["directions"] = dirs.size();
    part1["direction_labels"] = dir_labels;
    part1["best_sumset"] = {{"direction", direction_label(sumset.best, q)}, {"size", sumset.best_size}, {"bound", sumset.bound}};
    json areas = json::array();
    for (Fe a : witness.areas) areas.push_back(a.v);
    part1["witness"] = {{"base", {point_json(witness.e1), point_json(witness.e2)}}, {"areas", areas}, {"distinct", witness.areas.size()}};
    const bool holds = dirs.size() == q + 1 && sumset.bound_satisfied && witness.met;
    part1["status"] = n > q ? (holds ? "verified" : "FAILED") : "not_applicable";
    if (n > q && !holds) code = kCheckFailed;
  } else {
    part1["status"] = "not_applicable";
  }
  report["part_i"] = part1;

  // Part (ii): Beck winner, refined set, pinned spectrum in early-exit mode.
  json part2;
  const auto t = BeckThresholds::make(q, n);
  ctx.meta["thresholds"] = thresholds_json(t);
  part2["applicable"] = t.hypothesis_met;
  if (c.hypothesis_check && !t.hypothesis_met) {
    part2["status"] = "hypothesis_not_met";
    report["part_ii"] = part2;
    emit(c, out, finish(report, ctx.meta));
    return kCheckFailed;
  }
  const auto beck = beck_report(E, c.workers);
  part2["beck"] = beck_json(beck);
  part2["beck"].erase("pinned_lines");
  const std::uint64_t target = q / 2 + 1;
  const std::uint64_t seed = c.seed.value_or(0);
  const auto spec = pinned_spectrum(E, beck.winner, SpectrumMode::early(target, seed, c.budget));
  part2["pinned_target"] = target;
  part2["pinned_budget"] = c.budget;
  part2["pinned"] = {{"distinct", spec.distinct()}, {"tuples_examined", spec.tuples_examined}, {"exhaustive", spec.exhaustive}};
  try {
    const auto refined = refine_for_pinned(E, beck);
    const auto rspec = pinned_spectrum(refined.points, beck.winner, SpectrumMode::early(target, seed, c.budget));
    part2["refined"] = {{"size", refined.points.size()},
                        {"lines_used", refined.lines_used.size()},
                        {"per_line_cap", refined.per_line_cap},
                        {"size_ok", refined.size_ok},
                        {"pinned_distinct", rspec.distinct()}};
  } catch (const Error& e) {
    part2["refined"] = {{"error", e.what()}};
  }
  const bool holds = 2 * spec.distinct() > q && beck.conclusions_hold();
  part2["status"] = t.hypothesis_met ? (holds ? "verified" : "FAILED") : "not_applicable";
  if (t.hypothesis_met && !holds) code = kCheckFailed;
  report["part_ii"] = part2;
  emit(c, out, finish(report, ctx.meta));
  return code;
}

int cmd_sweep(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  require_json(c);
  if (!ctx.field) throw Error(Errc::InvalidArgument, "--field is required");
  oracle::SweepOptions opt;
  opt.samples = c.samples;
  opt.seed = c.samples > 0 ? require_seed(c, "sampled sweeps") : c.seed.value_or(0);
  opt.workers = c.workers;
  opt.checkpoint_dir = c.checkpoint_dir;
  const auto property = oracle::parse_property(c.property);
  const auto r = oracle::exhaustive_theorem_sweep(ctx.field, c.n, property, opt);
  const std::uint32_t q = ctx.field->q();
  ctx.meta["field"] = ctx.field->spec();
  ctx.meta["q"] = q;
  const bool hypothesis = c.n > q;
  json report;
  report["q"] = r.q;
  report["d"] = r.d;
  report["n"] = r.n;
  report["property"] = r.property;
  report["exhaustive"] = r.exhaustive;
  report["subsets"] = r.total;
  report["examined"] = r.examined;
  report["hypothesis_met"] = hypothesis;
  report["failure_count"] = r.failure_count;
  json failures = json::array();
  for (const auto& fl : r.failures) {
    json pts = json::array();
    for (const auto& p : fl.points) pts.push_back(point_json(p));
    failures.push_back({{"rank", fl.rank}, {"points", pts}});
  }
  report["failures"] = failures;
  if (property != oracle::SweepProperty::DirectionCoverage) report["achieving_all_areas"] = r.achieved;
  const bool asserted = property != oracle::SweepProperty::AllAreas && hypothesis;
  emit(c, out, finish(report, ctx.meta));
  return asserted && !r.held() ? kCheckFailed : kOk;
}

int cmd_corollary(Context& ctx, std::ostream& out) {
  const RunConfig& c = ctx.cfg;
  require_json(c);
  const PointSet E = load_source(ctx);
  const unsigned d = E.dim();
  if (d < 3) throw Error(Errc::DimensionMismatch, "'corollary' needs d >= 3");
  const std::uint32_t q = ctx.field->q();
  const std::uint64_t n = E.size();
  std::uint64_t slab = 1;
  for (unsigned i = 0; i + 1 < d; ++i) slab *= q;
  const SpectrumMode mode = spectrum_mode(c, q - 1);
  const auto spec = volume_spectrum(E, mode);
  const auto witness = slicing_witness(E, mode);
  json report;
  report["spectrum"] = spectrum_json(spec);
  const bool part1 = n > slab, part2 = n >= 2 * slab;
  const bool ok1 = spec.distinct() >= q / 2;
  const bool ok2 = spec.distinct() == q - 1;
  report["part_i"] = {{"applicable", part1}, {"needed", q / 2}, {"holds", ok1}};
  report["part_ii"] = {{"applicable", part2}, {"needed", q - 1}, {"holds", ok2}};
  json slices = json::array();
  for (auto s : witness.slices.sizes) slices.push_back(s);
  report["slicing"] = {{"slices", slices},
                       {"argmax", witness.slices.argmax.v},
                       {"max", witness.slices.max},
                       {"pigeonhole", witness.slices.pigeonhole},
                       {"z", witness.z ? point_json(*witness.z) : json(nullptr)},
                       {"lower_distinct", witness.lower.distinct()},
                       {"pinned_distinct", witness.z ? json(witness.pinned.distinct()) : json(nullptr)},
                       {"contains_scaled", witness.contains_scaled}};
  ctx.meta["thresholds"] = {{"q_pow_d_minus_1", slab}, {"mode", c.mode}};
  bool ok = witness.slices.pigeonhole_ok && (!witness.z || witness.contains_scaled);
  if (part1) ok = ok && ok1;
  if (part2 && spec.exhaustive) ok = ok && ok2;
  if (part2 && !spec.exhaustive && !ok2) report["part_ii"]["note"] = "early exit did not reach all values within budget";
  emit(c, out, finish(report, ctx.meta));
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Context ctx{config, field_from_config(config), json::object(), err};
    ctx.meta["version"] = kVersion;
    ctx.meta["command"] = config.command;
    ctx.meta["seed"] = config.seed ? json(*config.seed) : json(nullptr);
    if (config.workers == 0) throw Error(Errc::InvalidArgument, "--workers must be >= 1");
    const std::string& cmd = config.command;
    if (cmd == "areas" || cmd == "pinned" || cmd == "volumes") return cmd_spectrum(ctx, out);
    if (cmd == "lines") return cmd_lines(ctx, out);
    if (cmd == "vinh") return cmd_vinh(ctx, out);
    if (cmd == "beck") return cmd_beck(ctx, out);
    if (cmd == "l2") return cmd_l2(ctx, out);
    if (cmd == "theorem1") return cmd_theorem1(ctx, out);
    if (cmd == "sweep") return cmd_sweep(ctx, out);
    if (cmd == "corollary") return cmd_corollary(ctx, out);
    throw Error(Errc::InvalidArgument, "unknown command '" + cmd + "'");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace ffgeom::cli
