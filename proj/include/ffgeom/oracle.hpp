#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ffgeom/fourier.hpp"
#include "ffgeom/plane.hpp"
#include "ffgeom/volumes.hpp"

namespace ffgeom::oracle {

/// Hard cap on tuple/pair work for every brute-force path.
inline constexpr std::uint64_t kWorkLimit = 100'000'000;

/// Plain (d+1)-fold loop over ordered tuples. Throws TooLarge.
VolumeSpectrum bf_volume_spectrum(const PointSet& E);
/// Plain d-fold loop over ordered tuples. Throws TooLarge, PinNotInSet.
VolumeSpectrum bf_pinned_spectrum(const PointSet& E, const Point& z);
DotProductSpectrum bf_dot_spectrum(const PointSet& F, const PointSet& G);
/// Lines through every pair, richness by testing every point of E. Keyed by line id.
std::map<std::uint32_t, std::uint32_t> bf_spanned_lines(const PointSet& E);
/// Every (point, line) pair tested by the line equation.
std::uint64_t bf_incidences(const PointSet& E, const std::vector<Line>& L);

enum class SweepProperty { Theorem1i, DirectionCoverage, AllAreas };

std::string property_name(SweepProperty p);
SweepProperty parse_property(const std::string& name);

struct SweepFailure {
  std::uint64_t rank = 0;  ///< colex rank (exhaustive) or sample index
  std::vector<Point> points;
};

struct SweepOptions {
  std::uint64_t samples = 0;          ///< 0: exhaustive; otherwise number of seeded random subsets
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::filesystem::path checkpoint_dir;  ///< empty: no checkpoints
  std::uint64_t checkpoint_every = 100'000;
  std::optional<std::uint64_t> stop_after;  ///< stop (as if interrupted) after this many subsets
  std::size_t max_failures_kept = 100;
};

struct SweepResult {
  std::uint32_t q = 0;
  unsigned d = 2;
  std::uint64_t n = 0;
  std::string property;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t total = 0;     ///< subsets in scope (C(q^2, n) or the sample count)
  std::uint64_t examined = 0;
  std::uint64_t failure_count = 0;
  std::vector<SweepFailure> failures;  ///< first max_failures_kept, by rank
  std::uint64_t achieved = 0;  ///< subsets attaining all q-1 areas (reported, never asserted)
  bool complete() const { return examined == total; }
  bool held() const { return failure_count == 0; }
};

/// Exhaustive limit on C(q^2, n) before sampling is required.
inline constexpr std::uint64_t kExhaustiveLimit = 10'000'000;

/// Checks the property on every n-subset of GF(q)^2 in colex order, or on
/// seeded random subsets. Resumes from "sweep.<property>.<q>.<n>.ckpt" in
/// checkpoint_dir when present. Throws TooLarge when exhaustive scope exceeds
/// the limit and no sample count was given.
SweepResult exhaustive_theorem_sweep(const FieldPtr& field, std::uint64_t n, SweepProperty property,
                                     const SweepOptions& options = {});

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);
/// Colex unranking: the rank-th ascending k-subset of [0, n).
std::vector<std::uint64_t> unrank_colex(std::uint64_t rank, std::uint64_t k);

}  // namespace ffgeom::oracle
