#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffgeom/point_set.hpp"

namespace ffgeom {

/// Determinant of an n x n row-major matrix over the field, by Gaussian elimination.
Fe determinant(const Field& f, std::vector<Fe> matrix, std::size_t n);

/// det(x^1 - x^{d+1}, ..., x^d - x^{d+1}) for d+1 points of dimension d.
/// Throws DimensionMismatch.
Fe simplex_volume(const Field& f, std::span<const Point> tuple);

/// The (d+1)x(d+1) determinant with a top row of ones and columns (1, x^j).
/// Equals (-1)^d * simplex_volume on every tuple (cofactor expansion along
/// the top row after subtracting the last column).
Fe bordered_determinant(const Field& f, std::span<const Point> tuple);

/// (-1)^d as a field element.
Fe bordered_sign(const Field& f, unsigned d);

struct SpectrumMode {
  bool exhaustive = true;
  std::uint64_t target = 0;           ///< early exit: stop at this many distinct values
  std::uint64_t budget = 10'000'000;  ///< early exit: max tuples streamed
  std::uint64_t seed = 0;

  static SpectrumMode full() { return {}; }
  static SpectrumMode early(std::uint64_t target, std::uint64_t seed, std::uint64_t budget = 10'000'000) {
    return {false, target, budget, seed};
  }
};

/// Nonzero volumes with ordered-tuple multiplicities (dense, indexed by value;
/// entry 0 is always 0). When not exhaustive, multiplicities are lower bounds.
struct VolumeSpectrum {
  std::uint32_t q = 0;
  unsigned d = 0;
  std::optional<Point> pinned;
  bool exhaustive = true;
  std::uint64_t tuples_examined = 0;
  std::vector<std::uint64_t> multiplicity;

  std::size_t distinct() const;
  std::vector<Fe> values() const;
  std::uint64_t total() const;
};

/// V_d(E). Exhaustive mode walks (d+1)-subsets and credits both signs with
/// (d+1)!/2 ordered tuples each; early mode streams ordered tuples in a seeded
/// order without replacement. |E| < d+1 gives an empty spectrum.
VolumeSpectrum volume_spectrum(const PointSet& E, const SpectrumMode& mode = SpectrumMode::full());

/// V_d^z(E): det(x^1 - z, ..., x^d - z) over ordered d-tuples of E. Throws PinNotInSet.
VolumeSpectrum pinned_spectrum(const PointSet& E, std::span<const Fe> z, const SpectrumMode& mode = SpectrumMode::full());

struct SharedBaseWitness {
  Point e1, e2;
  std::vector<Fe> areas;  ///< sorted distinct nonzero det(e1 - x, e2 - x), x in E
  bool met = false;       ///< areas.size() >= threshold
};

/// First base pair (canonical order, i < j) with >= threshold areas, else the
/// best found. Planar only. Throws NoBase (|E| < 2), DimensionMismatch.
SharedBaseWitness shared_base_witness(const PointSet& E, std::size_t threshold);

struct SliceReport {
  std::vector<std::uint64_t> sizes;  ///< |E ∩ H_c| by c = last coordinate
  Fe argmax{};                       ///< smallest c among maxima
  std::uint64_t max = 0;
  std::uint64_t pigeonhole = 0;      ///< ceil(|E| / q)
  bool pigeonhole_ok = true;
};

SliceReport hyperplane_slices(const PointSet& E);

/// Hyperplane-slicing route to higher-dimensional volumes: the richest
/// slice E0 = E ∩ H_c (projected to d-1 coordinates after translating by -c),
/// a point z off the slice, V_{d-1}(E0), and the pinned spectrum of E0 ∪ {z}
/// at z, which must contain z_d' * V_{d-1}(E0) (z_d' = z_d - c).
struct SlicingWitness {
  SliceReport slices;
  std::optional<Point> z;
  VolumeSpectrum lower;   ///< V_{d-1}(E0)
  VolumeSpectrum pinned;  ///< V_d^z((E ∩ H_c) ∪ {z}), translated
  bool contains_scaled = false;
};

SlicingWitness slicing_witness(const PointSet& E, const SpectrumMode& mode = SpectrumMode::full());

}  // namespace ffgeom
