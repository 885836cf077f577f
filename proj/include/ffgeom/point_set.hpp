#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffgeom/field.hpp"
#include "ffgeom/rng.hpp"

namespace ffgeom {

using Point = std::vector<Fe>;

/// Packed index sum_j c_j q^j. Ascending packed index is the canonical
/// (colexicographic) point order used everywhere a deterministic order matters.
std::uint64_t pack_point(std::span<const Fe> coords, std::uint32_t q);
Point unpack_point(std::uint64_t key, std::uint32_t q, unsigned d);

/// Duplicate-free set of points in GF(q)^d, stored in canonical order.
class PointSet {
 public:
  PointSet(FieldPtr field, unsigned d);

  /// Sorts and deduplicates. removed (optional) receives the number of duplicates dropped.
  /// Throws DimensionMismatch or CoordinateOutOfRange.
  static PointSet from_points(FieldPtr field, unsigned d, const std::vector<Point>& points,
                              std::size_t* removed = nullptr);
  static PointSet from_keys(FieldPtr field, unsigned d, std::vector<std::uint64_t> keys);

  static PointSet all_points(FieldPtr field, unsigned d);

  /// n distinct uniformly random points; exclude_origin draws from GF(q)^d \ {0}.
  static PointSet random(FieldPtr field, unsigned d, std::uint64_t n, Rng& rng, bool exclude_origin = false);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  unsigned dim() const { return d_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }

  std::span<const Fe> operator[](std::size_t i) const { return {coords_.data() + i * d_, d_}; }
  Point point(std::size_t i) const {
    auto s = (*this)[i];
    return Point(s.begin(), s.end());
  }
  std::uint64_t key(std::size_t i) const { return keys_[i]; }
  const std::vector<std::uint64_t>& keys() const { return keys_; }
  /// Flat coordinate array, point-major.
  const std::vector<Fe>& coords() const { return coords_; }

  std::optional<std::size_t> index_of(std::span<const Fe> p) const;
  bool contains(std::span<const Fe> p) const { return index_of(p).has_value(); }

  PointSet translated(std::span<const Fe> v) const;
  /// Subset by (any-order) indices into this set.
  PointSet subset(const std::vector<std::size_t>& indices) const;
  std::vector<Point> to_points() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.d_ == b.d_ && a.field_->same_as(*b.field_) && a.keys_ == b.keys_;
  }

 private:
  FieldPtr field_;
  unsigned d_;
  std::vector<std::uint64_t> keys_;
  std::vector<Fe> coords_;
};

/// q^d, throwing TooLarge if it does not fit in 63 bits.
std::uint64_t space_size(std::uint32_t q, unsigned d);

}  // namespace ffgeom
