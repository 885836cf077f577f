#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ffgeom/field.hpp"
#include "ffgeom/point_set.hpp"
#include "ffgeom/rng.hpp"

namespace testing {

using namespace ffgeom;

inline FieldPtr gf(std::uint32_t p, std::uint32_t k = 1) { return Field::make(p, k); }

inline Point pt(std::initializer_list<std::uint32_t> c) {
  Point p;
  for (auto v : c) p.push_back(Fe{v});
  return p;
}

inline PointSet set_of(const FieldPtr& f, std::initializer_list<std::initializer_list<std::uint32_t>> rows,
                       unsigned d = 2) {
  std::vector<Point> pts;
  for (auto r : rows) pts.push_back(pt(r));
  return PointSet::from_points(f, d, pts);
}

/// (p, k) for every field order used by the property suites.
inline const std::vector<std::pair<std::uint32_t, std::uint32_t>>& small_fields() {
  static const std::vector<std::pair<std::uint32_t, std::uint32_t>> v{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
  return v;
}

/// Random set of size in [lo, hi] drawn from rng.
inline PointSet random_set(const FieldPtr& f, unsigned d, std::uint64_t lo, std::uint64_t hi, Rng& rng,
                           bool exclude_origin = false) {
  const std::uint64_t n = lo + rng.below(hi - lo + 1);
  return PointSet::random(f, d, n, rng, exclude_origin);
}

}  // namespace testing
