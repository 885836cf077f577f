#include "ffgeom/point_set.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ffgeom {

std::uint64_t space_size(std::uint32_t q, unsigned d) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (n > (std::uint64_t{1} << 62) / q) throw Error(Errc::TooLarge, "q^d exceeds 2^62");
    n *= q;
  }
  return n;
}

std::uint64_t pack_point(std::span<const Fe> coords, std::uint32_t q) {
  std::uint64_t key = 0;
  for (std::size_t j = coords.size(); j-- > 0;) key = key * q + coords[j].v;
  return key;
}

Point unpack_point(std::uint64_t key, std::uint32_t q, unsigned d) {
  Point p(d);
  for (unsigned j = 0; j < d; ++j) {
    p[j] = Fe{static_cast<std::uint32_t>(key % q)};
    key /= q;
  }
  return p;
}

PointSet::PointSet(FieldPtr field, unsigned d) : field_(std::move(field)), d_(d) {
  if (d_ == 0) throw Error(Errc::DimensionMismatch, "dimension must be positive");
  space_size(field_->q(), d_);
}

PointSet PointSet::from_keys(FieldPtr field, unsigned d, std::vector<std::uint64_t> keys) {
  PointSet s(std::move(field), d);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  const std::uint32_t q = s.field_->q();
  s.coords_.resize(keys.size() * d);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::uint64_t key = keys[i];
    for (unsigned j = 0; j < d; ++j) {
      s.coords_[i * d + j] = Fe{static_cast<std::uint32_t>(key % q)};
      key /= q;
    }
  }
  s.keys_ = std::move(keys);
  return s;
}

PointSet PointSet::from_points(FieldPtr field, unsigned d, const std::vector<Point>& points, std::size_t* removed) {
  std::vector<std::uint64_t> keys;
  keys.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != d) throw Error(Errc::DimensionMismatch, "point has wrong dimension");
    for (Fe c : p)
      if (!field->contains(c)) throw Error(Errc::CoordinateOutOfRange, "coordinate " + std::to_string(c.v));
    keys.push_back(pack_point(p, field->q()));
  }
  const std::size_t before = keys.size();
  PointSet s = from_keys(std::move(field), d, std::move(keys));
  if (removed) *removed = before - s.size();
  return s;
}

PointSet PointSet::all_points(FieldPtr field, unsigned d) {
  const std::uint64_t total = space_size(field->q(), d);
  std::vector<std::uint64_t> keys(total);
  std::iota(keys.begin(), keys.end(), std::uint64_t{0});
  return from_keys(std::move(field), d, std::move(keys));
}

PointSet PointSet::random(FieldPtr field, unsigned d, std::uint64_t n, Rng& rng, bool exclude_origin) {
  const std::uint64_t total = space_size(field->q(), d);
  const std::uint64_t offset = exclude_origin ? 1 : 0;
  const std::uint64_t pool = total - offset;
  if (n > pool) throw Error(Errc::TooLarge, "cannot draw " + std::to_string(n) + " distinct points from " + std::to_string(pool));
  std::vector<std::uint64_t> keys;
  keys.reserve(n);
  if (pool <= (std::uint64_t{1} << 26)) {
    // Partial Fisher-Yates over the whole pool.
    std::vector<std::uint32_t> slots(pool);
    std::iota(slots.begin(), slots.end(), 0u);
    for (std::uint64_t i = 0; i < n; ++i) {
      const std::uint64_t j = i + rng.below(pool - i);
      std::swap(slots[i], slots[j]);
      keys.push_back(slots[i] + offset);
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (keys.size() < n) {
      const std::uint64_t key = rng.below(pool) + offset;
      if (seen.insert(key).second) keys.push_back(key);
    }
  }
  return from_keys(std::move(field), d, std::move(keys));
}

std::optional<std::size_t> PointSet::index_of(std::span<const Fe> p) const {
  if (p.size() != d_) return std::nullopt;
  for (Fe c : p)
    if (!field_->contains(c)) return std::nullopt;
  const std::uint64_t key = pack_point(p, field_->q());
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

PointSet PointSet::translated(std::span<const Fe> v) const {
  if (v.size() != d_) throw Error(Errc::DimensionMismatch, "translation has wrong dimension");
  std::vector<Point> pts;
  pts.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    Point p = point(i);
    for (unsigned j = 0; j < d_; ++j) p[j] = field_->add(p[j], v[j]);
    pts.push_back(std::move(p));
  }
  return from_points(field_, d_, pts);
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<std::uint64_t> keys;
  keys.reserve(indices.size());
  for (auto i : indices) keys.push_back(keys_.at(i));
  return from_keys(field_, d_, std::move(keys));
}

std::vector<Point> PointSet::to_points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

}  // namespace ffgeom
