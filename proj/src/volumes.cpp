#include "ffgeom/volumes.hpp"

#include <algorithm>

#include "ffgeom/rng.hpp"

namespace ffgeom {

namespace {

std::uint64_t factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_tuple(std::span<const Point> tuple) {
  if (tuple.empty()) throw Error(Errc::DimensionMismatch, "empty tuple");
  const std::size_t d = tuple.size() - 1;
  for (const auto& p : tuple)
    if (p.size() != d) throw Error(Errc::DimensionMismatch, "need d+1 points of dimension d");
}

// det(p[0] - base, ..., p[d-1] - base) for coordinates laid out point-major.
// scratch must hold d*d elements.
Fe difference_det(const Field& f, const Fe* const* pts, const Fe* base, unsigned d, std::vector<Fe>& scratch) {
  if (d == 2) {
    const Fe a0 = f.sub(pts[0][0], base[0]), a1 = f.sub(pts[0][1], base[1]);
    const Fe b0 = f.sub(pts[1][0], base[0]), b1 = f.sub(pts[1][1], base[1]);
    return f.sub(f.mul(a0, b1), f.mul(b0, a1));
  }
  scratch.resize(static_cast<std::size_t>(d) * d);
  for (unsigned r = 0; r < d; ++r)
    for (unsigned c = 0; c < d; ++c) scratch[r * d + c] = f.sub(pts[c][r], base[r]);
  return determinant(f, scratch, d);
}

void credit(const Field& f, VolumeSpectrum& s, Fe v, std::uint64_t half) {
  if (v.v == 0) return;
  s.multiplicity[v.v] += half;
  s.multiplicity[f.neg(v).v] += half;
}

// Visits every m-subset of [0, n) as ascending index vectors.
template <typename Visit>
void for_each_combination(std::size_t n, unsigned m, Visit&& visit) {
  if (m > n) return;
  std::vector<std::size_t> idx(m);
  for (unsigned i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && idx[i] == n - m + static_cast<std::size_t>(i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 62) / base) throw Error(Errc::TooLarge, "tuple space exceeds 2^62");
    r *= base;
  }
  return r;
}

// Streams ordered m-tuples of E in a seeded order; det_of(tuple_indices) -> Fe.
template <typename DetOf>
void stream_tuples(VolumeSpectrum& s, std::size_t n, unsigned m, const SpectrumMode& mode, DetOf&& det_of) {
  s.exhaustive = false;
  if (n == 0) return;
  const std::uint64_t space = checked_power(n, m);
  const IndexPermutation perm(space, mode.seed);
  const std::uint64_t limit = std::min(space, mode.budget);
  std::vector<std::size_t> idx(m);
  std::size_t distinct = 0;
  std::uint64_t t = 0;
  while (t < limit && (mode.target == 0 || distinct < mode.target)) {
    std::uint64_t r = perm(t++);
    for (unsigned j = 0; j < m; ++j) {
      idx[j] = r % n;
      r /= n;
    }
    const Fe v = det_of(idx);
    if (v.v != 0 && s.multiplicity[v.v]++ == 0) ++distinct;
  }
  s.tuples_examined = t;
  s.exhaustive = t == space;
}

}  // namespace

Fe determinant(const Field& f, std::vector<Fe> a, std::size_t n) {
  bool negate = false;
  Fe det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].v == 0) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      negate = !negate;
    }
    const Fe p = a[col * n + col];
    det = f.mul(det, p);
    const Fe pinv = f.inv_unchecked(p);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Fe factor = f.mul(a[r * n + col], pinv);
      if (factor.v == 0) continue;
      for (std::size_t c = col; c < n; ++c)
        a[r * n + c] = f.sub(a[r * n + c], f.mul(factor, a[col * n + c]));
    }
  }
  return negate ? f.neg(det) : det;
}

Fe simplex_volume(const Field& f, std::span<const Point> tuple) {
  check_tuple(tuple);
  const std::size_t d = tuple.size() - 1;
  if (d == 0) return f.one();
  std::vector<Fe> m(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m[r * d + c] = f.sub(tuple[c][r], tuple[d][r]);
  return determinant(f, std::move(m), d);
}

Fe bordered_determinant(const Field& f, std::span<const Point> tuple) {
  check_tuple(tuple);
  const std::size_t n = tuple.size();
  std::vector<Fe> m(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    m[c] = f.one();
    for (std::size_t r = 1; r < n; ++r) m[r * n + c] = tuple[c][r - 1];
  }
  return determinant(f, std::move(m), n);
}

Fe bordered_sign(const Field& f, unsigned d) { return d % 2 == 0 ? f.one() : f.neg(f.one()); }

std::size_t VolumeSpectrum::distinct() const {
  return static_cast<std::size_t>(std::count_if(multiplicity.begin(), multiplicity.end(), [](auto m) { return m > 0; }));
}

std::vector<Fe> VolumeSpectrum::values() const {
  std::vector<Fe> out;
  for (std::uint32_t v = 0; v < multiplicity.size(); ++v)
    if (multiplicity[v] > 0) out.push_back(Fe{v});
  return out;
}

std::uint64_t VolumeSpectrum::total() const {
  std::uint64_t t = 0;
  for (auto m : multiplicity) t += m;
  return t;
}

VolumeSpectrum volume_spectrum(const PointSet& E, const SpectrumMode& mode) {
  const Field& f = E.field();
  const unsigned d = E.dim();
  VolumeSpectrum s;
  s.q = f.q();
  s.d = d;
  s.multiplicity.assign(f.q(), 0);
  std::vector<const Fe*> pts(d + 1);
  std::vector<Fe> scratch;
  auto det_of = [&](const std::vector<std::size_t>& idx) {
    for (unsigned j = 0; j <= d; ++j) pts[j] = E[idx[j]].data();
    return difference_det(f, pts.data(), pts[d], d, scratch);
  };
  if (!mode.exhaustive) {
    stream_tuples(s, E.size(), d + 1, mode, det_of);
    return s;
  }
  const std::uint64_t half = factorial(d + 1) / 2;
  for_each_combination(E.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    ++s.tuples_examined;
    credit(f, s, det_of(idx), half);
  });
  return s;
}

VolumeSpectrum pinned_spectrum(const PointSet& E, std::span<const Fe> z, const SpectrumMode& mode) {
  const auto zi = E.index_of(z);
  if (!zi) throw Error(Errc::PinNotInSet, "pin is not a point of the set");
  const Field& f = E.field();
  const unsigned d = E.dim();
  VolumeSpectrum s;
  s.q = f.q();
  s.d = d;
  s.pinned = Point(z.begin(), z.end());
  s.multiplicity.assign(f.q(), 0);
  std::vector<const Fe*> pts(d);
  std::vector<Fe> scratch;
  const Fe* base = E[*zi].data();
  if (!mode.exhaustive) {
    stream_tuples(s, E.size(), d, mode, [&](const std::vector<std::size_t>& idx) {
      for (unsigned j = 0; j < d; ++j) pts[j] = E[idx[j]].data();
      return difference_det(f, pts.data(), base, d, scratch);
    });
    return s;
  }
  // Tuples through z or with repeats vanish; walk d-subsets of E \ {z}.
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < E.size(); ++i)
    if (i != *zi) others.push_back(i);
  for_each_combination(others.size(), d, [&](const std::vector<std::size_t>& idx) {
    ++s.tuples_examined;
    for (unsigned j = 0; j < d; ++j) pts[j] = E[others[idx[j]]].data();
    const Fe v = difference_det(f, pts.data(), base, d, scratch);
    if (d == 1) {
      if (v.v != 0) s.multiplicity[v.v] += 1;
    } else {
      credit(f, s, v, factorial(d) / 2);
    }
  });
  return s;
}

SharedBaseWitness shared_base_witness(const PointSet& E, std::size_t threshold) {
  if (E.dim() != 2) throw Error(Errc::DimensionMismatch, "shared base witness is planar");
  if (E.size() < 2) throw Error(Errc::NoBase, "need at least two points for a base");
  const Field& f = E.field();
  std::vector<char> seen(f.q());
  std::vector<Fe> scratch;
  SharedBaseWitness best;
  bool have_best = false;
  for (std::size_t i = 0; i < E.size(); ++i) {
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      const Fe* pts[2] = {E[i].data(), E[j].data()};
      std::size_t count = 0;
      for (std::size_t x = 0; x < E.size(); ++x) {
        const Fe v = difference_det(f, pts, E[x].data(), 2, scratch);
        if (v.v != 0 && !seen[v.v]) {
          seen[v.v] = 1;
          ++count;
        }
      }
      if (!have_best || count > best.areas.size()) {
        have_best = true;
        best.e1 = E.point(i);
        best.e2 = E.point(j);
        best.areas.clear();
        for (std::uint32_t v = 1; v < f.q(); ++v)
          if (seen[v]) best.areas.push_back(Fe{v});
        best.met = count >= threshold;
        if (best.met) return best;
      }
    }
  }
  return best;
}

SliceReport hyperplane_slices(const PointSet& E) {
  const std::uint32_t q = E.field().q();
  const unsigned last = E.dim() - 1;
  SliceReport r;
  r.sizes.assign(q, 0);
  for (std::size_t i = 0; i < E.size(); ++i) ++r.sizes[E[i][last].v];
  for (std::uint32_t c = 0; c < q; ++c) {
    if (r.sizes[c] > r.max) {
      r.max = r.sizes[c];
      r.argmax = Fe{c};
    }
  }
  r.pigeonhole = (E.size() + q - 1) / q;
  r.pigeonhole_ok = r.max >= r.pigeonhole;
  return r;
}

SlicingWitness slicing_witness(const PointSet& E, const SpectrumMode& mode) {
  const unsigned d = E.dim();
  if (d < 2) throw Error(Errc::DimensionMismatch, "slicing needs d >= 2");
  const Field& f = E.field();
  SlicingWitness w;
  w.slices = hyperplane_slices(E);
  const Fe c = w.slices.argmax;
  std::vector<Point> slice_low, lifted;
  for (std::size_t i = 0; i < E.size(); ++i) {
    Point p = E.point(i);
    if (p[d - 1] == c) {
      p[d - 1] = f.zero();
      lifted.push_back(p);
      p.pop_back();
      slice_low.push_back(std::move(p));
    } else if (!w.z) {
      p[d - 1] = f.sub(p[d - 1], c);
      w.z = std::move(p);
    }
  }
  w.lower = volume_spectrum(PointSet::from_points(E.field_ptr(), d - 1, slice_low), mode);
  if (!w.z) return w;
  lifted.push_back(*w.z);
  w.pinned = pinned_spectrum(PointSet::from_points(E.field_ptr(), d, lifted), *w.z, mode);
  const Fe zd = (*w.z)[d - 1];
  w.contains_scaled = true;
  for (Fe v : w.lower.values())
    if (w.pinned.multiplicity[f.mul(zd, v).v] == 0) w.contains_scaled = false;
  return w;
}

}  // namespace ffgeom
