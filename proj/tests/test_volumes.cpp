#include <doctest.h>

#include <set>

#include "ffgeom/oracle.hpp"
#include "ffgeom/volumes.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::vector<Point> random_tuple(const Field& f, unsigned d, Rng& rng) {
  std::vector<Point> t(d + 1, Point(d));
  for (auto& p : t)
    for (auto& c : p) c = Fe{static_cast<std::uint32_t>(rng.below(f.q()))};
  return t;
}

std::set<std::uint32_t> value_set(const VolumeSpectrum& s) {
  std::set<std::uint32_t> out;
  for (auto v : s.values()) out.insert(v.v);
  return out;
}

}  // namespace

TEST_CASE("simplex_volume examples") {
  auto f3 = gf(3), f5 = gf(5), f7 = gf(7);
  std::vector<Point> unit{pt({0, 0}), pt({1, 0}), pt({0, 1})};
  CHECK(simplex_volume(*f3, unit) == Fe{1});
  std::vector<Point> collinear{pt({0, 0}), pt({1, 2}), pt({2, 4})};
  CHECK(simplex_volume(*f5, collinear) == Fe{0});
  std::vector<Point> t7{pt({2, 3}), pt({5, 1}), pt({0, 0})};
  CHECK(simplex_volume(*f7, t7) == Fe{1});
  CHECK(bordered_determinant(*f7, t7) == Fe{1});

  std::vector<Point> bad{pt({0, 0}), pt({1, 0, 0}), pt({0, 1})};
  try {
    simplex_volume(*f3, bad);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
  std::vector<Point> short_tuple{pt({0, 0}), pt({1, 0})};
  CHECK_THROWS_AS(bordered_determinant(*f3, short_tuple), Error);
}

TEST_CASE("bordered_determinant examples and sign relation") {
  auto f3 = gf(3);
  std::vector<Point> unit{pt({0, 0}), pt({1, 0}), pt({0, 1})};
  CHECK(bordered_determinant(*f3, unit) == Fe{1});
  std::vector<Point> repeat{pt({1, 2}), pt({0, 1}), pt({1, 2})};
  CHECK(bordered_determinant(*f3, repeat) == Fe{0});

  Rng rng(1000);
  for (unsigned d : {2u, 3u, 4u}) {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
      auto f = gf(p, k);
      const Fe sign = bordered_sign(*f, d);
      for (int i = 0; i < 300; ++i) {
        auto t = random_tuple(*f, d, rng);
        const Fe simplex = simplex_volume(*f, t);
        const Fe bordered = bordered_determinant(*f, t);
        REQUIRE(bordered == f->mul(sign, simplex));
        if (d % 2 == 0) REQUIRE(bordered == simplex);
      }
    }
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  auto f = gf(3, 2);
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    std::vector<Fe> m(9);
    for (auto& x : m) x = Fe{static_cast<std::uint32_t>(rng.below(9))};
    auto at = [&](int r, int c) { return m[r * 3 + c]; };
    auto minor = [&](int r0, int c0, int r1, int c1) {
      return f->sub(f->mul(at(r0, c0), at(r1, c1)), f->mul(at(r0, c1), at(r1, c0)));
    };
    Fe expect = f->mul(at(0, 0), minor(1, 1, 2, 2));
    expect = f->sub(expect, f->mul(at(0, 1), minor(1, 0, 2, 2)));
    expect = f->add(expect, f->mul(at(0, 2), minor(1, 0, 2, 1)));
    REQUIRE(determinant(*f, m, 3) == expect);
  }
}

TEST_CASE("antisymmetry: swapping two points negates the volume") {
  Rng rng(12);
  for (unsigned d : {2u, 3u}) {
    auto f = gf(7);
    for (int i = 0; i < 300; ++i) {
      auto t = random_tuple(*f, d, rng);
      const Fe v = simplex_volume(*f, t);
      const std::size_t a = rng.below(d + 1), b = rng.below(d + 1);
      if (a == b) continue;
      std::swap(t[a], t[b]);
      REQUIRE(simplex_volume(*f, t) == f->neg(v));
    }
  }
}

TEST_CASE("volume_spectrum examples") {
  auto f3 = gf(3);
  auto full = volume_spectrum(PointSet::all_points(f3, 2));
  CHECK(value_set(full) == std::set<std::uint32_t>{1, 2});
  CHECK(full.exhaustive);
  // 72 non-collinear unordered triples, 6 orderings each.
  CHECK(full.total() == 432);
  CHECK(full.multiplicity[1] == 216);
  CHECK(full.multiplicity[2] == 216);
  CHECK(full.multiplicity[0] == 0);

  auto f5 = gf(5);
  CHECK(volume_spectrum(set_of(f5, {{0, 0}, {1, 2}, {2, 4}, {3, 1}})).distinct() == 0);

  auto square = volume_spectrum(set_of(f3, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(value_set(square) == std::set<std::uint32_t>{1, 2});

  CHECK(volume_spectrum(set_of(f3, {{0, 0}, {1, 0}})).distinct() == 0);
}

TEST_CASE("exhaustive spectra equal the brute-force oracle") {
  Rng rng(50);
  for (unsigned d : {2u, 3u}) {
    for (std::uint32_t p : {3u, 5u}) {
      auto f = gf(p);
      for (int i = 0; i < 25; ++i) {
        auto E = random_set(f, d, 0, 8, rng);
        auto fast = volume_spectrum(E);
        auto slow = oracle::bf_volume_spectrum(E);
        REQUIRE(fast.multiplicity == slow.multiplicity);
        if (!E.empty()) {
          const Point z = E.point(rng.below(E.size()));
          REQUIRE(pinned_spectrum(E, z).multiplicity == oracle::bf_pinned_spectrum(E, z).multiplicity);
        }
      }
    }
  }
}

TEST_CASE("early exit stops at the target and never invents values") {
  auto f = gf(11);
  Rng rng(3);
  auto E = PointSet::random(f, 2, 30, rng);
  auto full = volume_spectrum(E);
  auto early = volume_spectrum(E, SpectrumMode::early(5, 42));
  CHECK_FALSE(early.exhaustive);
  CHECK(early.distinct() == 5);
  for (std::uint32_t v = 0; v < 11; ++v) CHECK(early.multiplicity[v] <= full.multiplicity[v]);
  auto again = volume_spectrum(E, SpectrumMode::early(5, 42));
  CHECK(again.multiplicity == early.multiplicity);
  CHECK(again.tuples_examined == early.tuples_examined);

  // Unreachable target: the whole ordered tuple space is streamed.
  auto all = volume_spectrum(E, SpectrumMode::early(100, 1));
  CHECK(all.exhaustive);
  CHECK(all.multiplicity == full.multiplicity);

  auto capped = volume_spectrum(E, SpectrumMode::early(100, 1, 50));
  CHECK(capped.tuples_examined == 50);
  CHECK_FALSE(capped.exhaustive);
}

TEST_CASE("pinned_spectrum examples") {
  auto f3 = gf(3);
  auto tri = pinned_spectrum(set_of(f3, {{0, 0}, {1, 0}, {0, 1}}), pt({0, 0}));
  CHECK(value_set(tri) == std::set<std::uint32_t>{1, 2});
  CHECK(tri.multiplicity[1] == 1);
  CHECK(tri.multiplicity[2] == 1);
  CHECK(tri.pinned == pt({0, 0}));

  auto f5 = gf(5);
  auto line = pinned_spectrum(set_of(f5, {{0, 0}, {1, 1}, {2, 2}, {4, 4}}), pt({1, 1}));
  CHECK(line.distinct() == 0);

  auto plane = pinned_spectrum(PointSet::all_points(f5, 2), pt({0, 0}));
  CHECK(value_set(plane) == std::set<std::uint32_t>{1, 2, 3, 4});

  try {
    pinned_spectrum(set_of(f5, {{0, 0}, {1, 1}}), pt({2, 2}));
    FAIL("expected PinNotInSet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PinNotInSet);
  }
}

TEST_CASE("translation invariance of the value set") {
  Rng rng(77);
  for (unsigned d : {2u, 3u}) {
    auto f = gf(5);
    for (int i = 0; i < 30; ++i) {
      auto E = random_set(f, d, d + 1, 9, rng);
      Point v(d);
      for (auto& c : v) c = Fe{static_cast<std::uint32_t>(rng.below(5))};
      REQUIRE(value_set(volume_spectrum(E)) == value_set(volume_spectrum(E.translated(v))));
    }
  }
}

TEST_CASE("shared_base_witness examples") {
  auto f3 = gf(3);
  auto w = shared_base_witness(PointSet::all_points(f3, 2), 1);
  CHECK(w.e1 == pt({0, 0}));
  CHECK(w.e2 == pt({1, 0}));
  CHECK(w.areas == std::vector<Fe>{Fe{1}, Fe{2}});
  CHECK(w.met);

  auto f5 = gf(5);
  auto line = shared_base_witness(set_of(f5, {{0, 1}, {1, 2}, {2, 3}}), 1);
  CHECK(line.areas.empty());
  CHECK_FALSE(line.met);

  try {
    shared_base_witness(set_of(f5, {{0, 1}}), 1);
    FAIL("expected NoBase");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoBase);
  }
}

TEST_CASE("shared-base witness areas are realized by third points") {
  Rng rng(9);
  auto f = gf(7);
  for (int i = 0; i < 50; ++i) {
    auto E = PointSet::random(f, 2, 8, rng);
    auto w = shared_base_witness(E, 3);
    REQUIRE(w.e1 != w.e2);
    REQUIRE(w.areas.size() >= 3);
    for (Fe a : w.areas) {
      bool realized = false;
      for (std::size_t x = 0; x < E.size(); ++x) {
        const Point px = E.point(x);
        std::vector<Fe> m{f->sub(w.e1[0], px[0]), f->sub(w.e1[1], px[1]), f->sub(w.e2[0], px[0]), f->sub(w.e2[1], px[1])};
        realized |= determinant(*f, m, 2) == a;
      }
      REQUIRE(realized);
    }
  }
}

TEST_CASE("area lower bound with a shared base for |E| = q + 1") {
  Rng rng(200);
  for (auto [p, k] : small_fields()) {
    auto f = gf(p, k);
    const std::uint32_t q = f->q();
    for (int i = 0; i < 40; ++i) {
      auto E = PointSet::random(f, 2, q + 1, rng);
      auto w = shared_base_witness(E, (q - 1) / 2);
      REQUIRE(w.met);
      REQUIRE(2 * volume_spectrum(E).distinct() >= q - 1);
    }
  }
}

TEST_CASE("hyperplane_slices examples") {
  auto f3 = gf(3);
  Rng rng(10);
  auto E = PointSet::random(f3, 3, 10, rng);
  auto s = hyperplane_slices(E);
  CHECK(s.max >= 4);
  CHECK(s.pigeonhole == 4);
  CHECK(s.pigeonhole_ok);

  auto flat = set_of(f3, {{0, 0, 0}, {1, 2, 0}, {2, 2, 0}}, 3);
  auto fs = hyperplane_slices(flat);
  CHECK(fs.sizes == std::vector<std::uint64_t>{3, 0, 0});
  CHECK(fs.argmax == Fe{0});

  auto all = hyperplane_slices(PointSet::all_points(f3, 3));
  CHECK(all.sizes == std::vector<std::uint64_t>{9, 9, 9});
}

TEST_CASE("restriction monotonicity through the slicing witness") {
  Rng rng(31);
  for (auto [d, p] : std::vector<std::pair<unsigned, std::uint32_t>>{{3, 3}, {3, 5}, {4, 3}}) {
    auto f = gf(p);
    for (int i = 0; i < 20; ++i) {
      auto E = random_set(f, d, 2, 2 * p * p, rng);
      auto w = slicing_witness(E);
      if (!w.z) continue;
      REQUIRE(w.contains_scaled);
      const Fe zd = w.z->back();
      for (Fe v : w.lower.values()) REQUIRE(w.pinned.multiplicity[f->mul(zd, v).v] > 0);
    }
  }
}

TEST_CASE("all nonzero volumes at |E| = 2 q^(d-1)") {
  Rng rng(7);
  for (auto [d, p] : std::vector<std::pair<unsigned, std::uint32_t>>{{3, 3}, {3, 5}, {4, 3}}) {
    auto f = gf(p);
    std::uint64_t n = 2;
    for (unsigned i = 1; i < d; ++i) n *= p;
    for (int i = 0; i < 10; ++i) {
      auto E = PointSet::random(f, d, n, rng);
      REQUIRE(volume_spectrum(E, SpectrumMode::early(p - 1, i)).distinct() == p - 1);
    }
  }
}
