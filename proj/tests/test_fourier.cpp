#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ffgeom/fourier.hpp"
#include "ffgeom/oracle.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// chi(x) evaluated from scratch: trace by repeated Frobenius, then the root of unity.
std::complex<double> chi_direct(const Field& f, Fe x) {
  Fe tr = x, frob = x;
  for (std::uint32_t i = 1; i < f.k(); ++i) {
    frob = f.pow(frob, f.p());
    tr = f.add(tr, frob);
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * tr.v / f.p());
}

std::complex<double> fhat_direct(const PointSet& F, Fe xi1, Fe xi2) {
  const Field& f = F.field();
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const Fe dot = f.add(f.mul(xi1, F[i][0]), f.mul(xi2, F[i][1]));
    s += chi_direct(f, f.neg(dot));
  }
  const double q = f.q();
  return s / (q * q);
}

}  // namespace

TEST_CASE("fourier_transform examples") {
  auto f3 = gf(3);
  auto origin = fourier_transform(set_of(f3, {{0, 0}}));
  for (auto v : origin.values) CHECK(std::abs(v - std::complex<double>(1.0 / 9, 0)) < 1e-12);

  auto empty = fourier_transform(PointSet(f3, 2));
  for (auto v : empty.values) CHECK(std::abs(v) < 1e-15);

  auto single = fourier_transform(set_of(f3, {{1, 0}}));
  CharacterTable chi(*f3);
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      CHECK(std::abs(single.at(Fe{a}, Fe{b}) - chi(f3->neg(Fe{a})) / 9.0) < 1e-12);
  CHECK(std::abs(single.plancherel_sum() - 1.0 / 9) < 1e-9);
}

TEST_CASE("fourier_transform equals direct evaluation; Plancherel and inversion") {
  Rng rng(100);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    auto f = gf(p, k);
    const std::uint32_t q = f->q();
    CharacterTable chi(*f);
    for (int trial = 0; trial < 25; ++trial) {
      auto F = random_set(f, 2, 0, q * q, rng);
      auto table = fourier_transform(F, chi);
      REQUIRE(std::abs(table.at(Fe{0}, Fe{0}).real() - double(F.size()) / (q * q)) < 1e-12);
      REQUIRE(std::abs(table.plancherel_sum() - double(F.size()) / (q * q)) < 1e-9);
      for (int s = 0; s < 5; ++s) {
        const Fe a{static_cast<std::uint32_t>(rng.below(q))}, b{static_cast<std::uint32_t>(rng.below(q))};
        REQUIRE(std::abs(table.at(a, b) - fhat_direct(F, a, b)) < 1e-9);
      }
      auto back = inverse_transform(table, *f, chi);
      for (std::uint64_t key = 0; key < std::uint64_t{q} * q; ++key) {
        const double expect = F.contains(unpack_point(key, q, 2)) ? 1.0 : 0.0;
        REQUIRE(std::abs(back[key] - expect) < 1e-9);
      }
    }
  }
}

TEST_CASE("dot_spectrum examples") {
  auto f3 = gf(3);
  auto all = PointSet::all_points(f3, 2);
  auto punctured = all.subset({1, 2, 3, 4, 5, 6, 7, 8});
  REQUIRE_FALSE(punctured.contains(pt({0, 0})));
  auto s = dot_spectrum(punctured, punctured);
  CHECK(s.counts == std::vector<std::uint64_t>{16, 24, 24});
  CHECK(s.energy == 1408);
  CHECK(s.total() == 64);

  auto none = dot_spectrum(PointSet(f3, 2), punctured);
  CHECK(none.counts == std::vector<std::uint64_t>{0, 0, 0});
  CHECK(none.energy == 0);

  try {
    dot_spectrum(punctured, PointSet::all_points(gf(5), 2));
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
}

TEST_CASE("dot_spectrum closed form on the punctured plane") {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto f = gf(q);
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i < std::size_t{q} * q; ++i) idx.push_back(i);
    auto F = PointSet::all_points(f, 2).subset(idx);
    auto s = dot_spectrum(F, F);
    CHECK(s.counts[0] == std::uint64_t{q - 1} * (q * q - 1));
    for (std::uint32_t t = 1; t < q; ++t) CHECK(s.counts[t] == std::uint64_t{q} * (q * q - 1));
  }
}

TEST_CASE("dot_spectrum equals the oracle and sums to |F||G|") {
  Rng rng(200);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {5, 1}, {2, 2}}) {
    auto f = gf(p, k);
    for (int trial = 0; trial < 60; ++trial) {
      const std::uint64_t cap = std::min<std::uint64_t>(10, f->q() * f->q());
      auto F = random_set(f, 2, 0, cap, rng);
      auto G = random_set(f, 2, 0, cap, rng);
      auto fast = dot_spectrum(F, G);
      auto slow = oracle::bf_dot_spectrum(F, G);
      REQUIRE(fast.counts == slow.counts);
      REQUIRE(fast.energy == slow.energy);
      REQUIRE(fast.total() == F.size() * G.size());
    }
  }
}

TEST_CASE("l2_bound_check examples") {
  auto f3 = gf(3);
  auto punctured = PointSet::all_points(f3, 2).subset({1, 2, 3, 4, 5, 6, 7, 8});
  auto r = l2_bound_check(punctured, punctured);
  CHECK(r.spectrum.energy == 1408);
  CHECK(r.bound_main == Rational(4096, 3));
  CHECK(r.bound_error_term == 384);
  CHECK(r.max_punctured == 2);
  CHECK(r.satisfied);

  try {
    l2_bound_check(PointSet::all_points(f3, 2), punctured);
    FAIL("expected OriginInF");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OriginInF);
  }
}

TEST_CASE("L2 estimate holds on seeded random pairs") {
  Rng rng(7);
  for (auto [p, k] : small_fields()) {
    auto f = gf(p, k);
    const std::uint32_t q = f->q();
    for (int trial = 0; trial < 40; ++trial) {
      auto F = random_set(f, 2, 0, q * q - 1, rng, true);
      auto G = random_set(f, 2, 0, q * q, rng);
      auto r = l2_bound_check(F, G);
      REQUIRE(r.satisfied);
      REQUIRE(r.max_punctured <= q - 1);
      // Exact recheck of the verdict in 128-bit arithmetic.
      const unsigned __int128 fg = static_cast<unsigned __int128>(F.size()) * G.size();
      REQUIRE(r.spectrum.energy * q <= fg * fg + static_cast<unsigned __int128>(q) * q * fg * r.max_punctured);
    }
  }
}

TEST_CASE("max_punctured counts points of F on punctured lines through the origin") {
  Rng rng(3);
  auto f = gf(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto F = random_set(f, 2, 0, 48, rng, true);
    std::uint64_t best = 0;
    for (std::size_t i = 0; i < F.size(); ++i) {
      std::uint64_t on = 0;
      for (std::uint32_t s = 1; s < 7; ++s)
        on += F.contains(std::vector<Fe>{f->mul(Fe{s}, F[i][0]), f->mul(Fe{s}, F[i][1])});
      best = std::max(best, on);
    }
    REQUIRE(max_punctured(F) == best);
  }
}
