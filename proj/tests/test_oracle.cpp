#include <doctest.h>

#include <filesystem>
#include <map>

#include "ffgeom/oracle.hpp"
#include "support.hpp"

using namespace testing;
namespace fs = std::filesystem;

TEST_CASE("oracle examples") {
  auto f3 = gf(3);
  auto full = oracle::bf_volume_spectrum(PointSet::all_points(f3, 2));
  CHECK(full.values() == std::vector<Fe>{Fe{1}, Fe{2}});
  CHECK(oracle::bf_volume_spectrum(set_of(f3, {{0, 0}, {1, 1}, {2, 2}})).distinct() == 0);

  auto punctured = PointSet::all_points(f3, 2).subset({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(oracle::bf_dot_spectrum(punctured, punctured).counts == std::vector<std::uint64_t>{16, 24, 24});

  auto lines = oracle::bf_spanned_lines(set_of(f3, {{0, 2}, {1, 0}}));
  CHECK(lines.size() == 1);
  CHECK(lines.begin()->second == 2);
}

TEST_CASE("oracle guards") {
  auto f = gf(31);
  try {
    oracle::bf_volume_spectrum(PointSet::all_points(f, 2));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK_THROWS_AS(oracle::bf_pinned_spectrum(set_of(f, {{0, 0}}), pt({1, 1})), Error);
}

TEST_CASE("spanned_lines equals the oracle for q <= 5, |E| <= 8") {
  Rng rng(200);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = gf(p, k);
    for (int i = 0; i < 50; ++i) {
      auto E = random_set(f, 2, 2, std::min<std::uint64_t>(8, f->q() * f->q()), rng);
      std::map<std::uint32_t, std::uint32_t> fast;
      for (auto& lr : spanned_lines(E)) fast[lr.line.id(f->q())] = lr.richness;
      REQUIRE(fast == oracle::bf_spanned_lines(E));
    }
  }
}

TEST_CASE("binomial and colex unranking") {
  CHECK(oracle::binomial(9, 4) == 126);
  CHECK(oracle::binomial(25, 6) == 177100);
  CHECK(oracle::binomial(3, 5) == 0);
  CHECK(oracle::binomial(1000000, 500000) == UINT64_MAX);
  CHECK(oracle::unrank_colex(0, 3) == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(oracle::unrank_colex(1, 3) == std::vector<std::uint64_t>{0, 1, 3});
  // Colex: {0,1,2} {0,1,3} {0,2,3} {1,2,3} {0,1,4} ...
  CHECK(oracle::unrank_colex(2, 3) == std::vector<std::uint64_t>{0, 2, 3});
  CHECK(oracle::unrank_colex(3, 3) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(oracle::unrank_colex(4, 3) == std::vector<std::uint64_t>{0, 1, 4});
  for (std::uint64_t r = 0; r < 200; ++r) {
    auto c = oracle::unrank_colex(r, 4);
    std::uint64_t back = 0;
    for (std::uint64_t i = 0; i < 4; ++i) back += oracle::binomial(c[i], i + 1);
    REQUIRE(back == r);
  }
}

TEST_CASE("sweep examples") {
  auto f3 = gf(3);
  auto t = oracle::exhaustive_theorem_sweep(f3, 4, oracle::SweepProperty::Theorem1i);
  CHECK(t.total == 126);
  CHECK(t.examined == 126);
  CHECK(t.failure_count == 0);
  CHECK(t.held());
  CHECK(t.exhaustive);

  auto d = oracle::exhaustive_theorem_sweep(f3, 3, oracle::SweepProperty::DirectionCoverage);
  CHECK(d.total == 84);
  CHECK(d.failure_count > 0);
  REQUIRE_FALSE(d.failures.empty());
  // First failing subset in colex order is the collinear triple {(0,0),(1,0),(2,0)}.
  CHECK(d.failures[0].rank == 0);
  CHECK(d.failures[0].points == std::vector<Point>{pt({0, 0}), pt({1, 0}), pt({2, 0})});

  CHECK_THROWS_AS(oracle::exhaustive_theorem_sweep(gf(7), 6, oracle::SweepProperty::Theorem1i), Error);
}

TEST_CASE("all_areas counts match an independent count") {
  auto f3 = gf(3);
  auto r = oracle::exhaustive_theorem_sweep(f3, 4, oracle::SweepProperty::AllAreas);
  CHECK(r.held());
  auto all = PointSet::all_points(f3, 2);
  std::uint64_t achieved = 0;
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = a + 1; b < 9; ++b)
      for (std::size_t c = b + 1; c < 9; ++c)
        for (std::size_t d = c + 1; d < 9; ++d)
          achieved += oracle::bf_volume_spectrum(all.subset({a, b, c, d})).distinct() == 2;
  CHECK(r.achieved == achieved);
}

TEST_CASE("sweeps do not depend on workers") {
  auto f = gf(3);
  oracle::SweepOptions one, four;
  one.checkpoint_every = four.checkpoint_every = 7;
  four.workers = 4;
  auto a = oracle::exhaustive_theorem_sweep(f, 3, oracle::SweepProperty::DirectionCoverage, one);
  auto b = oracle::exhaustive_theorem_sweep(f, 3, oracle::SweepProperty::DirectionCoverage, four);
  CHECK(a.failure_count == b.failure_count);
  REQUIRE(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i].rank == b.failures[i].rank);
}

TEST_CASE("interrupted sweeps resume to the identical result") {
  const fs::path dir = fs::temp_directory_path() / "ffgeom_sweep_resume_test";
  fs::remove_all(dir);
  auto f = gf(3);
  for (std::uint64_t samples : {0ull, 300ull}) {
    oracle::SweepOptions straight;
    straight.samples = samples;
    straight.seed = 9;
    straight.checkpoint_every = 10;
    auto reference = oracle::exhaustive_theorem_sweep(f, 3, oracle::SweepProperty::DirectionCoverage, straight);

    oracle::SweepOptions part = straight;
    part.checkpoint_dir = dir;
    part.stop_after = 25;
    auto first = oracle::exhaustive_theorem_sweep(f, 3, oracle::SweepProperty::DirectionCoverage, part);
    CHECK_FALSE(first.complete());
    CHECK(fs::exists(dir / "sweep.direction_coverage.3.3.ckpt"));
    part.stop_after.reset();
    auto resumed = oracle::exhaustive_theorem_sweep(f, 3, oracle::SweepProperty::DirectionCoverage, part);
    CHECK(resumed.complete());
    CHECK(resumed.examined == reference.examined);
    CHECK(resumed.failure_count == reference.failure_count);
    REQUIRE(resumed.failures.size() == reference.failures.size());
    for (std::size_t i = 0; i < reference.failures.size(); ++i) {
      CHECK(resumed.failures[i].rank == reference.failures[i].rank);
      CHECK(resumed.failures[i].points == reference.failures[i].points);
    }
    fs::remove_all(dir);
  }
}

TEST_CASE("sampled sweeps are seeded") {
  auto f = gf(7);
  oracle::SweepOptions o;
  o.samples = 50;
  o.seed = 3;
  auto a = oracle::exhaustive_theorem_sweep(f, 8, oracle::SweepProperty::Theorem1i, o);
  auto b = oracle::exhaustive_theorem_sweep(f, 8, oracle::SweepProperty::Theorem1i, o);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.total == 50);
  CHECK(a.held());
  CHECK(a.achieved == b.achieved);
  CHECK(oracle::parse_property(oracle::property_name(oracle::SweepProperty::AllAreas)) == oracle::SweepProperty::AllAreas);
  CHECK_THROWS_AS(oracle::parse_property("bogus"), Error);
}
