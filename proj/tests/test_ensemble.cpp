#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "streamsnap/ensemble.hpp"
#include "streamsnap/simulate.hpp"

using namespace streamsnap;

TEST_CASE("default targets are the deciles") {
  const TargetSet t;
  REQUIRE(t.size() == 9);
  for (std::size_t i = 0; i < 9; ++i)
    CHECK(t.fractions()[i] ==
          doctest::Approx(0.1 * static_cast<double>(i + 1)).epsilon(1e-14));
}

TEST_CASE("target fractions must be strictly increasing inside (0,1)") {
  CHECK_NOTHROW(TargetSet({0.25, 0.5, 0.75}));
  CHECK_THROWS_AS(TargetSet(std::vector<double>{}), std::domain_error);
  CHECK_THROWS_AS(TargetSet({0.0, 0.5}), std::domain_error);
  CHECK_THROWS_AS(TargetSet({0.5, 1.0}), std::domain_error);
  CHECK_THROWS_AS(TargetSet({0.5, 0.5}), std::domain_error);
  CHECK_THROWS_AS(TargetSet({0.7, 0.3}), std::domain_error);
}

TEST_CASE("quality is the worst normalized target distance") {
  const TargetSet deciles;
  // Positions exactly on every decile of n=100: quality 0.
  std::vector<std::uint64_t> exact;
  for (std::uint64_t k = 1; k <= 9; ++k) exact.push_back(10 * k);
  CHECK(quality_from_positions(exact, 100, deciles) == 0.0);
  // One member sitting at the midpoint: farthest targets are 0.1 and 0.9.
  const std::vector<std::uint64_t> mid{50};
  CHECK(quality_from_positions(mid, 100, deciles) ==
        doctest::Approx(0.4).epsilon(1e-13));
  // Normalization: same geometry at 10x the stream length.
  std::vector<std::uint64_t> exact10;
  for (std::uint64_t k = 1; k <= 9; ++k) exact10.push_back(100 * k);
  CHECK(quality_from_positions(exact10, 1000, deciles) == 0.0);
  const std::vector<std::uint64_t> mid10{500};
  CHECK(quality_from_positions(mid10, 1000, deciles) ==
        doctest::Approx(0.4).epsilon(1e-13));
}

TEST_CASE("quality rejects empty inputs") {
  const TargetSet deciles;
  const std::vector<std::uint64_t> pos{1};
  CHECK_THROWS_AS(quality_from_positions(pos, 0, deciles), std::domain_error);
  const std::vector<std::uint64_t> none;
  CHECK_THROWS_AS(quality_from_positions(none, 10, deciles),
                  std::domain_error);
}

TEST_CASE("coverage size closed form") {
  CHECK(coverage_size(0.01, 1e-10, 9) == 1249);
  CHECK(coverage_size(0.01, 1e-4, 9) == 565);
  // Generous radius: a single member suffices.
  CHECK(coverage_size(0.49, 0.99, 1) == 1);
  // Tighter failure budgets can only demand more members.
  std::uint64_t prev = 0;
  for (const double eta : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
    const std::uint64_t m = coverage_size(0.01, eta, 9);
    CHECK(m >= prev);
    prev = m;
  }
}

TEST_CASE("coverage size validates its domain") {
  CHECK_THROWS_AS(coverage_size(0.0, 0.5, 9), std::domain_error);
  CHECK_THROWS_AS(coverage_size(0.5, 0.5, 9), std::domain_error);
  CHECK_THROWS_AS(coverage_size(0.01, 0.0, 9), std::domain_error);
  CHECK_THROWS_AS(coverage_size(0.01, 1.0, 9), std::domain_error);
  CHECK_THROWS_AS(coverage_size(0.01, 0.5, 0), std::domain_error);
}

TEST_CASE("first item fills every member") {
  Ensemble<std::uint64_t> e(Schedule::power_law(0.5, 1.0), 3, 17);
  CHECK(e.seen() == 0);
  e.update(7);
  CHECK(e.seen() == 1);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(e.member(j).age == 1);
    CHECK(e.member(j).payload.value() == 7);
    CHECK(e.member(j).position() == 1);
  }
}

TEST_CASE("update, run, and serial paths agree item for item") {
  const Schedule s = Schedule::power_law(1.0, 0.5);
  std::vector<std::uint64_t> items(2048);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = i + 1;

  Ensemble<std::uint64_t> by_update(s, 64, 31);
  for (const auto v : items) by_update.update(v);
  Ensemble<std::uint64_t> by_run(s, 64, 31);
  by_run.run(items);
  Ensemble<std::uint64_t> by_serial(s, 64, 31);
  by_serial.run_serial(items);

  CHECK(by_update.positions() == by_run.positions());
  CHECK(by_run.positions() == by_serial.positions());
  for (std::size_t j = 0; j < 64; ++j) {
    CHECK(by_run.member(j).payload.value() ==
          by_serial.member(j).payload.value());
    // Retained payload is the item at the retained position.
    CHECK(by_run.member(j).payload.value() == by_run.member(j).position());
  }
}

TEST_CASE("ensemble runs reproduce by seed") {
  std::vector<std::uint64_t> items(500);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = i;
  Ensemble<std::uint64_t> a(Schedule::uniform(), 32, 5);
  a.run(items);
  Ensemble<std::uint64_t> b(Schedule::uniform(), 32, 5);
  b.run(items);
  CHECK(a.positions() == b.positions());
  Ensemble<std::uint64_t> c(Schedule::uniform(), 32, 6);
  c.run(items);
  CHECK(a.positions() != c.positions());
}

TEST_CASE("ensemble members match the standalone position kernel") {
  std::vector<std::uint64_t> items(1000);
  for (std::size_t i = 0; i < items.size(); ++i) items[i] = i + 1;
  Ensemble<std::uint64_t> e(Schedule::power_law(2.0, 1.0), 40, 88);
  e.run(items);
  CHECK(e.positions() ==
        terminal_positions(Schedule::power_law(2.0, 1.0), 1000, 40, 88));
}

TEST_CASE("ensemble needs a member and a position needs an item") {
  CHECK_THROWS_AS(Ensemble<int>(Schedule::uniform(), 0, 1),
                  std::domain_error);
  Ensemble<int> e(Schedule::uniform(), 2, 1);
  CHECK_THROWS_AS(e.member(0).position(), std::domain_error);
  CHECK_THROWS_AS(e.quality(TargetSet()), std::domain_error);
}
