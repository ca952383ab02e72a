#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wilfkit/error.hpp"
#include "wilfkit/lattice.hpp"

using namespace wilfkit;

namespace {

WeightVector g(std::string_view list) { return WeightVector::parse(list); }

WeightVector random_gamma(std::mt19937_64& rng, std::size_t d, std::int64_t max_part) {
  std::uniform_int_distribution<std::int64_t> part(1, max_part);
  std::vector<Rational> entries;
  for (std::size_t i = 0; i < d; ++i) entries.push_back(make_rational(part(rng), part(rng)));
  return WeightVector(std::move(entries));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no wilfkit::Error thrown");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("WeightVector scales to a common denominator") {
  const auto w = g("3/2,13/8");
  CHECK(w.dim() == 2);
  CHECK(w.denominator() == 8);
  CHECK(w.scaled() == std::vector<std::int64_t>{12, 13});
  CHECK(g("12/8,13/8").entries() == w.entries());
  CHECK(g("1,2,3").is_integral());
  CHECK(code_of([] { g("1,0"); }) == ErrorCode::InvalidWeight);
  CHECK(code_of([] { g("1,-2/3"); }) == ErrorCode::InvalidWeight);
  CHECK(code_of([] { WeightVector(std::vector<Rational>{}); }) == ErrorCode::InvalidWeight);
}

TEST_CASE("strip_index") {
  const auto w = g("3/2,13/8");
  CHECK(strip_index(std::vector<std::int64_t>{0, 0}, w) == 0);
  CHECK(strip_index(std::vector<std::int64_t>{1, 1}, w) == 3);
  CHECK(strip_index(std::vector<std::int64_t>{0, 3}, w) == 4);
  CHECK(code_of([&] { strip_index(std::vector<std::int64_t>{1, 2, 3}, w); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("enumerate_delta") {
  const auto unit = enumerate_delta(g("1,1"), 1);
  CHECK(unit.points() == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(enumerate_delta(g("3/2,13/8"), 4).size() == 10);
  CHECK(enumerate_delta(g("1,2,3"), 5).size() == 16);
  CHECK(enumerate_delta(g("5"), 0).size() == 1);
  CHECK(code_of([] { enumerate_delta(g("1,1"), -1); }) == ErrorCode::InvalidN);
  CHECK(code_of([] { enumerate_delta(g("1/12,1/12,1/12"), 20, 1000); }) == ErrorCode::TooLarge);
}

TEST_CASE("enumerate_delta agrees with a bounding-box scan") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const auto w = random_gamma(rng, d, 6);
    const std::int64_t n = trial % 7;
    const auto set = enumerate_delta(w, n);
    CAPTURE(trial);
    CHECK(set.points() == oracle::delta_points(w.entries(), n));
    CHECK(set.is_downward_closed());
  }
}

TEST_CASE("strip_counts") {
  CHECK(strip_counts(g("3/2,13/8"), 4).counts == std::vector<std::uint64_t>{1, 2, 0, 3, 4});
  CHECK(strip_counts(g("1,1"), 3).counts == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(strip_counts(g("1,2,3"), 5).counts == std::vector<std::uint64_t>{1, 1, 2, 3, 4, 5});
}

TEST_CASE("strip_counts from the spectrum equals per-point floors of the enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const auto w = random_gamma(rng, d, 9);
    const std::int64_t n = 1 + trial % 9;
    const auto hist = strip_counts(w, n);
    std::vector<std::uint64_t> expected(static_cast<std::size_t>(n + 1), 0);
    Rational floor_sum = 0;
    const auto pts = oracle::delta_points(w.entries(), n);
    for (const auto& p : pts) {
      Rational weight = 0;
      for (std::size_t i = 0; i < d; ++i) weight += w.entries()[i] * p[i];
      const auto j = floor_of(weight).convert_to<std::size_t>();
      ++expected[j];
      floor_sum += j;
    }
    CAPTURE(trial);
    CHECK(hist.counts == expected);
    CHECK(hist.total() == pts.size());
    // The two forms of h(n, gamma).
    CHECK(h_ratio(w, n) == floor_sum / (Rational(n) * pts.size()));
  }
}

TEST_CASE("h_ratio") {
  CHECK(h_ratio(g("3/2,13/8"), 4) == make_rational(27, 40));
  CHECK(h_ratio(g("12/8,13/8"), 4) > make_rational(2, 3));
  for (std::int64_t n = 1; n <= 30; ++n) CHECK(h_ratio(g("1,1"), n) == make_rational(2, 3));
  CHECK(h_ratio(g("2,3"), 4) <= make_rational(2, 3));
  CHECK(code_of([] { h_ratio(g("1,1"), 0); }) == ErrorCode::InvalidN);
}

TEST_CASE("q_ratio") {
  CHECK(q_ratio(g("3/2,13/8"), 4) == make_rational(13, 40));
  CHECK(q_ratio(g("1,1"), 9) == make_rational(1, 3));
  CHECK(q_ratio(g("1"), 5) == make_rational(1, 2));
  CHECK(code_of([] { q_ratio(g("1"), 0); }) == ErrorCode::InvalidN);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = random_gamma(rng, 1 + trial % 3, 7);
    const std::int64_t n = 1 + trial % 11;
    CHECK(q_ratio(w, n) + h_ratio(w, n) == 1);
  }
}

TEST_CASE("mean_weight and max_weight") {
  const auto origin = Downset::from_points(3, {{0, 0, 0}});
  CHECK(mean_weight(origin, g("1,2,3")) == 0);
  CHECK(max_weight(origin, g("1,2,3")) == 0);

  const auto w = g("3/2,13/8");
  const auto delta = enumerate_delta(w, 4);
  CHECK(max_weight(delta, w) == make_rational(39, 8));
  // scaled weights 0,12,13,24,25,26,36,37,38,39 sum to 250
  CHECK(mean_weight(delta, w) == make_rational(250, 80));

  const auto tri = enumerate_delta(g("1,1"), 1);
  CHECK(mean_weight(tri, g("1,1")) == make_rational(2, 3));
  CHECK(max_weight(tri, g("1,1")) == 1);

  CHECK(code_of([] { mean_weight(Downset{}, g("1")); }) == ErrorCode::EmptySet);
  CHECK(code_of([] { max_weight(Downset{}, g("1")); }) == ErrorCode::EmptySet);
}

TEST_CASE("zhai_check") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = random_gamma(rng, 1 + trial % 3, 8);
    CHECK(zhai_check(enumerate_delta(w, trial % 10), w));
  }
  CHECK(zhai_check(Downset::from_points(2, {{0, 0}}), g("1,1")));
  CHECK(code_of([] { zhai_check(Downset{}, g("1")); }) == ErrorCode::EmptySet);
  CHECK(code_of([] { zhai_check(Downset::from_points(2, {{0, 0}, {1, 1}}), g("1,1")); }) ==
        ErrorCode::NotDownwardClosed);
  CHECK(code_of([] { zhai_check(Downset::from_points(2, {{0, 0}}), g("1")); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("zhai_check on 200 random downsets") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const auto w = random_gamma(rng, d, 12);
    const auto set = random_downset(1000 + static_cast<std::uint64_t>(trial), d, 6, 1 + trial % 60);
    CAPTURE(trial);
    REQUIRE(set.is_downward_closed());
    CHECK(zhai_check(set, w));
  }
}

TEST_CASE("Downset helpers") {
  const auto set = Downset::closure_of(2, std::vector<LatticePoint>{{2, 0}, {0, 1}, {1, 1}});
  CHECK(set.points() == std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}});
  CHECK(set.is_downward_closed());
  CHECK(set.maximal_points() == std::vector<LatticePoint>{{1, 1}, {2, 0}});
  CHECK(set.contains(std::vector<std::int64_t>{1, 1}));
  CHECK_FALSE(set.contains(std::vector<std::int64_t>{0, 2}));
  CHECK_FALSE(Downset::from_points(2, {{1, 0}}).is_downward_closed());
  CHECK(code_of([] { Downset::from_points(2, {{0}}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("count_delta_hat") {
  CHECK(count_delta_hat(g("1,1"), 1) == 4);
  CHECK(count_delta_hat(g("3/2,13/8"), 4) == 23);
  CHECK(count_delta_hat(g("1"), 2) == 6);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto w = random_gamma(rng, 1 + trial % 3, 10);
    const std::int64_t n = trial % 15;
    CHECK(count_delta_hat_direct(w, n) == count_delta_hat_from_strips(strip_counts(w, n)));
  }
}

TEST_CASE("each point of strip j carries n-j+1 cone points above it") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const auto w = random_gamma(rng, 1 + trial % 3, 9);
    const std::int64_t n = 3 + trial % 8;
    const auto pts = enumerate_delta(w, n).points();
    const auto& m = pts[static_cast<std::size_t>(trial) % pts.size()];
    const std::int64_t j = strip_index(m, w);
    std::int64_t fibre = 0;
    for (std::int64_t x0 = 0; x0 <= n + 1; ++x0) {
      if (Rational(x0) + w.weight(m) < n + 1) ++fibre;
    }
    CHECK(fibre == n - j + 1);
  }
}

TEST_CASE("volume_estimates") {
  const auto unit = volume_estimates(g("1,1"), 400);
  CHECK(unit.vol_limit == make_rational(1, 2));
  CHECK(std::abs(to_double(unit.vol_d) - 0.5) < 0.01);

  const auto v = volume_estimates(g("1,2,3"), 300);
  CHECK(v.vol_limit == make_rational(1, 36));
  CHECK(std::abs(to_double(v.vol_d - make_rational(1, 36))) < 0.01);
  CHECK(std::abs(to_double(v.cone_ratio) - 0.25) < 0.02);

  const auto r = volume_estimates(g("3/2,13/8"), 300);
  CHECK(std::abs(to_double(r.cone_ratio) - 1.0 / 3.0) < 0.02);
  CHECK(code_of([] { volume_estimates(g("1"), 0); }) == ErrorCode::InvalidN);
}

TEST_CASE("asymptotic_scan") {
  const auto rows = asymptotic_scan(g("1,1"), 40, 3);
  REQUIRE(rows.size() == 13);
  CHECK(rows.front().n == 3);
  CHECK(rows.back().n == 39);
  for (const auto& row : rows) {
    CHECK(row.h == make_rational(2, 3));
    CHECK(row.q == make_rational(1, 3));
  }

  const auto w = g("3/2,13/8");
  const auto scan = asymptotic_scan(w, 200, 10);
  CHECK(scan.back().n == 200);
  CHECK(std::abs(to_double(scan.back().h) - 2.0 / 3.0) < 0.02);
  // Rows match the direct computations.
  for (const auto& row : asymptotic_scan(w, 30, 1)) {
    CHECK(row.h == h_ratio(w, row.n));
    const auto delta = enumerate_delta(w, row.n);
    REQUIRE(row.mean_over_max.has_value());
    CHECK(*row.mean_over_max == mean_weight(delta, w) / max_weight(delta, w));
  }

  const auto cubic = asymptotic_scan(g("1,2,3"), 300, 50);
  REQUIRE(cubic.back().mean_over_max.has_value());
  CHECK(std::abs(to_double(*cubic.back().mean_over_max) - 0.75) < 0.02);

  // Delta_1 = {origin} when every weight exceeds 2.
  const auto flat = asymptotic_scan(g("5,7"), 1, 1);
  CHECK_FALSE(flat.front().mean_over_max.has_value());
  CHECK(code_of([] { asymptotic_scan(g("1"), 0, 1); }) == ErrorCode::InvalidN);
  CHECK(code_of([] { asymptotic_scan(g("1"), 5, 0); }) == ErrorCode::InvalidN);
}

TEST_CASE("random_downset") {
  const auto line = random_downset(42, 1, 5, 6);
  REQUIRE(line.size() >= 1);
  for (std::size_t k = 0; k < line.size(); ++k) CHECK(line.points()[k] == LatticePoint{static_cast<std::int64_t>(k)});
  CHECK(line.size() <= 6);

  CHECK(random_downset(99, 3, 4, 30).points() == random_downset(99, 3, 4, 30).points());
  CHECK(random_downset(99, 3, 4, 30).size() == 30);
  CHECK(random_downset(1, 2, 1, 100).size() == 4);  // whole box
  CHECK(random_downset(1, 2, 3, 0).empty());
  for (std::uint64_t seed = 0; seed < 30; ++seed) CHECK(random_downset(seed, 4, 3, 40).is_downward_closed());
}

TEST_CASE("inequality chain between h and the mean weight") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const auto w = random_gamma(rng, d, 12);
    const std::int64_t n = 1 + trial % 25;
    const Rational h = h_ratio(w, n);
    const auto delta = enumerate_delta(w, n);
    const Rational mean = mean_weight(delta, w);
    const Rational dd(static_cast<std::int64_t>(d));
    CAPTURE(trial);
    CHECK(mean / n - Rational(1) / n < h);
    CHECK(h <= mean / n);
    CHECK(h < Rational(n + 1) / n * dd / (dd + 1));
  }
}

TEST_CASE("integer weights keep h within d/(d+1)") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 4;
    std::uniform_int_distribution<std::int64_t> part(1, 6);
    std::vector<std::int64_t> degrees;
    for (std::size_t i = 0; i < d; ++i) degrees.push_back(part(rng));
    const auto w = WeightVector::integers(degrees);
    const Rational bound = make_rational(static_cast<std::int64_t>(d), static_cast<std::int64_t>(d + 1));
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(h_ratio(w, n) <= bound);
  }
}
