#include "wilfkit/lattice.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "wilfkit/detail/checked.hpp"
#include "wilfkit/error.hpp"

namespace wilfkit {

using detail::checked_add;
using detail::checked_mul;
using detail::to_big;

namespace {

void require_dim(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected dimension " + std::to_string(expected) + ", got " + std::to_string(got));
  }
}

std::string describe(std::span<const std::int64_t> x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(x[i]);
  }
  return out + ")";
}

// Visits every x in N^k with x . w < budget (budget > 0), lexicographically.
template <typename Visit>
void visit_below(std::span<const std::int64_t> w, std::int64_t budget, LatticePoint& x, std::size_t i,
                 Visit& visit) {
  if (i == w.size()) {
    visit(x);
    return;
  }
  for (std::int64_t v = 0, used = 0; used < budget; ++v, used += w[i]) {
    x[i] = v;
    visit_below(w, budget - used, x, i + 1, visit);
  }
  x[i] = 0;
}

// Points of N^k with x . w < budget, the last coordinate counted in closed form.
std::uint64_t count_below(std::span<const std::int64_t> w, std::size_t i, std::int64_t budget) {
  if (i + 1 == w.size()) return static_cast<std::uint64_t>((budget + w[i] - 1) / w[i]);
  std::uint64_t total = 0;
  for (std::int64_t used = 0; used < budget; used += w[i]) {
    total = checked_add(total, count_below(w, i + 1, budget - used));
  }
  return total;
}

void require_positive_n(std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::InvalidN, "n must be positive, got " + std::to_string(n));
}

void require_nonnegative_n(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidN, "n must be non-negative, got " + std::to_string(n));
}

std::int64_t strip_budget(const WeightVector& gamma, std::int64_t n) {
  return checked_mul(checked_add<std::int64_t>(n, 1), gamma.denominator());
}

}  // namespace

// ---- WeightVector ----------------------------------------------------------

WeightVector::WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidWeight, "weight vector must have at least one entry");
  BigInt lcm = 1;
  for (const Rational& g : entries_) {
    if (g <= 0) throw Error(ErrorCode::InvalidWeight, "weight " + to_string(g) + " is not positive");
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(g));
  }
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  if (lcm > limit) throw Error(ErrorCode::Overflow, "common denominator exceeds 63 bits");
  denominator_ = lcm.convert_to<std::int64_t>();
  for (const Rational& g : entries_) {
    const BigInt s = boost::multiprecision::numerator(g) * (lcm / boost::multiprecision::denominator(g));
    if (s > limit) throw Error(ErrorCode::Overflow, "scaled weight exceeds 63 bits");
    scaled_.push_back(s.convert_to<std::int64_t>());
  }
}

WeightVector WeightVector::integers(std::span<const std::int64_t> degrees) {
  std::vector<Rational> entries;
  entries.reserve(degrees.size());
  for (const std::int64_t g : degrees) entries.emplace_back(g);
  return WeightVector(std::move(entries));
}

WeightVector WeightVector::parse(std::string_view list) {
  std::vector<Rational> entries;
  while (true) {
    const auto comma = list.find(',');
    entries.push_back(parse_rational(list.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return WeightVector(std::move(entries));
}

std::int64_t WeightVector::scaled_weight(std::span<const std::int64_t> x) const {
  require_dim(dim(), x.size());
  std::int64_t w = 0;
  for (std::size_t i = 0; i < x.size(); ++i) w = checked_add(w, checked_mul(x[i], scaled_[i]));
  return w;
}

Rational WeightVector::weight(std::span<const std::int64_t> x) const {
  return make_rational(scaled_weight(x), denominator_);
}

Rational WeightVector::product() const {
  Rational p = 1;
  for (const Rational& g : entries_) p *= g;
  return p;
}

// ---- Downset ---------------------------------------------------------------

Downset Downset::from_points(std::size_t dim, std::vector<LatticePoint> points) {
  for (const auto& p : points) {
    require_dim(dim, p.size());
    if (std::any_of(p.begin(), p.end(), [](std::int64_t v) { return v < 0; })) {
      throw Error(ErrorCode::DimensionMismatch, "point " + describe(p) + " is not in N^d");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Downset out;
  out.dim_ = dim;
  out.points_ = std::move(points);
  return out;
}

Downset Downset::closure_of(std::size_t dim, std::span<const LatticePoint> generators) {
  std::set<LatticePoint> seen;
  for (const auto& g : generators) {
    require_dim(dim, g.size());
    std::vector<LatticePoint> stack{g};
    while (!stack.empty()) {
      LatticePoint p = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(p).second) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        if (p[i] > 0) {
          LatticePoint q = p;
          --q[i];
          if (!seen.count(q)) stack.push_back(std::move(q));
        }
      }
    }
  }
  return from_points(dim, {seen.begin(), seen.end()});
}

bool Downset::contains(std::span<const std::int64_t> x) const {
  if (x.size() != dim_) return false;
  return std::binary_search(points_.begin(), points_.end(), x,
                            [](const auto& a, const auto& b) {
                              return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                            });
}

namespace {

std::optional<LatticePoint> first_unclosed(const Downset& set) {
  LatticePoint q;
  for (const auto& p : set.points()) {
    q = p;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      --q[i];
      if (!set.contains(q)) return p;
      ++q[i];
    }
  }
  return std::nullopt;
}

}  // namespace

bool Downset::is_downward_closed() const { return !first_unclosed(*this).has_value(); }

void Downset::validate() const {
  if (auto bad = first_unclosed(*this)) {
    throw Error(ErrorCode::NotDownwardClosed, "point " + describe(*bad) + " is missing a predecessor");
  }
}

std::vector<LatticePoint> Downset::maximal_points() const {
  std::vector<LatticePoint> out;
  LatticePoint q;
  for (const auto& p : points_) {
    q = p;
    bool maximal = true;
    for (std::size_t i = 0; i < dim_ && maximal; ++i) {
      ++q[i];
      maximal = !contains(q);
      --q[i];
    }
    if (maximal) out.push_back(p);
  }
  return out;
}

// ---- strips and ratios ------------------------------------------------------

std::uint64_t StripHistogram::total() const {
  std::uint64_t t = 0;
  for (const auto c : counts) t = checked_add(t, c);
  return t;
}

std::int64_t strip_index(std::span<const std::int64_t> x, const WeightVector& gamma) {
  return gamma.scaled_weight(x) / gamma.denominator();
}

Downset enumerate_delta(const WeightVector& gamma, std::int64_t n, std::size_t max_points) {
  require_nonnegative_n(n);
  std::vector<LatticePoint> points;
  LatticePoint x(gamma.dim(), 0);
  auto collect = [&](const LatticePoint& p) {
    if (points.size() >= max_points) {
      throw Error(ErrorCode::TooLarge, "Delta_n has more than " + std::to_string(max_points) + " points");
    }
    points.push_back(p);
  };
  visit_below(gamma.scaled(), strip_budget(gamma, n), x, 0, collect);
  // Already lexicographic; from_points only re-checks.
  return Downset::from_points(gamma.dim(), std::move(points));
}

WeightSpectrum weight_spectrum(const WeightVector& gamma, std::int64_t n) {
  require_nonnegative_n(n);
  const std::int64_t length = strip_budget(gamma, n);
  if (static_cast<std::uint64_t>(length) > kMaxSpectrumLength) {
    throw Error(ErrorCode::TooLarge, "weight spectrum of length " + std::to_string(length) + " is too large");
  }
  WeightSpectrum out;
  out.denominator = gamma.denominator();
  out.counts.assign(static_cast<std::size_t>(length), 0);
  out.counts[0] = 1;
  for (const std::int64_t w : gamma.scaled()) {
    for (std::int64_t W = w; W < length; ++W) {
      out.counts[static_cast<std::size_t>(W)] =
          checked_add(out.counts[static_cast<std::size_t>(W)], out.counts[static_cast<std::size_t>(W - w)]);
    }
  }
  return out;
}

StripHistogram strip_counts(const WeightVector& gamma, std::int64_t n) {
  const WeightSpectrum spectrum = weight_spectrum(gamma, n);
  StripHistogram hist;
  hist.n = n;
  hist.counts.assign(static_cast<std::size_t>(n + 1), 0);
  const auto L = static_cast<std::size_t>(spectrum.denominator);
  for (std::size_t W = 0; W < spectrum.counts.size(); ++W) {
    auto& slot = hist.counts[W / L];
    slot = checked_add(slot, spectrum.counts[W]);
  }
  return hist;
}

Rational h_ratio(const StripHistogram& hist) {
  require_positive_n(hist.n);
  BigInt weighted = 0;
  BigInt total = 0;
  for (std::size_t j = 0; j < hist.counts.size(); ++j) {
    weighted += BigInt(hist.counts[j]) * j;
    total += hist.counts[j];
  }
  return Rational(weighted, total * hist.n);
}

Rational h_ratio(const WeightVector& gamma, std::int64_t n) {
  require_positive_n(n);
  return h_ratio(strip_counts(gamma, n));
}

Rational q_ratio(const StripHistogram& hist) {
  require_positive_n(hist.n);
  BigInt complement = 0;
  BigInt total = 0;
  for (std::size_t j = 0; j < hist.counts.size(); ++j) {
    complement += BigInt(hist.counts[j]) * (hist.n - static_cast<std::int64_t>(j));
    total += hist.counts[j];
  }
  Rational q(complement, total * hist.n);
  if (q + h_ratio(hist) != 1) {
    throw Error(ErrorCode::InternalInconsistency, "q(n,gamma) + h(n,gamma) != 1");
  }
  return q;
}

Rational q_ratio(const WeightVector& gamma, std::int64_t n) {
  require_positive_n(n);
  return q_ratio(strip_counts(gamma, n));
}

// ---- mean / max / Zhai -------------------------------------------------------

Rational mean_weight(const Downset& set, const WeightVector& gamma) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "mean weight of an empty set");
  require_dim(gamma.dim(), set.dim());
  BigInt sum = 0;
  for (const auto& p : set.points()) sum += gamma.scaled_weight(p);
  return Rational(sum, BigInt(gamma.denominator()) * set.size());
}

Rational max_weight(const Downset& set, const WeightVector& gamma) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "max weight of an empty set");
  require_dim(gamma.dim(), set.dim());
  std::int64_t best = 0;
  for (const auto& p : set.points()) best = std::max(best, gamma.scaled_weight(p));
  return make_rational(best, gamma.denominator());
}

bool zhai_check(const Downset& set, const WeightVector& gamma) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "Zhai bound needs a non-empty downset");
  require_dim(gamma.dim(), set.dim());
  set.validate();
  const auto d = static_cast<std::int64_t>(gamma.dim());
  return (d + 1) * mean_weight(set, gamma) <= d * max_weight(set, gamma);
}

// ---- the (d+1)-dimensional cone ---------------------------------------------

std::uint64_t count_delta_hat_direct(const WeightVector& gamma, std::int64_t n) {
  require_nonnegative_n(n);
  std::vector<std::int64_t> w;
  w.reserve(gamma.dim() + 1);
  w.push_back(gamma.denominator());  // x0 has weight 1
  w.insert(w.end(), gamma.scaled().begin(), gamma.scaled().end());
  return count_below(w, 0, strip_budget(gamma, n));
}

std::uint64_t count_delta_hat_from_strips(const StripHistogram& hist) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < hist.counts.size(); ++j) {
    const auto fibre = static_cast<std::uint64_t>(hist.n - static_cast<std::int64_t>(j) + 1);
    total = checked_add(total, checked_mul(fibre, hist.counts[j]));
  }
  return total;
}

std::uint64_t count_delta_hat(const WeightVector& gamma, std::int64_t n) {
  const std::uint64_t direct = count_delta_hat_direct(gamma, n);
  const std::uint64_t by_strips = count_delta_hat_from_strips(strip_counts(gamma, n));
  if (direct != by_strips) {
    throw Error(ErrorCode::InternalInconsistency, "direct cone count " + std::to_string(direct) +
                                                      " != strip formula " + std::to_string(by_strips));
  }
  return direct;
}

VolumeEstimates volume_estimates(const WeightVector& gamma, std::int64_t n) {
  require_positive_n(n);
  const auto d = static_cast<unsigned>(gamma.dim());
  const BigInt side = n + 1;
  const BigInt side_d = boost::multiprecision::pow(side, d);
  VolumeEstimates out;
  out.vol_d = Rational(BigInt(strip_counts(gamma, n).total()), side_d);
  out.vol_hat = Rational(BigInt(count_delta_hat(gamma, n)), side_d * side);
  out.cone_ratio = out.vol_hat / out.vol_d;
  BigInt factorial = 1;
  for (unsigned k = 2; k <= d; ++k) factorial *= k;
  out.vol_limit = 1 / (Rational(factorial) * gamma.product());
  return out;
}

std::vector<ScanRow> asymptotic_scan(const WeightVector& gamma, std::int64_t n_max, std::int64_t stride) {
  require_positive_n(n_max);
  if (stride < 1) throw Error(ErrorCode::InvalidN, "stride must be positive, got " + std::to_string(stride));
  const WeightSpectrum spectrum = weight_spectrum(gamma, n_max);
  const std::int64_t L = spectrum.denominator;

  std::vector<ScanRow> rows;
  unsigned __int128 count = 0;
  unsigned __int128 floor_sum = 0;
  unsigned __int128 weight_sum = 0;
  std::int64_t max_w = 0;
  std::int64_t next_row = stride;
  for (std::int64_t W = 0; W < static_cast<std::int64_t>(spectrum.counts.size()); ++W) {
    const std::uint64_t c = spectrum.counts[static_cast<std::size_t>(W)];
    if (c != 0) {
      count += c;
      floor_sum += static_cast<unsigned __int128>(c) * static_cast<std::uint64_t>(W / L);
      weight_sum += static_cast<unsigned __int128>(c) * static_cast<std::uint64_t>(W);
      max_w = W;
    }
    // The last W of strip next_row closes Delta_{next_row}.
    if (W + 1 == (next_row + 1) * L) {
      ScanRow row;
      row.n = next_row;
      const BigInt total = to_big(count);
      const BigInt js = to_big(floor_sum);
      row.h = Rational(js, total * next_row);
      row.q = Rational(total * next_row - js, total * next_row);
      if (max_w > 0) row.mean_over_max = Rational(to_big(weight_sum), total * max_w);
      rows.push_back(std::move(row));
      next_row += stride;
    }
  }
  return rows;
}

// ---- random downsets ----------------------------------------------------------

Downset random_downset(std::uint64_t seed, std::size_t d, std::int64_t max_coord, std::size_t target_size) {
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "random downset needs d >= 1");
  if (max_coord < 0) throw Error(ErrorCode::ParameterOutOfRange, "max_coord must be non-negative");
  std::mt19937_64 rng(seed);
  std::set<LatticePoint> members;
  std::set<LatticePoint> addable;
  if (target_size > 0) addable.insert(LatticePoint(d, 0));

  auto all_predecessors_in = [&](const LatticePoint& p) {
    LatticePoint q = p;
    for (std::size_t i = 0; i < d; ++i) {
      if (q[i] == 0) continue;
      --q[i];
      const bool present = members.count(q) != 0;
      ++q[i];
      if (!present) return false;
    }
    return true;
  };

  while (members.size() < target_size && !addable.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, addable.size() - 1);
    auto it = std::next(addable.begin(), static_cast<std::ptrdiff_t>(pick(rng)));
    LatticePoint p = *it;
    addable.erase(it);
    members.insert(p);
    for (std::size_t i = 0; i < d; ++i) {
      if (p[i] == max_coord) continue;
      ++p[i];
      if (all_predecessors_in(p)) addable.insert(p);
      --p[i];
    }
  }
  return Downset::from_points(d, {members.begin(), members.end()});
}

}  // namespace wilfkit
