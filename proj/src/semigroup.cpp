#include "wilfkit/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "wilfkit/error.hpp"

namespace wilfkit {

std::int64_t AperySet::max() const { return *std::max_element(elements.begin(), elements.end()); }

bool AperySet::contains(std::int64_t x) const {
  if (x < 0) return false;
  return elements[static_cast<std::size_t>(x % modulus)] == x;
}

std::vector<std::int64_t> apery_by_residue(std::int64_t modulus, std::span<const std::int64_t> gens) {
  const auto m = static_cast<std::size_t>(modulus);
  std::vector<std::int64_t> dist(m, -1);
  using Item = std::pair<std::int64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[residue]) continue;
    for (const std::int64_t g : gens) {
      const std::int64_t next = value + g;
      const auto r = static_cast<std::size_t>(next % modulus);
      if (dist[r] < 0 || next < dist[r]) {
        dist[r] = next;
        queue.emplace(next, r);
      }
    }
  }
  return dist;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyInput, "generator list is empty");
  std::int64_t g = 0;
  for (const std::int64_t x : gens) {
    if (x <= 0) throw Error(ErrorCode::InvalidGenerator, "generator " + std::to_string(x) + " is not positive");
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw Error(ErrorCode::GcdNotOne, "generators have gcd " + std::to_string(g));
  }

  std::vector<std::int64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());

  NumericalSemigroup s;
  // Every representation of g uses only strictly smaller generators, so a
  // single ascending pass against the kept prefix decides minimality.
  for (const std::int64_t x : sorted) {
    if (s.generators_.empty()) {
      s.generators_.push_back(x);
      continue;
    }
    const std::int64_t m = s.generators_.front();
    const auto w = apery_by_residue(m, s.generators_);
    const std::int64_t least = w[static_cast<std::size_t>(x % m)];
    if (least >= 0 && least <= x) {
      s.removed_.push_back(x);
    } else {
      s.generators_.push_back(x);
    }
  }

  const std::int64_t g0 = s.generators_.front();
  s.apery_.modulus = g0;
  s.apery_.elements = apery_by_residue(g0, s.generators_);
  s.conductor_ = s.apery_.max() - g0 + 1;
  s.genus_ = 0;
  for (const std::int64_t a : s.apery_.elements) s.genus_ += a / g0;
  s.n0_ = (s.conductor_ + g0 - 1) / g0;
  return s;
}

bool NumericalSemigroup::contains(std::int64_t x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return x >= apery_.elements[static_cast<std::size_t>(x % multiplicity())];
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (std::int64_t x = 1; x < conductor_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::pseudo_frobenius() const {
  if (is_whole_naturals()) throw Error(ErrorCode::DegenerateSemigroup, "S = N has no pseudo-Frobenius numbers");
  // Maximal Apéry elements under a <=_S b iff b - a in S, shifted by -g0.
  std::vector<std::int64_t> out;
  for (const std::int64_t w : apery_.elements) {
    const bool maximal = std::none_of(apery_.elements.begin(), apery_.elements.end(),
                                      [&](std::int64_t v) { return v != w && contains(v - w); });
    if (maximal) out.push_back(w - multiplicity());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t NumericalSemigroup::type() const {
  return static_cast<std::int64_t>(pseudo_frobenius().size());
}

Rational NumericalSemigroup::wilf_ratio() const {
  if (is_whole_naturals()) throw Error(ErrorCode::DegenerateSemigroup, "Wilf ratio undefined for S = N (c = 0)");
  return make_rational(genus_, conductor_);
}

bool NumericalSemigroup::wilf_holds() const {
  if (is_whole_naturals()) throw Error(ErrorCode::DegenerateSemigroup, "Wilf ratio undefined for S = N (c = 0)");
  return (d() + 1) * genus_ <= d() * conductor_;
}

}  // namespace wilfkit
