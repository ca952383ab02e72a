#include "wilfkit/hilbert.hpp"

#include <string>

#include "wilfkit/detail/checked.hpp"
#include "wilfkit/error.hpp"

namespace wilfkit {

using detail::checked_add;

namespace {

void require_degrees(std::span<const std::int64_t> degrees) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidDegree, "at least one degree is required");
  for (const std::int64_t g : degrees) {
    if (g < 1) throw Error(ErrorCode::InvalidDegree, "degree " + std::to_string(g) + " is not positive");
  }
}

}  // namespace

GradedCoefficients series_coefficients(std::span<const std::int64_t> degrees, std::int64_t N) {
  require_degrees(degrees);
  if (N < 0) throw Error(ErrorCode::InvalidN, "N must be non-negative");
  GradedCoefficients out;
  out.degrees.assign(degrees.begin(), degrees.end());
  out.coeffs.assign(static_cast<std::size_t>(N + 1), 0);
  out.coeffs[0] = 1;
  // Multiply by 1/(1 - z^g) one factor at a time.
  for (const std::int64_t g : degrees) {
    for (std::int64_t j = g; j <= N; ++j) {
      auto& c = out.coeffs[static_cast<std::size_t>(j)];
      c = checked_add(c, out.coeffs[static_cast<std::size_t>(j - g)]);
    }
  }
  return out;
}

std::int64_t closed_form_123(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidN, "n must be non-negative");
  const Rational value = make_rational(n * n, 12) + make_rational(n, 2);
  return floor_of(value).convert_to<std::int64_t>() + 1;
}

Rational w_ratio(std::span<const std::int64_t> degrees, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidN, "n must be at least 1");
  const GradedCoefficients series = series_coefficients(degrees, n);
  BigInt weighted = 0;
  BigInt complement = 0;
  BigInt total = 0;
  for (std::int64_t j = 0; j <= n; ++j) {
    const BigInt h = series.coeffs[static_cast<std::size_t>(j)];
    weighted += h * j;
    complement += h * (n - j);
    total += h;
  }
  if (complement == 0) throw Error(ErrorCode::DegenerateDenominator, "sum (n-j) h_j vanishes");
  const Rational direct(weighted, complement);
  const Rational shifted = Rational(total * n, complement) - 1;
  if (direct != shifted) throw Error(ErrorCode::InternalInconsistency, "the two forms of the ratio disagree");
  return direct;
}

QuotientHilbert::QuotientHilbert(Downset basis, std::vector<std::int64_t> degrees)
    : basis_(std::move(basis)), degrees_(std::move(degrees)) {
  if (basis_.empty()) throw Error(ErrorCode::EmptyBasis, "quotient basis is empty");
  require_degrees(degrees_);
  if (basis_.dim() != degrees_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "basis dimension differs from the number of degrees");
  }
  basis_.validate();
  for (const auto& m : basis_.points()) {
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i) deg = checked_add(deg, detail::checked_mul(m[i], degrees_[i]));
    if (deg >= static_cast<std::int64_t>(coeffs_.size())) coeffs_.resize(static_cast<std::size_t>(deg + 1), 0);
    ++coeffs_[static_cast<std::size_t>(deg)];
  }
}

bool macaulay_check(const QuotientHilbert& q) {
  BigInt weighted = 0;
  BigInt total = 0;
  for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
    weighted += BigInt(q.coeffs()[j]) * j;
    total += q.coeffs()[j];
  }
  const auto d = static_cast<std::int64_t>(q.degrees().size());
  return (d + 1) * weighted <= BigInt(d) * q.top_degree() * total;
}

}  // namespace wilfkit
