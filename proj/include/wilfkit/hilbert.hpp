#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wilfkit/lattice.hpp"
#include "wilfkit/rational.hpp"

namespace wilfkit {

/// Coefficients of 1 / prod (1 - z^deg_i), truncated after z^N.
struct GradedCoefficients {
  std::vector<std::int64_t> degrees;
  std::vector<std::uint64_t> coeffs;  // coeffs[j] = #{ m : m.deg = j }
};

/// Coin-counting DP, O(d N). Throws InvalidDegree (degree < 1) or InvalidN.
GradedCoefficients series_coefficients(std::span<const std::int64_t> degrees, std::int64_t N);

/// floor(n^2/12 + n/2) + 1, the Hilbert function for degrees (1,2,3).
std::int64_t closed_form_123(std::int64_t n);

/// sum_{j<=n} j h_j / sum_{j<=n} (n-j) h_j. The alternative form
/// n sum h_j / sum (n-j) h_j - 1 is evaluated as well and must agree
/// (InternalInconsistency otherwise).
Rational w_ratio(std::span<const std::int64_t> degrees, std::int64_t n);

/// Hilbert function of a monomial quotient, given by the downset of
/// standard monomials.
class QuotientHilbert {
 public:
  /// Throws EmptyBasis, InvalidDegree, DimensionMismatch or NotDownwardClosed.
  QuotientHilbert(Downset basis, std::vector<std::int64_t> degrees);

  const Downset& basis() const { return basis_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  std::int64_t top_degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

 private:
  Downset basis_;
  std::vector<std::int64_t> degrees_;
  std::vector<std::uint64_t> coeffs_;
};

/// (d+1) sum j h_j <= d m sum h_j, where m is the top degree.
bool macaulay_check(const QuotientHilbert& q);

}  // namespace wilfkit
