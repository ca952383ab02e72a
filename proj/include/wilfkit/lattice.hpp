#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wilfkit/rational.hpp"

namespace wilfkit {

using LatticePoint = std::vector<std::int64_t>;

/// Positive rational weights gamma_1..gamma_d.
///
/// Stored twice: as exact rationals and as integer numerators over the
/// least common denominator L, so x.gamma = (x . scaled) / L and every
/// floor, comparison and strip lookup is plain integer arithmetic.
class WeightVector {
 public:
  /// Throws InvalidWeight (empty, or an entry <= 0) or Overflow (L does not
  /// fit in 63 bits).
  explicit WeightVector(std::vector<Rational> entries);

  static WeightVector integers(std::span<const std::int64_t> degrees);
  /// Comma-separated "p/q" or integer entries.
  static WeightVector parse(std::string_view list);

  std::size_t dim() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  std::int64_t denominator() const { return denominator_; }
  const std::vector<std::int64_t>& scaled() const { return scaled_; }
  bool is_integral() const { return denominator_ == 1; }

  /// x . scaled; throws DimensionMismatch.
  std::int64_t scaled_weight(std::span<const std::int64_t> x) const;
  Rational weight(std::span<const std::int64_t> x) const;

  /// Product of the entries (for the simplex volume).
  Rational product() const;

 private:
  std::vector<Rational> entries_;
  std::vector<std::int64_t> scaled_;
  std::int64_t denominator_ = 1;
};

/// A finite subset of N^d kept sorted lexicographically.
///
/// `from_points` does not validate closure; call `is_downward_closed` or
/// `validate` where the downset property is a precondition.
class Downset {
 public:
  Downset() = default;
  static Downset from_points(std::size_t dim, std::vector<LatticePoint> points);
  /// Smallest downset containing every given point.
  static Downset closure_of(std::size_t dim, std::span<const LatticePoint> generators);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }

  bool contains(std::span<const std::int64_t> x) const;
  /// Full check: every point has all its immediate predecessors x - e_i.
  bool is_downward_closed() const;
  /// Throws NotDownwardClosed naming the first offending point.
  void validate() const;
  /// The antichain of maximal points.
  std::vector<LatticePoint> maximal_points() const;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticePoint> points_;
};

struct StripHistogram {
  std::vector<std::uint64_t> counts;  // counts[j] = #(H_j cap N^d), j = 0..n
  std::int64_t n = 0;

  std::uint64_t total() const;
};

/// Number of lattice points by exact scaled weight W = (x.gamma) * L,
/// for 0 <= W < (n+1) L. Computed by coin-counting over the scaled
/// weights, so the cost is O(d (n+1) L) whatever the size of Delta_n.
struct WeightSpectrum {
  std::int64_t denominator = 1;
  std::vector<std::uint64_t> counts;
};

inline constexpr std::size_t kMaxEnumeratedPoints = 50'000'000;
inline constexpr std::size_t kMaxSpectrumLength = 200'000'000;

/// floor(x . gamma), exact.
std::int64_t strip_index(std::span<const std::int64_t> x, const WeightVector& gamma);

/// Delta_n = { m in N^d : m.gamma < n+1 }, materialized in lexicographic
/// order by nested loops whose bounds shrink with the partial weight.
/// Throws TooLarge beyond max_points.
Downset enumerate_delta(const WeightVector& gamma, std::int64_t n,
                        std::size_t max_points = kMaxEnumeratedPoints);

WeightSpectrum weight_spectrum(const WeightVector& gamma, std::int64_t n);

StripHistogram strip_counts(const WeightVector& gamma, std::int64_t n);

/// sum j h_j / (n sum h_j). Throws InvalidN for n <= 0.
Rational h_ratio(const WeightVector& gamma, std::int64_t n);
Rational h_ratio(const StripHistogram& hist);

/// sum (n-j) h_j / (n sum h_j); checked against 1 - h before returning
/// (InternalInconsistency on mismatch).
Rational q_ratio(const WeightVector& gamma, std::int64_t n);
Rational q_ratio(const StripHistogram& hist);

/// Throw EmptySet / DimensionMismatch.
Rational mean_weight(const Downset& set, const WeightVector& gamma);
Rational max_weight(const Downset& set, const WeightVector& gamma);

/// (d+1) mean <= d max over a non-empty downset; {origin} is true.
/// Throws EmptySet, DimensionMismatch or NotDownwardClosed.
bool zhai_check(const Downset& set, const WeightVector& gamma);

/// #{ (x0, x) in N^{d+1} : x0 + x.gamma < n+1 } by walking the (d+1)-
/// dimensional region directly.
std::uint64_t count_delta_hat_direct(const WeightVector& gamma, std::int64_t n);
/// sum_j (n-j+1) h_j.
std::uint64_t count_delta_hat_from_strips(const StripHistogram& hist);
/// Both of the above; throws InternalInconsistency if they differ.
std::uint64_t count_delta_hat(const WeightVector& gamma, std::int64_t n);

struct VolumeEstimates {
  Rational vol_d;       // #Delta_n / (n+1)^d
  Rational vol_hat;     // #hat Delta_n / (n+1)^(d+1)
  Rational cone_ratio;  // vol_hat / vol_d
  Rational vol_limit;   // 1 / (d! prod gamma_i), the limit of vol_d
};

VolumeEstimates volume_estimates(const WeightVector& gamma, std::int64_t n);

struct ScanRow {
  std::int64_t n = 0;
  Rational h;
  Rational q;
  /// Empty when Delta_n = {origin} (0/0).
  std::optional<Rational> mean_over_max;
};

/// Rows at n = stride, 2 stride, ..., <= n_max, all from one spectrum.
std::vector<ScanRow> asymptotic_scan(const WeightVector& gamma, std::int64_t n_max, std::int64_t stride);

/// Deterministic in seed. Grows from the origin by adding uniformly chosen
/// addable corners inside [0, max_coord]^d until target_size points (or
/// the box is full).
Downset random_downset(std::uint64_t seed, std::size_t d, std::int64_t max_coord, std::size_t target_size);

}  // namespace wilfkit
