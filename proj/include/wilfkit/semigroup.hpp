#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wilfkit/rational.hpp"

namespace wilfkit {

/// Elements of the Apéry set with respect to the multiplicity, indexed by
/// residue: elements[r] is the least member of S congruent to r.
struct AperySet {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> elements;

  std::int64_t max() const;
  /// True iff x is the Apéry element of its residue class.
  bool contains(std::int64_t x) const;
};

/// A numerical semigroup given by its minimal generating set.
///
/// Immutable after construction. Membership is answered from the Apéry set,
/// so every query is O(1) and the object is safe to share across threads.
class NumericalSemigroup {
 public:
  /// Reduces the input to the minimal generating set (sorted ascending).
  /// Throws EmptyInput, InvalidGenerator (entry <= 0) or GcdNotOne.
  static NumericalSemigroup from_generators(std::span<const std::int64_t> gens);
  static NumericalSemigroup from_generators(std::initializer_list<std::int64_t> gens) {
    return from_generators(std::span<const std::int64_t>(gens.begin(), gens.size()));
  }

  const std::vector<std::int64_t>& generators() const { return generators_; }
  /// Input entries that were dropped as redundant (duplicates included).
  const std::vector<std::int64_t>& removed_generators() const { return removed_; }

  std::int64_t multiplicity() const { return generators_.front(); }
  std::int64_t embedding_dim() const { return static_cast<std::int64_t>(generators_.size()); }
  /// d in the Wilf bound d/(d+1): embedding dimension minus one.
  std::int64_t d() const { return embedding_dim() - 1; }
  std::int64_t conductor() const { return conductor_; }
  std::int64_t frobenius() const { return conductor_ - 1; }
  std::int64_t genus() const { return genus_; }
  /// ceil(c / g0)
  std::int64_t n0() const { return n0_; }
  /// n0 * g0 - c, always in [0, g0).
  std::int64_t rho() const { return n0_ * multiplicity() - conductor_; }
  bool is_whole_naturals() const { return conductor_ == 0; }

  bool contains(std::int64_t x) const;
  std::vector<std::int64_t> gaps() const;
  const AperySet& apery_set() const { return apery_; }

  /// Number of pseudo-Frobenius numbers. Throws DegenerateSemigroup for S = N.
  std::int64_t type() const;
  std::vector<std::int64_t> pseudo_frobenius() const;

  /// Omega / c. Throws DegenerateSemigroup for S = N.
  Rational wilf_ratio() const;
  /// (d+1) * Omega <= d * c. Throws DegenerateSemigroup for S = N.
  bool wilf_holds() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> generators_;
  std::vector<std::int64_t> removed_;
  AperySet apery_;
  std::int64_t conductor_ = 0;
  std::int64_t genus_ = 0;
  std::int64_t n0_ = 0;
};

/// Apéry set of the monoid generated by gens with respect to modulus
/// (shortest paths over residues). Unreachable residues get -1.
std::vector<std::int64_t> apery_by_residue(std::int64_t modulus, std::span<const std::int64_t> gens);

}  // namespace wilfkit
