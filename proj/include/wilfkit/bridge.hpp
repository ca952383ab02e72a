#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wilfkit/lattice.hpp"
#include "wilfkit/rational.hpp"
#include "wilfkit/semigroup.hpp"

namespace wilfkit {

/// LEX-least x in N^d with x . gens = a, chosen coordinate by coordinate:
/// each x_i is the smallest value leaving a remainder the later generators
/// can still represent. Throws NotRepresentable.
LatticePoint lex_min_lift(std::int64_t a, std::span<const std::int64_t> gens);

/// LEX-minimal lifts of the Apéry set over g_1..g_d.
struct AperyLift {
  std::vector<std::int64_t> lift_generators;  // g_1..g_d
  std::vector<std::int64_t> elements;         // Apéry elements, by residue
  std::vector<LatticePoint> lifts;            // lifts[r] lifts elements[r]
  Downset tilde_a;
  bool closure_ok = false;
};

/// Computes the lifts and records whether tilde_A is downward closed.
/// Throws DegenerateSemigroup for S = N.
AperyLift compute_apery_lift(const NumericalSemigroup& s);
/// As above, but a closure failure throws ClosureViolation.
AperyLift apery_lift(const NumericalSemigroup& s);

/// gamma = (g_1/g_0, ..., g_d/g_0).
WeightVector semigroup_gamma(const NumericalSemigroup& s);

/// counts[i] = #{ a in A : floor(a/g_0) = i }, measured on the lifted points.
StripHistogram semigroup_strip_counts(const NumericalSemigroup& s);

struct Eq13Result {
  Rational h_s;
  Rational wilf;
  bool equal = false;
};

/// Throws PreconditionRho unless g_0 divides c, DegenerateSemigroup for S = N.
Eq13Result eq13_check(const NumericalSemigroup& s);

/// A_i = { a in A : floor((a + rho)/g_0) = i }, i = 0..n_0.
struct AGradedPartition {
  std::vector<std::vector<std::int64_t>> classes;
  /// sum_i i #A_i == Omega + rho
  bool degree_identity_ok = false;

  std::int64_t degree_sum() const;
};

AGradedPartition compute_a_partition(const NumericalSemigroup& s);
/// Throws DegreeIdentityViolation if the degree identity fails.
AGradedPartition a_partition(const NumericalSemigroup& s);

struct AGradedWitness {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t sum = 0;
  std::int64_t class_a = 0;
  std::int64_t class_b = 0;
  std::int64_t class_sum = 0;
};

struct AGradedResult {
  bool graded = true;
  /// First violating (a, b) with a <= b, both ascending.
  std::optional<AGradedWitness> witness;
};

AGradedResult is_a_graded(const NumericalSemigroup& s);

struct Prop41Result {
  bool a_graded = false;
  bool wilf_holds = false;
  bool consistent = false;  // !a_graded || wilf_holds
};

/// Throws DegenerateSemigroup for S = N.
Prop41Result prop41_check(const NumericalSemigroup& s);

struct QuestionsRow {
  std::int64_t n = 0;
  Rational h;
  bool exceeds = false;  // h > d/(d+1)
};

/// h(n, gamma) over the window n_0..n_max with gamma = (g_i/g_0). Evidence
/// only: every statement is restricted to the scanned window.
struct QuestionsReport {
  Rational bound;
  std::int64_t n0 = 0;
  std::int64_t n_max = 0;
  std::vector<QuestionsRow> rows;
  /// (i): no row of the window exceeds the bound.
  bool all_rows_within = true;
  /// (ii): the row at n = n_0.
  bool at_n0_within = true;
  /// (iii): rows after the last exceedance stay within the bound; the tail
  /// is empty if the last row itself exceeds.
  std::optional<std::int64_t> last_exceeding;
  std::int64_t tail_start = 0;
};

/// Throws InvalidN unless n_max >= n_0 >= 1.
QuestionsReport questions_scan(const NumericalSemigroup& s, std::int64_t n_max);

/// <n^2, n^2+1, n^2+n, n^2+n+1>, n >= 3. Throws ParameterOutOfRange.
NumericalSemigroup family_a(std::int64_t n);
/// <p, 2p+1, 2p+3, 3p+4>, p >= 9. Throws ParameterOutOfRange.
NumericalSemigroup family_b(std::int64_t p);

/// The invariants claimed for a family member, each checked separately.
struct FamilyCheck {
  std::int64_t parameter = 0;
  std::vector<std::int64_t> generators;
  bool minimal = false;        // all four defining generators survive
  bool conductor_ok = false;   // a) (n-1) n^2   b) floor(2p/3) p
  bool n0_ok = true;           // a) n0 = n-1 (not claimed for b)
  bool type_ok = false;        // a) 2n-1        b) 5
  bool rho_ok = true;          // a) rho = 0 (not claimed for b)
  bool a_graded = false;
  std::optional<bool> eq13_ok;  // when rho = 0
  bool wilf_holds = false;

  bool all_ok() const {
    return minimal && conductor_ok && n0_ok && type_ok && rho_ok && a_graded && eq13_ok.value_or(true) && wilf_holds;
  }
};

FamilyCheck verify_family_a(std::int64_t n);
FamilyCheck verify_family_b(std::int64_t p);

}  // namespace wilfkit
