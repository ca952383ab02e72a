#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wilfkit/semigroup.hpp"

namespace wilfkit {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Rough size of the genus <= g_max corpus (the genus counts grow like the
/// golden ratio to the power g).
std::uint64_t estimate_genus_corpus(std::int64_t g_max);

/// Walks the semigroup tree from N: the children of S are S \ {m} for
/// every minimal generator m above the Frobenius number. Each semigroup of
/// genus <= g_max is visited exactly once, depth first, as (minimal
/// generators, genus). Throws BoundTooLarge if the estimate exceeds cap.
void for_each_semigroup_by_genus(std::int64_t g_max,
                                 const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit,
                                 std::uint64_t cap = kDefaultEnumerationCap);

std::vector<NumericalSemigroup> enumerate_by_genus(std::int64_t g_max, std::uint64_t cap = kDefaultEnumerationCap);

/// Every semigroup with multiplicity <= m_max and conductor <= 2 m_max.
/// Throws BoundTooLarge once more than cap semigroups have been produced.
std::vector<NumericalSemigroup> enumerate_by_multiplicity(std::int64_t m_max,
                                                          std::uint64_t cap = kDefaultEnumerationCap);

enum class CorpusMode { GenusBound, MultiplicityBound, File };

enum class Check : unsigned {
  Wilf = 1u << 0,
  AGraded = 1u << 1,
  ZhaiIdentity = 1u << 2,
  Eq13 = 1u << 3,
  Closure = 1u << 4,
  Prop41 = 1u << 5,
};

class CheckSet {
 public:
  constexpr CheckSet() = default;
  static CheckSet all();
  /// Comma-separated names: wilf, agraded, zhai_identity, eq13, closure,
  /// prop41, or "all". Throws ParseError.
  static CheckSet parse(std::string_view list);

  CheckSet& add(Check c) {
    bits_ |= static_cast<unsigned>(c);
    return *this;
  }
  bool has(Check c) const { return (bits_ & static_cast<unsigned>(c)) != 0; }
  bool empty() const { return bits_ == 0; }

 private:
  unsigned bits_ = 0;
};

struct CorpusSpec {
  CorpusMode mode = CorpusMode::GenusBound;
  std::int64_t bound = 20;
  std::string path;
  CheckSet checks = CheckSet::all();
};

/// One verified semigroup. Optional fields are empty when the check was
/// not requested or is undefined for the semigroup (S = N).
struct VerificationRecord {
  std::vector<std::int64_t> generators;
  std::int64_t conductor = 0;
  std::int64_t genus = 0;
  std::optional<std::int64_t> type;
  std::int64_t rho = 0;
  std::optional<std::string> wilf_ratio;
  std::optional<bool> wilf_holds;
  std::optional<bool> a_graded;
  std::optional<std::string> a_graded_witness;  // "a+b=s"
  std::optional<bool> degree_identity_ok;
  std::optional<bool> closure_ok;
  std::optional<bool> eq13_ok;
  std::optional<bool> prop41_consistent;
  std::string error;

  bool wilf_failure() const { return wilf_holds == false; }
  bool tripwire() const;
};

VerificationRecord verify_semigroup(const NumericalSemigroup& s, CheckSet checks);

struct CorpusSummary {
  std::uint64_t total = 0;
  std::uint64_t wilf_failures = 0;
  std::uint64_t a_graded = 0;
  std::uint64_t tripwire_failures = 0;
  std::uint64_t item_errors = 0;
  std::vector<std::uint64_t> per_genus;

  bool has_findings() const { return wilf_failures != 0 || tripwire_failures != 0; }
};

struct CorpusResult {
  std::vector<VerificationRecord> records;  // sorted by generator list
  CorpusSummary summary;
};

/// Reads one semigroup per line ("9,10,12,13"); '#' starts a comment and
/// blank lines are skipped. Throws IoError if the file cannot be opened.
std::vector<std::vector<std::int64_t>> read_generator_file(const std::string& path);

/// Verifies every semigroup of the corpus on `workers` threads. The
/// result does not depend on the worker count. Per-item failures land in
/// the record's error field.
CorpusResult run_corpus(const CorpusSpec& spec, unsigned workers);

/// Same, over an explicit list of generator sets.
CorpusResult run_corpus(const std::vector<std::vector<std::int64_t>>& inputs, CheckSet checks, unsigned workers);

}  // namespace wilfkit
