#include "wilfkit/bridge.hpp"

#include <algorithm>
#include <string>

#include "wilfkit/error.hpp"

namespace wilfkit {

namespace {

// reachable[k][v]: v is a non-negative combination of gens[k..].
class SuffixRepresentability {
 public:
  SuffixRepresentability(std::span<const std::int64_t> gens, std::int64_t limit)
      : gens_(gens.begin(), gens.end()), table_(gens.size() + 1) {
    const auto size = static_cast<std::size_t>(limit + 1);
    table_.back().assign(size, 0);
    table_.back()[0] = 1;
    for (std::size_t k = gens_.size(); k-- > 0;) {
      auto& row = table_[k];
      row = table_[k + 1];
      const auto g = static_cast<std::size_t>(gens_[k]);
      for (std::size_t v = g; v < size; ++v) {
        if (row[v - g]) row[v] = 1;
      }
    }
  }

  LatticePoint lift(std::int64_t a) const {
    if (a < 0 || !table_[0][static_cast<std::size_t>(a)]) {
      throw Error(ErrorCode::NotRepresentable, std::to_string(a) + " is not representable");
    }
    LatticePoint x(gens_.size(), 0);
    std::int64_t rest = a;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      std::int64_t t = 0;
      while (!table_[i + 1][static_cast<std::size_t>(rest - t * gens_[i])]) ++t;
      x[i] = t;
      rest -= t * gens_[i];
    }
    return x;
  }

 private:
  std::vector<std::int64_t> gens_;
  std::vector<std::vector<unsigned char>> table_;
};

void require_not_naturals(const NumericalSemigroup& s, const char* what) {
  if (s.is_whole_naturals()) throw Error(ErrorCode::DegenerateSemigroup, std::string(what) + " is undefined for S = N");
}

std::int64_t a_class(std::int64_t a, const NumericalSemigroup& s) { return (a + s.rho()) / s.multiplicity(); }

}  // namespace

LatticePoint lex_min_lift(std::int64_t a, std::span<const std::int64_t> gens) {
  if (a < 0) throw Error(ErrorCode::NotRepresentable, "negative value " + std::to_string(a));
  for (const std::int64_t g : gens) {
    if (g <= 0) throw Error(ErrorCode::InvalidGenerator, "generator " + std::to_string(g) + " is not positive");
  }
  return SuffixRepresentability(gens, a).lift(a);
}

AperyLift compute_apery_lift(const NumericalSemigroup& s) {
  require_not_naturals(s, "the Apéry lift");
  AperyLift out;
  out.lift_generators.assign(s.generators().begin() + 1, s.generators().end());
  out.elements = s.apery_set().elements;
  const SuffixRepresentability table(out.lift_generators, s.apery_set().max());
  out.lifts.reserve(out.elements.size());
  for (const std::int64_t a : out.elements) out.lifts.push_back(table.lift(a));
  out.tilde_a = Downset::from_points(out.lift_generators.size(), out.lifts);
  out.closure_ok = out.tilde_a.size() == out.elements.size() && out.tilde_a.is_downward_closed();
  return out;
}

AperyLift apery_lift(const NumericalSemigroup& s) {
  AperyLift out = compute_apery_lift(s);
  if (!out.closure_ok) throw Error(ErrorCode::ClosureViolation, "lifted Apéry set is not downward closed");
  return out;
}

WeightVector semigroup_gamma(const NumericalSemigroup& s) {
  require_not_naturals(s, "the semigroup weight vector");
  std::vector<Rational> entries;
  for (std::size_t i = 1; i < s.generators().size(); ++i) {
    entries.push_back(make_rational(s.generators()[i], s.multiplicity()));
  }
  return WeightVector(std::move(entries));
}

StripHistogram semigroup_strip_counts(const NumericalSemigroup& s) {
  const AperyLift lift = compute_apery_lift(s);
  const WeightVector gamma = semigroup_gamma(s);
  StripHistogram hist;
  for (const auto& x : lift.lifts) {
    const auto j = static_cast<std::size_t>(strip_index(x, gamma));
    if (j >= hist.counts.size()) hist.counts.resize(j + 1, 0);
    ++hist.counts[j];
  }
  hist.n = static_cast<std::int64_t>(hist.counts.size()) - 1;
  return hist;
}

Eq13Result eq13_check(const NumericalSemigroup& s) {
  require_not_naturals(s, "h(S)");
  if (s.rho() != 0) {
    throw Error(ErrorCode::PreconditionRho,
                "multiplicity does not divide the conductor (rho = " + std::to_string(s.rho()) + ")");
  }
  const StripHistogram hist = semigroup_strip_counts(s);
  BigInt weighted = 0;
  BigInt total = 0;
  for (std::size_t j = 0; j < hist.counts.size(); ++j) {
    weighted += BigInt(hist.counts[j]) * j;
    total += hist.counts[j];
  }
  Eq13Result out;
  out.h_s = Rational(weighted, total * s.n0());
  out.wilf = s.wilf_ratio();
  out.equal = out.h_s == out.wilf;
  return out;
}

std::int64_t AGradedPartition::degree_sum() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) sum += static_cast<std::int64_t>(i * classes[i].size());
  return sum;
}

AGradedPartition compute_a_partition(const NumericalSemigroup& s) {
  AGradedPartition out;
  out.classes.resize(static_cast<std::size_t>(s.n0() + 1));
  std::vector<std::int64_t> sorted = s.apery_set().elements;
  std::sort(sorted.begin(), sorted.end());
  for (const std::int64_t a : sorted) {
    const auto i = static_cast<std::size_t>(a_class(a, s));
    if (i >= out.classes.size()) out.classes.resize(i + 1);
    out.classes[i].push_back(a);
  }
  out.degree_identity_ok = out.degree_sum() == s.genus() + s.rho();
  return out;
}

AGradedPartition a_partition(const NumericalSemigroup& s) {
  AGradedPartition out = compute_a_partition(s);
  if (!out.degree_identity_ok) {
    throw Error(ErrorCode::DegreeIdentityViolation, "sum of Apéry degrees " + std::to_string(out.degree_sum()) +
                                                        " != Omega + rho = " + std::to_string(s.genus() + s.rho()));
  }
  return out;
}

AGradedResult is_a_graded(const NumericalSemigroup& s) {
  std::vector<std::int64_t> sorted = s.apery_set().elements;
  std::sort(sorted.begin(), sorted.end());
  const AperySet& apery = s.apery_set();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i; j < sorted.size(); ++j) {
      const std::int64_t a = sorted[i];
      const std::int64_t b = sorted[j];
      if (!apery.contains(a + b)) continue;
      const std::int64_t ca = a_class(a, s);
      const std::int64_t cb = a_class(b, s);
      const std::int64_t cs = a_class(a + b, s);
      if (cs != ca + cb) return {false, AGradedWitness{a, b, a + b, ca, cb, cs}};
    }
  }
  return {};
}

Prop41Result prop41_check(const NumericalSemigroup& s) {
  Prop41Result out;
  out.a_graded = is_a_graded(s).graded;
  out.wilf_holds = s.wilf_holds();
  out.consistent = !out.a_graded || out.wilf_holds;
  return out;
}

QuestionsReport questions_scan(const NumericalSemigroup& s, std::int64_t n_max) {
  if (s.n0() < 1) throw Error(ErrorCode::InvalidN, "n_0 must be at least 1 (S = N)");
  if (n_max < s.n0()) {
    throw Error(ErrorCode::InvalidN, "n_max " + std::to_string(n_max) + " is below n_0 = " + std::to_string(s.n0()));
  }
  QuestionsReport out;
  out.bound = make_rational(s.d(), s.d() + 1);
  out.n0 = s.n0();
  out.n_max = n_max;
  for (ScanRow& row : asymptotic_scan(semigroup_gamma(s), n_max, 1)) {
    if (row.n < s.n0()) continue;
    QuestionsRow q{row.n, std::move(row.h), false};
    q.exceeds = q.h > out.bound;
    if (q.exceeds) {
      out.all_rows_within = false;
      out.last_exceeding = q.n;
    }
    out.rows.push_back(std::move(q));
  }
  out.at_n0_within = !out.rows.front().exceeds;
  out.tail_start = out.last_exceeding ? *out.last_exceeding + 1 : out.n0;
  return out;
}

NumericalSemigroup family_a(std::int64_t n) {
  if (n < 3) throw Error(ErrorCode::ParameterOutOfRange, "family a) needs n >= 3, got " + std::to_string(n));
  const std::int64_t sq = n * n;
  return NumericalSemigroup::from_generators({sq, sq + 1, sq + n, sq + n + 1});
}

NumericalSemigroup family_b(std::int64_t p) {
  if (p < 9) throw Error(ErrorCode::ParameterOutOfRange, "family b) needs p >= 9, got " + std::to_string(p));
  return NumericalSemigroup::from_generators({p, 2 * p + 1, 2 * p + 3, 3 * p + 4});
}

namespace {

FamilyCheck common_checks(std::int64_t parameter, const NumericalSemigroup& s) {
  FamilyCheck out;
  out.parameter = parameter;
  out.generators = s.generators();
  out.minimal = s.generators().size() == 4;
  out.a_graded = is_a_graded(s).graded;
  if (s.rho() == 0) out.eq13_ok = eq13_check(s).equal;
  out.wilf_holds = s.wilf_holds();
  return out;
}

}  // namespace

FamilyCheck verify_family_a(std::int64_t n) {
  const NumericalSemigroup s = family_a(n);
  FamilyCheck out = common_checks(n, s);
  out.conductor_ok = s.conductor() == (n - 1) * n * n;
  out.n0_ok = s.n0() == n - 1;
  out.type_ok = s.type() == 2 * n - 1;
  out.rho_ok = s.rho() == 0;
  return out;
}

FamilyCheck verify_family_b(std::int64_t p) {
  const NumericalSemigroup s = family_b(p);
  FamilyCheck out = common_checks(p, s);
  out.conductor_ok = s.conductor() == (2 * p / 3) * p;
  out.type_ok = s.type() == 5;
  return out;
}

}  // namespace wilfkit
