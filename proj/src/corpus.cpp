#include "wilfkit/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <thread>

#include "wilfkit/bridge.hpp"
#include "wilfkit/error.hpp"

namespace wilfkit {

namespace {

// Membership of [0, member.size()); everything beyond is in S.
struct TreeNode {
  std::vector<std::uint8_t> member;
  std::int64_t frobenius = -1;
  std::int64_t genus = 0;
  std::vector<std::int64_t> generators;
};

std::vector<std::int64_t> minimal_generators(const std::vector<std::uint8_t>& member, std::int64_t frobenius) {
  std::int64_t g0 = 1;
  while (!member[static_cast<std::size_t>(g0)]) ++g0;
  std::vector<std::int64_t> out;
  for (std::int64_t x = g0; x <= frobenius + g0; ++x) {
    if (!member[static_cast<std::size_t>(x)]) continue;
    bool decomposable = false;
    for (std::int64_t y = g0; 2 * y <= x && !decomposable; ++y) {
      decomposable = member[static_cast<std::size_t>(y)] && member[static_cast<std::size_t>(x - y)];
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

// Depth-first walk over the semigroup tree. A child is entered only if
// descend(child genus, child Frobenius) holds; the Frobenius number grows
// strictly along every path, so max_frobenius bounds the whole walk.
template <typename Descend, typename Visit>
void walk_tree(std::int64_t max_frobenius, Descend descend, Visit visit) {
  TreeNode root;
  root.member.assign(static_cast<std::size_t>(2 * std::max<std::int64_t>(max_frobenius, 0) + 3), 1);
  root.generators = {1};
  std::vector<TreeNode> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    TreeNode node = std::move(stack.back());
    stack.pop_back();
    visit(node);
    for (auto it = node.generators.rbegin(); it != node.generators.rend(); ++it) {
      const std::int64_t m = *it;
      if (m <= node.frobenius) break;
      if (!descend(node.genus + 1, m)) continue;
      TreeNode child;
      child.member = node.member;
      child.member[static_cast<std::size_t>(m)] = 0;
      child.frobenius = m;
      child.genus = node.genus + 1;
      child.generators = minimal_generators(child.member, m);
      stack.push_back(std::move(child));
    }
  }
}

std::string witness_text(const AGradedWitness& w) {
  return std::to_string(w.a) + "+" + std::to_string(w.b) + "=" + std::to_string(w.sum);
}

}  // namespace

std::uint64_t estimate_genus_corpus(std::int64_t g_max) {
  if (g_max < 0) return 0;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return static_cast<std::uint64_t>(std::ceil(6.5 * std::pow(phi, static_cast<double>(g_max)))) + 1;
}

void for_each_semigroup_by_genus(std::int64_t g_max,
                                 const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit,
                                 std::uint64_t cap) {
  if (g_max < 0) throw Error(ErrorCode::ParameterOutOfRange, "genus bound must be non-negative");
  const std::uint64_t estimate = estimate_genus_corpus(g_max);
  if (estimate > cap) {
    throw Error(ErrorCode::BoundTooLarge, "genus <= " + std::to_string(g_max) + " yields about " +
                                              std::to_string(estimate) + " semigroups (cap " +
                                              std::to_string(cap) + ")");
  }
  // Frobenius number <= 2 genus - 1.
  walk_tree(
      2 * g_max - 1, [&](std::int64_t genus, std::int64_t) { return genus <= g_max; },
      [&](const TreeNode& node) { visit(node.generators, node.genus); });
}

std::vector<NumericalSemigroup> enumerate_by_genus(std::int64_t g_max, std::uint64_t cap) {
  std::vector<NumericalSemigroup> out;
  for_each_semigroup_by_genus(
      g_max, [&](const std::vector<std::int64_t>& gens, std::int64_t) {
        out.push_back(NumericalSemigroup::from_generators(gens));
      },
      cap);
  return out;
}

std::vector<NumericalSemigroup> enumerate_by_multiplicity(std::int64_t m_max, std::uint64_t cap) {
  if (m_max < 1) throw Error(ErrorCode::ParameterOutOfRange, "multiplicity bound must be positive");
  std::vector<NumericalSemigroup> out;
  std::uint64_t produced = 0;
  walk_tree(
      2 * m_max - 1, [&](std::int64_t, std::int64_t frobenius) { return frobenius <= 2 * m_max - 1; },
      [&](const TreeNode& node) {
        if (++produced > cap) {
          throw Error(ErrorCode::BoundTooLarge, "multiplicity bound " + std::to_string(m_max) + " exceeds cap " +
                                                    std::to_string(cap));
        }
        if (node.generators.front() <= m_max) out.push_back(NumericalSemigroup::from_generators(node.generators));
      });
  return out;
}

// ---- checks ---------------------------------------------------------------------

CheckSet CheckSet::all() {
  CheckSet c;
  c.add(Check::Wilf).add(Check::AGraded).add(Check::ZhaiIdentity).add(Check::Eq13).add(Check::Closure).add(
      Check::Prop41);
  return c;
}

CheckSet CheckSet::parse(std::string_view list) {
  CheckSet out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    std::string_view name = list.substr(0, comma);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.remove_prefix(1);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
    if (name == "all") out = all();
    else if (name == "wilf") out.add(Check::Wilf);
    else if (name == "agraded") out.add(Check::AGraded);
    else if (name == "zhai_identity") out.add(Check::ZhaiIdentity);
    else if (name == "eq13") out.add(Check::Eq13);
    else if (name == "closure") out.add(Check::Closure);
    else if (name == "prop41") out.add(Check::Prop41);
    else if (!name.empty()) throw Error(ErrorCode::ParseError, "unknown check '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "no checks selected");
  return out;
}

bool VerificationRecord::tripwire() const {
  auto failed = [](const std::optional<bool>& v) { return v == false; };
  return failed(degree_identity_ok) || failed(closure_ok) || failed(eq13_ok) || failed(prop41_consistent);
}

VerificationRecord verify_semigroup(const NumericalSemigroup& s, CheckSet checks) {
  VerificationRecord r;
  r.generators = s.generators();
  r.conductor = s.conductor();
  r.genus = s.genus();
  r.rho = s.rho();
  const bool naturals = s.is_whole_naturals();
  if (!naturals) r.type = s.type();

  if (checks.has(Check::Wilf)) {
    // S = N satisfies Wilf vacuously; the ratio itself is 0/0.
    r.wilf_holds = naturals || s.wilf_holds();
    if (!naturals) r.wilf_ratio = to_string(s.wilf_ratio());
  }
  if (checks.has(Check::AGraded)) {
    const AGradedResult graded = is_a_graded(s);
    r.a_graded = graded.graded;
    if (graded.witness) r.a_graded_witness = witness_text(*graded.witness);
  }
  if (checks.has(Check::ZhaiIdentity)) r.degree_identity_ok = compute_a_partition(s).degree_identity_ok;
  if (checks.has(Check::Closure) && !naturals) r.closure_ok = compute_apery_lift(s).closure_ok;
  if (checks.has(Check::Eq13) && !naturals && s.rho() == 0) r.eq13_ok = eq13_check(s).equal;
  if (checks.has(Check::Prop41)) r.prop41_consistent = naturals || prop41_check(s).consistent;
  return r;
}

// ---- corpus runs ------------------------------------------------------------------

std::vector<std::vector<std::int64_t>> read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::vector<std::vector<std::int64_t>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    std::vector<std::int64_t> gens;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      std::string token(rest.substr(0, comma));
      token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                  token.end());
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (token.empty() || used != token.size()) {
        throw Error(ErrorCode::ParseError, path + ":" + std::to_string(line_no) + ": bad integer '" + token + "'");
      }
      gens.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    out.push_back(std::move(gens));
  }
  if (in.bad()) throw Error(ErrorCode::IoError, "read error on '" + path + "'");
  return out;
}

CorpusResult run_corpus(const std::vector<std::vector<std::int64_t>>& inputs, CheckSet checks, unsigned workers) {
  CorpusResult result;
  result.records.resize(inputs.size());
  std::vector<std::uint8_t> rejected(inputs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      std::optional<NumericalSemigroup> s;
      try {
        s = NumericalSemigroup::from_generators(inputs[i]);
      } catch (const Error& e) {
        result.records[i].generators = inputs[i];
        result.records[i].error = e.what();
        rejected[i] = 1;
        continue;
      }
      try {
        result.records[i] = verify_semigroup(*s, checks);
      } catch (const Error& e) {
        result.records[i].generators = s->generators();
        result.records[i].error = e.what();
      }
    }
  };
  workers = std::max(1u, workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  CorpusSummary& sum = result.summary;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const VerificationRecord& r = result.records[i];
    ++sum.total;
    if (rejected[i]) {
      ++sum.item_errors;
      continue;
    }
    if (r.wilf_failure()) ++sum.wilf_failures;
    if (r.a_graded == true) ++sum.a_graded;
    // An exception while verifying a valid semigroup is itself a finding.
    if (r.tripwire() || !r.error.empty()) ++sum.tripwire_failures;
    if (r.error.empty()) {
      const auto g = static_cast<std::size_t>(r.genus);
      if (g >= sum.per_genus.size()) sum.per_genus.resize(g + 1, 0);
      ++sum.per_genus[g];
    }
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const VerificationRecord& a, const VerificationRecord& b) { return a.generators < b.generators; });
  return result;
}

CorpusResult run_corpus(const CorpusSpec& spec, unsigned workers) {
  if (spec.checks.empty()) throw Error(ErrorCode::ParseError, "no checks selected");
  std::vector<std::vector<std::int64_t>> inputs;
  switch (spec.mode) {
    case CorpusMode::GenusBound:
      if (spec.bound < 1) throw Error(ErrorCode::ParameterOutOfRange, "genus bound must be at least 1");
      for_each_semigroup_by_genus(spec.bound, [&](const std::vector<std::int64_t>& g, std::int64_t) {
        inputs.push_back(g);
      });
      break;
    case CorpusMode::MultiplicityBound:
      for (const auto& s : enumerate_by_multiplicity(spec.bound)) inputs.push_back(s.generators());
      break;
    case CorpusMode::File:
      inputs = read_generator_file(spec.path);
      break;
  }
  return run_corpus(inputs, spec.checks, workers);
}

}  // namespace wilfkit
