// wilfkit command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 verification finding present,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wilfkit/bridge.hpp"
#include "wilfkit/corpus.hpp"
#include "wilfkit/error.hpp"
#include "wilfkit/hilbert.hpp"
#include "wilfkit/lattice.hpp"
#include "wilfkit/report.hpp"
#include "wilfkit/semigroup.hpp"

namespace {

using namespace wilfkit;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;
constexpr int kExitIo = 3;

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw Error(ErrorCode::ParseError, "bad integer '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty integer list");
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_int_list(text);
    if (v.size() != 1) throw Error(ErrorCode::ParseError, "bad range '" + text + "' (expected A..B)");
    return {v[0], v[0]};
  }
  const auto lo = parse_int_list(text.substr(0, dots));
  const auto hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) {
    throw Error(ErrorCode::ParseError, "bad range '" + text + "' (expected A..B)");
  }
  return {lo[0], hi[0]};
}

NumericalSemigroup semigroup_of(const std::string& gens) {
  return NumericalSemigroup::from_generators(parse_int_list(gens));
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json witness_json(const std::optional<AGradedWitness>& w) {
  if (!w) return nullptr;
  return Json{{"a", w->a}, {"b", w->b}, {"sum", w->sum},
              {"class_a", w->class_a}, {"class_b", w->class_b}, {"class_sum", w->class_sum}};
}

int cmd_info(const std::string& gens) {
  const auto s = semigroup_of(gens);
  Json j;
  j["generators"] = s.generators();
  j["removed"] = s.removed_generators();
  j["multiplicity"] = s.multiplicity();
  j["embedding_dim"] = s.embedding_dim();
  j["conductor"] = s.conductor();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["n0"] = s.n0();
  j["rho"] = s.rho();
  j["type"] = s.is_whole_naturals() ? Json(nullptr) : Json(s.type());
  j["pseudo_frobenius"] = s.is_whole_naturals() ? Json::array() : Json(s.pseudo_frobenius());
  j["gaps"] = s.gaps();
  print(j);
  return kExitOk;
}

int cmd_apery(const std::string& gens, bool with_lift) {
  const auto s = semigroup_of(gens);
  Json j;
  j["generators"] = s.generators();
  j["modulus"] = s.multiplicity();
  j["elements"] = s.apery_set().elements;
  int code = kExitOk;
  if (with_lift && !s.is_whole_naturals()) {
    const AperyLift lift = compute_apery_lift(s);
    j["lift_generators"] = lift.lift_generators;
    Json lifts = Json::array();
    for (std::size_t r = 0; r < lift.elements.size(); ++r) {
      lifts.push_back(Json{{"a", lift.elements[r]}, {"lift", lift.lifts[r]}});
    }
    j["lifts"] = lifts;
    j["closure_ok"] = lift.closure_ok;
    if (!lift.closure_ok) code = kExitFinding;
  }
  print(j);
  return code;
}

int cmd_wilf(const std::string& gens) {
  const auto s = semigroup_of(gens);
  Json j;
  j["generators"] = s.generators();
  j["d"] = s.d();
  j["wilf_ratio"] = to_string(s.wilf_ratio());
  j["bound"] = to_string(make_rational(s.d(), s.d() + 1));
  j["wilf_holds"] = s.wilf_holds();
  print(j);
  return s.wilf_holds() ? kExitOk : kExitFinding;
}

int cmd_agraded(const std::string& gens) {
  const auto s = semigroup_of(gens);
  const AGradedPartition part = compute_a_partition(s);
  const AGradedResult graded = is_a_graded(s);
  Json j;
  j["generators"] = s.generators();
  j["rho"] = s.rho();
  j["classes"] = part.classes;
  j["degree_sum"] = part.degree_sum();
  j["omega_plus_rho"] = s.genus() + s.rho();
  j["degree_identity_ok"] = part.degree_identity_ok;
  j["a_graded"] = graded.graded;
  j["witness"] = witness_json(graded.witness);
  if (!s.is_whole_naturals()) {
    const auto p = prop41_check(s);
    j["wilf_holds"] = p.wilf_holds;
    j["prop41_consistent"] = p.consistent;
    if (!p.consistent) {
      print(j);
      return kExitFinding;
    }
  }
  print(j);
  return part.degree_identity_ok ? kExitOk : kExitFinding;
}

int cmd_eq13(const std::string& gens) {
  const auto s = semigroup_of(gens);
  const Eq13Result r = eq13_check(s);
  Json j;
  j["generators"] = s.generators();
  j["strip_counts"] = semigroup_strip_counts(s).counts;
  j["h_s"] = to_string(r.h_s);
  j["omega_over_c"] = to_string(r.wilf);
  j["equal"] = r.equal;
  print(j);
  return r.equal ? kExitOk : kExitFinding;
}

int cmd_questions(const std::string& gens, std::int64_t n_max) {
  const auto s = semigroup_of(gens);
  const QuestionsReport rep = questions_scan(s, n_max);
  std::cout << "# gamma = g_i/g_0 for " << Json(s.generators()).dump() << ", bound d/(d+1) = " << to_string(rep.bound)
            << ", window n = " << rep.n0 << ".." << rep.n_max << '\n';
  std::cout << "n,h,exceeds\n";
  for (const auto& row : rep.rows) {
    std::cout << row.n << ',' << to_string(row.h) << ',' << (row.exceeds ? "true" : "false") << '\n';
  }
  auto yes = [](bool b) { return b ? "true" : "false"; };
  std::cout << "# (i)   h(n) <= bound for every n in the window: " << yes(rep.all_rows_within) << '\n';
  std::cout << "# (ii)  h(n0) <= bound: " << yes(rep.at_n0_within) << '\n';
  if (rep.tail_start <= rep.n_max) {
    std::cout << "# (iii) h(n) <= bound on [" << rep.tail_start << ", " << rep.n_max
              << "] (window only, no asymptotic claim)\n";
  } else {
    std::cout << "# (iii) the last row of the window exceeds the bound (window only, no asymptotic claim)\n";
  }
  return kExitOk;
}

int cmd_hratio(const std::string& gamma_text, std::int64_t n) {
  const auto gamma = WeightVector::parse(gamma_text);
  const Rational h = h_ratio(gamma, n);
  const auto d = static_cast<std::int64_t>(gamma.dim());
  const Rational bound = make_rational(d, d + 1);
  std::cout << to_string(h) << '\n';
  std::cout << (h > bound ? "exceeds" : "within") << " d/(d+1) = " << to_string(bound) << '\n';
  return kExitOk;
}

int cmd_scan(const std::string& gamma_text, std::int64_t n_max, std::int64_t stride, const std::string& csv_path) {
  const auto gamma = WeightVector::parse(gamma_text);
  const auto rows = asymptotic_scan(gamma, n_max, stride);
  std::ofstream file;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) throw Error(ErrorCode::IoError, "cannot open '" + csv_path + "' for writing");
  }
  std::ostream& out = csv_path.empty() ? std::cout : file;
  const auto d = static_cast<std::int64_t>(gamma.dim());
  out << "n,h,q,mean_over_max,limit\n";
  for (const auto& row : rows) {
    out << row.n << ',' << to_string(row.h) << ',' << to_string(row.q) << ','
        << (row.mean_over_max ? to_string(*row.mean_over_max) : "") << ',' << to_string(make_rational(d, d + 1))
        << '\n';
  }
  if (!out) throw Error(ErrorCode::IoError, "write failed");
  return kExitOk;
}

int cmd_hilbert(const std::string& degrees_text, std::int64_t n_max, bool check_123) {
  const auto degrees = parse_int_list(degrees_text);
  if (check_123 && degrees != std::vector<std::int64_t>{1, 2, 3}) {
    throw Error(ErrorCode::ParseError, "--check-123 needs --degrees 1,2,3");
  }
  const auto series = series_coefficients(degrees, n_max);
  bool mismatch = false;
  std::cout << (check_123 ? "j,h_j,closed_form\n" : "j,h_j\n");
  for (std::int64_t j = 0; j <= n_max; ++j) {
    const auto h = series.coeffs[static_cast<std::size_t>(j)];
    std::cout << j << ',' << h;
    if (check_123) {
      const std::int64_t closed = closed_form_123(j);
      mismatch |= closed != static_cast<std::int64_t>(h);
      std::cout << ',' << closed;
    }
    std::cout << '\n';
  }
  if (check_123) std::cout << "# closed form " << (mismatch ? "DISAGREES" : "agrees") << " for j <= " << n_max << '\n';
  return mismatch ? kExitFinding : kExitOk;
}

int cmd_family(char which, const std::string& range_text) {
  const auto [lo, hi] = parse_range(range_text);
  bool all_ok = true;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const FamilyCheck f = which == 'a' ? verify_family_a(k) : verify_family_b(k);
    const auto s = NumericalSemigroup::from_generators(f.generators);
    Json j;
    j[which == 'a' ? "n" : "p"] = k;
    j["generators"] = f.generators;
    j["c"] = s.conductor();
    j["n0"] = s.n0();
    j["rho"] = s.rho();
    j["t"] = s.type();
    j["wilf_ratio"] = to_string(s.wilf_ratio());
    j["minimal"] = f.minimal;
    j["conductor_ok"] = f.conductor_ok;
    if (which == 'a') {
      j["n0_ok"] = f.n0_ok;
      j["rho_ok"] = f.rho_ok;
    }
    j["type_ok"] = f.type_ok;
    j["a_graded"] = f.a_graded;
    j["eq13_ok"] = f.eq13_ok ? Json(*f.eq13_ok) : Json(nullptr);
    j["wilf_holds"] = f.wilf_holds;
    j["ok"] = f.all_ok();
    all_ok &= f.all_ok();
    std::cout << j.dump() << '\n';
  }
  return all_ok ? kExitOk : kExitFinding;
}

struct CorpusOptions {
  std::int64_t genus_max = -1;
  std::int64_t multiplicity_max = -1;
  std::string file;
  std::string checks = "all";
  std::string out = "-";
  std::string format = "csv";
  unsigned workers = 0;
};

int cmd_corpus(const CorpusOptions& o) {
  CorpusSpec spec;
  const int modes = (o.genus_max >= 0) + (o.multiplicity_max >= 0) + !o.file.empty();
  if (modes != 1) throw Error(ErrorCode::ParseError, "give exactly one of --genus-max, --multiplicity-max, --file");
  if (!o.file.empty()) {
    spec.mode = CorpusMode::File;
    spec.path = o.file;
  } else if (o.genus_max >= 0) {
    spec.mode = CorpusMode::GenusBound;
    spec.bound = o.genus_max;
  } else {
    spec.mode = CorpusMode::MultiplicityBound;
    spec.bound = o.multiplicity_max;
  }
  spec.checks = CheckSet::parse(o.checks);
  const ReportFormat format = parse_report_format(o.format);
  const unsigned workers = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  const CorpusResult result = run_corpus(spec, workers);
  write_report(result.records, format, o.out);
  std::cerr << summary_json(result.summary) << '\n';
  return result.summary.has_findings() ? kExitFinding : kExitOk;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::IoError ? kExitIo : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wilfkit: exact computations around Wilf's question on numerical semigroups"};
  app.require_subcommand(1);

  std::string gens;
  bool with_lift = false;
  std::int64_t n_max = 0;

  auto* info = app.add_subcommand("info", "invariants of a numerical semigroup (JSON)");
  info->add_option("--gens", gens, "comma-separated generators")->required();

  auto* apery = app.add_subcommand("apery", "Apéry set, optionally with LEX-minimal lifts");
  apery->add_option("--gens", gens, "comma-separated generators")->required();
  apery->add_flag("--lift", with_lift, "include LEX-minimal lifts over g_1..g_d");

  auto* wilf = app.add_subcommand("wilf", "Omega/c and Wilf's inequality");
  wilf->add_option("--gens", gens, "comma-separated generators")->required();

  auto* agraded = app.add_subcommand("agraded", "A_i partition and the A-graded predicate");
  agraded->add_option("--gens", gens, "comma-separated generators")->required();

  auto* eq13 = app.add_subcommand("eq13", "h(S) against Omega/c (requires g_0 | c)");
  eq13->add_option("--gens", gens, "comma-separated generators")->required();

  auto* questions = app.add_subcommand("questions", "scan h(n, g/g_0) for n = n_0..N");
  questions->add_option("--gens", gens, "comma-separated generators")->required();
  questions->add_option("--n-max", n_max, "last n of the window")->required();

  std::string gamma;
  std::int64_t n = 0;
  std::int64_t stride = 1;
  std::string csv_path;
  auto* weights = app.add_subcommand("weights", "weighted lattice strips");
  weights->require_subcommand(1);
  auto* hratio = weights->add_subcommand("hratio", "exact h(n, gamma)");
  hratio->add_option("--gamma", gamma, "comma-separated rationals p/q or integers")->required();
  hratio->add_option("--n", n, "n > 0")->required();
  auto* scan = weights->add_subcommand("scan", "h, q and mean/max at n = K, 2K, ..., N");
  scan->add_option("--gamma", gamma, "comma-separated rationals p/q or integers")->required();
  scan->add_option("--n-max", n_max, "largest n")->required();
  scan->add_option("--stride", stride, "row spacing K")->required();
  scan->add_option("--csv", csv_path, "write the table to PATH instead of stdout");

  std::string degrees;
  bool check_123 = false;
  auto* hilbert = app.add_subcommand("hilbert", "coefficients of 1/prod(1 - z^deg)");
  hilbert->add_option("--degrees", degrees, "comma-separated positive integers")->required();
  hilbert->add_option("--n-max", n_max, "last coefficient")->required();
  hilbert->add_flag("--check-123", check_123, "compare with floor(n^2/12 + n/2) + 1 (degrees 1,2,3)");

  std::string range;
  auto* family = app.add_subcommand("family", "construct and verify the A-graded example families");
  family->require_subcommand(1);
  auto* fam_a = family->add_subcommand("a", "<n^2, n^2+1, n^2+n, n^2+n+1>, n >= 3");
  fam_a->add_option("--n-range", range, "A..B")->required();
  auto* fam_b = family->add_subcommand("b", "<p, 2p+1, 2p+3, 3p+4>, p >= 9");
  fam_b->add_option("--p-range", range, "A..B")->required();

  CorpusOptions corpus_opts;
  auto* corpus = app.add_subcommand("corpus", "batch verification over a semigroup corpus");
  corpus->add_option("--genus-max", corpus_opts.genus_max, "all semigroups of genus <= G");
  corpus->add_option("--multiplicity-max", corpus_opts.multiplicity_max,
                     "all semigroups with multiplicity <= M and conductor <= 2M");
  corpus->add_option("--file", corpus_opts.file, "one comma-separated generator list per line");
  corpus->add_option("--checks", corpus_opts.checks, "wilf,agraded,zhai_identity,eq13,closure,prop41 or all");
  corpus->add_option("--out", corpus_opts.out, "output path, - for stdout");
  corpus->add_option("--format", corpus_opts.format, "csv or jsonl");
  corpus->add_option("--workers", corpus_opts.workers, "worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info) return cmd_info(gens);
    if (*apery) return cmd_apery(gens, with_lift);
    if (*wilf) return cmd_wilf(gens);
    if (*agraded) return cmd_agraded(gens);
    if (*eq13) return cmd_eq13(gens);
    if (*questions) return cmd_questions(gens, n_max);
    if (*hratio) return cmd_hratio(gamma, n);
    if (*scan) return cmd_scan(gamma, n_max, stride, csv_path);
    if (*hilbert) return cmd_hilbert(degrees, n_max, check_123);
    if (*fam_a) return cmd_family('a', range);
    if (*fam_b) return cmd_family('b', range);
    if (*corpus) return cmd_corpus(corpus_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}
