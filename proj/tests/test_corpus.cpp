#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "wilfkit/corpus.hpp"
#include "wilfkit/error.hpp"
#include "wilfkit/report.hpp"

using namespace wilfkit;

namespace {

std::vector<std::uint64_t> genus_histogram(std::int64_t g_max) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g_max + 1), 0);
  for_each_semigroup_by_genus(g_max, [&](const std::vector<std::int64_t>&, std::int64_t g) {
    ++counts[static_cast<std::size_t>(g)];
  });
  return counts;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("wilfkit_test_" + name)).string();
}

std::string render(const std::vector<VerificationRecord>& records, ReportFormat format) {
  std::ostringstream out;
  write_report(records, format, out);
  return out.str();
}

}  // namespace

TEST_CASE("enumerate_by_genus small bounds") {
  const auto only_n = enumerate_by_genus(0);
  REQUIRE(only_n.size() == 1);
  CHECK(only_n.front().is_whole_naturals());

  const auto three = enumerate_by_genus(3);
  CHECK(three.size() == 8);
  std::set<std::vector<std::int64_t>> genus3;
  for (const auto& s : three) {
    if (s.genus() == 3) genus3.insert(s.generators());
  }
  CHECK(genus3 == std::set<std::vector<std::int64_t>>{{4, 5, 6, 7}, {3, 5, 7}, {3, 4}, {2, 7}});
}

TEST_CASE("genus counts match the known sequence and two independent recounts") {
  const std::vector<std::uint64_t> known{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204};
  CHECK(genus_histogram(10) == known);
  CHECK(oracle::genus_counts_breadth_first(10) == known);
  for (int g = 0; g <= 9; ++g) CHECK(oracle::semigroups_of_genus_by_gap_sets(g) == known[static_cast<std::size_t>(g)]);
}

TEST_CASE("every semigroup is emitted once") {
  std::set<std::vector<std::int64_t>> seen;
  for_each_semigroup_by_genus(12, [&](const std::vector<std::int64_t>& gens, std::int64_t g) {
    CHECK(seen.insert(gens).second);
    CHECK(NumericalSemigroup::from_generators(gens).genus() == g);
    CHECK(NumericalSemigroup::from_generators(gens).generators() == gens);
  });
  CHECK(seen.size() == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204 + 343 + 592);
}

TEST_CASE("enumeration cap") {
  try {
    for_each_semigroup_by_genus(60, [](const std::vector<std::int64_t>&, std::int64_t) {});
    FAIL("expected BoundTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundTooLarge);
  }
  CHECK_THROWS_AS(enumerate_by_genus(10, 100), Error);
}

TEST_CASE("enumerate_by_multiplicity") {
  const auto all = enumerate_by_multiplicity(4);
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& s : all) {
    CHECK(s.multiplicity() <= 4);
    CHECK(s.conductor() <= 8);
    CHECK(seen.insert(s.generators()).second);
  }
  // Brute force over the same family: gap sets inside [1, 7].
  std::size_t expected = 0;
  for (const auto& s : enumerate_by_genus(8)) {
    if (s.multiplicity() <= 4 && s.conductor() <= 8) ++expected;
  }
  CHECK(all.size() == expected);
}

TEST_CASE("CheckSet parsing") {
  CHECK(CheckSet::parse("all").has(Check::Prop41));
  const auto some = CheckSet::parse("wilf, eq13");
  CHECK(some.has(Check::Wilf));
  CHECK(some.has(Check::Eq13));
  CHECK_FALSE(some.has(Check::Closure));
  CHECK_THROWS_AS(CheckSet::parse("bogus"), Error);
  CHECK_THROWS_AS(CheckSet::parse(""), Error);
}

TEST_CASE("verify_semigroup on <9,10,12,13>") {
  const auto r = verify_semigroup(NumericalSemigroup::from_generators({9, 10, 12, 13}), CheckSet::all());
  CHECK(r.generators == std::vector<std::int64_t>{9, 10, 12, 13});
  CHECK(r.conductor == 18);
  CHECK(r.genus == 13);
  CHECK(r.type == 5);
  CHECK(r.rho == 0);
  CHECK(r.wilf_ratio == "13/18");
  CHECK(r.wilf_holds == true);
  CHECK(r.a_graded == true);
  CHECK_FALSE(r.a_graded_witness.has_value());
  CHECK(r.degree_identity_ok == true);
  CHECK(r.closure_ok == true);
  CHECK(r.eq13_ok == true);
  CHECK(r.prop41_consistent == true);
  CHECK_FALSE(r.tripwire());

  const auto partial = verify_semigroup(NumericalSemigroup::from_generators({3, 5, 7}), CheckSet::parse("wilf"));
  CHECK(partial.wilf_holds.has_value());
  CHECK_FALSE(partial.a_graded.has_value());
  CHECK_FALSE(partial.eq13_ok.has_value());

  const auto n = verify_semigroup(NumericalSemigroup::from_generators({1}), CheckSet::all());
  CHECK(n.wilf_holds == true);
  CHECK_FALSE(n.wilf_ratio.has_value());
  CHECK_FALSE(n.type.has_value());
  CHECK_FALSE(n.closure_ok.has_value());
}

TEST_CASE("run_corpus from a file") {
  const auto path = temp_path("single.txt");
  {
    std::ofstream out(path);
    out << "# one semigroup\n\n9,10,12,13  # family a) n=3\n";
  }
  CorpusSpec spec;
  spec.mode = CorpusMode::File;
  spec.path = path;
  const auto result = run_corpus(spec, 2);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].a_graded == true);
  CHECK(result.records[0].wilf_ratio == "13/18");
  CHECK(result.summary.total == 1);
  CHECK_FALSE(result.summary.has_findings());

  const std::string csv = render(result.records, ReportFormat::Csv);
  std::istringstream lines(csv);
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == csv_header());
  const auto fields = split_csv_line(row);
  const auto names = split_csv_line(header);
  REQUIRE(fields.size() == names.size());
  CHECK(fields[0] == "9,10,12,13");
  CHECK(fields[5] == "13/18");
  std::remove(path.c_str());
}

TEST_CASE("run_corpus captures bad input lines without aborting") {
  const auto result = run_corpus({{4, 6}, {2, 3}, {}}, CheckSet::all(), 3);
  CHECK(result.summary.total == 3);
  CHECK(result.summary.item_errors == 2);
  CHECK(result.summary.tripwire_failures == 0);
  CHECK_FALSE(result.summary.has_findings());
  std::size_t with_error = 0;
  for (const auto& r : result.records) with_error += !r.error.empty();
  CHECK(with_error == 2);
}

TEST_CASE("missing corpus file is an IoError") {
  CorpusSpec spec;
  spec.mode = CorpusMode::File;
  spec.path = "/nonexistent/wilfkit/input.txt";
  try {
    run_corpus(spec, 1);
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("corpus output does not depend on the worker count") {
  CorpusSpec spec;
  spec.bound = 12;
  const auto one = run_corpus(spec, 1);
  const auto eight = run_corpus(spec, 8);
  CHECK(render(one.records, ReportFormat::Csv) == render(eight.records, ReportFormat::Csv));
  CHECK(render(one.records, ReportFormat::JsonLines) == render(eight.records, ReportFormat::JsonLines));
  CHECK(summary_json(one.summary) == summary_json(eight.summary));
  CHECK(one.summary.wilf_failures == 0);
  CHECK(one.summary.tripwire_failures == 0);
  CHECK(std::is_sorted(one.records.begin(), one.records.end(),
                       [](const auto& a, const auto& b) { return a.generators < b.generators; }));
}

TEST_CASE("report formats") {
  CHECK(render({}, ReportFormat::Csv) == std::string(csv_header()) + "\n");
  CHECK(render({}, ReportFormat::JsonLines).empty());

  const auto result = run_corpus({{2, 3}, {3, 5, 7}, {9, 10, 12, 13}}, CheckSet::all(), 1);
  const std::string jsonl = render(result.records, ReportFormat::JsonLines);
  std::istringstream lines(jsonl);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("generators"));
    CHECK(j["c"].is_number_integer());
    if (!j["wilf_ratio"].is_null()) CHECK(j["wilf_ratio"].is_string());
    ++count;
  }
  CHECK(count == 3);
  // <3,5,7> has rho = 1, so no eq13 field.
  const auto j = nlohmann::json::parse(jsonl.substr(jsonl.find('\n') + 1, jsonl.find('\n', jsonl.find('\n') + 1) - jsonl.find('\n') - 1));
  CHECK(j["generators"] == nlohmann::json({3, 5, 7}));
  CHECK(j["eq13_ok"].is_null());
  CHECK(j["wilf_ratio"] == "3/5");

  CHECK(parse_report_format("csv") == ReportFormat::Csv);
  CHECK(parse_report_format("jsonl") == ReportFormat::JsonLines);
  CHECK_THROWS_AS(parse_report_format("xml"), Error);
  CHECK(split_csv_line("\"a,\"\"b\",c,") == std::vector<std::string>{"a,\"b", "c", ""});
}
