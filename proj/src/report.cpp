#include "wilfkit/report.hpp"

#include <fstream>
#include <iostream>

#include "json.hpp"

#include "wilfkit/error.hpp"

namespace wilfkit {

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_generators(const std::vector<std::int64_t>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens[i]);
  }
  return out;
}

std::string text(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }
std::string text(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }
std::string text(const std::optional<std::string>& v) { return v.value_or(""); }

template <typename T>
nlohmann::json json_of(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void write_csv(std::span<const VerificationRecord> records, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& r : records) {
    const std::string fields[] = {join_generators(r.generators),
                                  std::to_string(r.conductor),
                                  std::to_string(r.genus),
                                  text(r.type),
                                  std::to_string(r.rho),
                                  text(r.wilf_ratio),
                                  text(r.wilf_holds),
                                  text(r.a_graded),
                                  text(r.a_graded_witness),
                                  text(r.degree_identity_ok),
                                  text(r.closure_ok),
                                  text(r.eq13_ok),
                                  text(r.prop41_consistent),
                                  r.error};
    bool first = true;
    for (const auto& f : fields) {
      if (!first) out << ',';
      out << csv_escape(f);
      first = false;
    }
    out << '\n';
  }
}

void write_jsonl(std::span<const VerificationRecord> records, std::ostream& out) {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["generators"] = r.generators;
    j["c"] = r.conductor;
    j["omega"] = r.genus;
    j["t"] = json_of(r.type);
    j["rho"] = r.rho;
    j["wilf_ratio"] = json_of(r.wilf_ratio);
    j["wilf_holds"] = json_of(r.wilf_holds);
    j["a_graded"] = json_of(r.a_graded);
    j["a_graded_witness"] = json_of(r.a_graded_witness);
    j["degree_identity_ok"] = json_of(r.degree_identity_ok);
    j["closure_ok"] = json_of(r.closure_ok);
    j["eq13_ok"] = json_of(r.eq13_ok);
    j["prop41_consistent"] = json_of(r.prop41_consistent);
    j["error"] = r.error.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.error);
    out << j.dump() << '\n';
  }
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "jsonl" || name == "json-lines") return ReportFormat::JsonLines;
  throw Error(ErrorCode::ParseError, "unknown report format '" + std::string(name) + "'");
}

std::string_view csv_header() {
  return "generators,c,omega,t,rho,wilf_ratio,wilf_holds,a_graded,a_graded_witness,"
         "degree_identity_ok,closure_ok,eq13_ok,prop41_consistent,error";
}

void write_report(std::span<const VerificationRecord> records, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Csv) write_csv(records, out);
  else write_jsonl(records, out);
  if (!out) throw Error(ErrorCode::IoError, "write failed");
}

void write_report(std::span<const VerificationRecord> records, ReportFormat format, const std::string& path) {
  if (path == "-") {
    write_report(records, format, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  write_report(records, format, out);
}

std::string summary_json(const CorpusSummary& s) {
  nlohmann::ordered_json j;
  j["total"] = s.total;
  j["wilf_failures"] = s.wilf_failures;
  j["a_graded"] = s.a_graded;
  j["tripwire_failures"] = s.tripwire_failures;
  j["item_errors"] = s.item_errors;
  j["per_genus"] = s.per_genus;
  return j.dump();
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

}  // namespace wilfkit
