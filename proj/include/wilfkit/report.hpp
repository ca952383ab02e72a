#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wilfkit/corpus.hpp"

namespace wilfkit {

enum class ReportFormat { Csv, JsonLines };

/// Throws ParseError for anything but "csv" or "jsonl".
ReportFormat parse_report_format(std::string_view name);

/// generators,c,omega,t,rho,wilf_ratio,wilf_holds,a_graded,a_graded_witness,
/// degree_identity_ok,closure_ok,eq13_ok,prop41_consistent,error
std::string_view csv_header();

void write_report(std::span<const VerificationRecord> records, ReportFormat format, std::ostream& out);

/// Writes to path, or standard output when path is "-". Throws IoError.
void write_report(std::span<const VerificationRecord> records, ReportFormat format, const std::string& path);

std::string summary_json(const CorpusSummary& summary);

/// Splits one CSV line into fields (RFC 4180 quoting).
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace wilfkit
