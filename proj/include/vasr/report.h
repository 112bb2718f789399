#ifndef VASR_REPORT_H_
#define VASR_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vasr/metrics.h"

namespace vasr {

// Cells are ordered by (verifier, generator, family name).
struct CellKey {
  std::string verifier;
  std::string generator;
  std::string family;

  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct CellStats {
  int64_t n_attackable = 0;
  int64_t n_raw_success = 0;
  // Screen counts, absent when the run carried no scores of that kind.
  std::optional<int64_t> n_sbert_pass;
  std::optional<int64_t> n_ppl_pass;
  int64_t n_invalid = 0;
  int64_t n_valid = 0;
  int64_t n_ev_drift = 0;
  int64_t n_scope_loss = 0;
  int64_t n_ev_ent = 0;
  int64_t n_unver_add = 0;

  Rate asr() const { return {n_raw_success, n_attackable}; }
  Rate vasr() const { return {n_valid, n_attackable}; }
  std::optional<Rate> s_asr() const;
  std::optional<Rate> p_asr() const;
};

struct RunMetadata {
  std::string config_fingerprint;
  std::string dataset_hash;
  std::string oracle;        // backend identity
  std::string premise_mode;  // atom | sentence
  double entail_threshold = 0.0;
  double sbert_threshold = 0.65;
  double ppl_threshold = 100.0;
  std::string surface_source;  // input_file | remote_service | none
  bool diagnostics = true;
  int64_t n_instances = 0;
  // Texts that fell back to the pseudo-atom during extraction.
  int64_t n_fallback_claims = 0;
  int64_t n_fallback_rewrites = 0;
};

struct RunReport {
  RunMetadata meta;
  std::map<CellKey, CellStats> cells;
};

enum class ReportFormat { kTableText, kCsv, kJsonLines, kMarkdown };

std::string_view format_name(ReportFormat f);
std::optional<ReportFormat> parse_format(std::string_view s);
std::string_view format_extension(ReportFormat f);  // txt, csv, jsonl, md

// Diagnostic cells with fewer members than this render "--".
inline constexpr int64_t kMinDiagnosticMembers = 5;

// "99.3 (145)": percentage to one decimal with the count. "--" when the
// denominator is below `min_members` (or zero).
std::string count_cell(int64_t count, int64_t denominator,
                       int64_t min_members = 1);

// Empty string when consistent, else the first violation
// (n_raw_success = n_invalid + n_valid, VASR <= ASR, screens <= ASR, ...).
std::string check_consistency(const RunReport& report);

// Deterministic: identical reports give identical bytes. An empty run
// renders only the header.
std::string render_report(const RunReport& report, ReportFormat format);

// Reads back a json_lines rendering. Throws SchemaError.
RunReport parse_report_json_lines(std::string_view text);

}  // namespace vasr

#endif  // VASR_REPORT_H_
