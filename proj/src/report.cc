#include "vasr/report.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "vasr/errors.h"
#include "vasr/modifier.h"

namespace vasr {
namespace {

using nlohmann::json;
using Row = std::vector<std::string>;

const Row kHeader = {"Verifier", "Generator", "Family",    "N",
                     "Raw",      "ASR",       "S-ASR",     "P-ASR",
                     "VASR",     "Invalid",   "Valid",     "EvDrift",
                     "ScopeLoss", "EvEnt",    "UnverAdd"};

// Fixed CSV column order.
const Row kCsvHeader = {
    "verifier",     "generator",    "attack_family", "n_attackable",
    "n_raw_success", "asr",         "s_asr",         "p_asr",
    "vasr",         "n_invalid",    "n_valid",       "n_ev_drift",
    "n_scope_loss", "n_ev_ent",     "n_unver_add",   "rate_ev_drift",
    "rate_scope_loss", "rate_ev_ent", "rate_unver_add"};

// Code points, so UTF-8 names still line up.
size_t display_width(const std::string& s) {
  return static_cast<size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
}

std::string rate_or(const std::optional<Rate>& r, const char* missing) {
  if (!r || r->denominator <= 0) return missing;
  return r->format(2);
}

// Percentage of a diagnostic count, "--" under the member threshold.
std::string diag_rate(int64_t count, int64_t members) {
  if (members < kMinDiagnosticMembers) return "--";
  return format_percent(count, members, 2);
}

Row table_row(const CellKey& k, const CellStats& c, bool diagnostics) {
  Row r = {k.verifier,
           k.generator,
           k.family,
           std::to_string(c.n_attackable),
           std::to_string(c.n_raw_success),
           rate_or(c.asr(), "--"),
           rate_or(c.s_asr(), "n/a"),
           rate_or(c.p_asr(), "n/a"),
           rate_or(c.vasr(), "--"),
           count_cell(c.n_invalid, c.n_raw_success),
           count_cell(c.n_valid, c.n_raw_success)};
  if (!diagnostics) {
    for (int i = 0; i < 4; ++i) r.push_back("n/a");
    return r;
  }
  r.push_back(count_cell(c.n_ev_drift, c.n_invalid, kMinDiagnosticMembers));
  r.push_back(count_cell(c.n_scope_loss, c.n_invalid, kMinDiagnosticMembers));
  r.push_back(count_cell(c.n_ev_ent, c.n_valid, kMinDiagnosticMembers));
  r.push_back(count_cell(c.n_unver_add, c.n_valid, kMinDiagnosticMembers));
  return r;
}

Row csv_row(const CellKey& k, const CellStats& c, bool diagnostics) {
  Row r = {k.verifier,
           k.generator,
           k.family,
           std::to_string(c.n_attackable),
           std::to_string(c.n_raw_success),
           rate_or(c.asr(), "--"),
           rate_or(c.s_asr(), "n/a"),
           rate_or(c.p_asr(), "n/a"),
           rate_or(c.vasr(), "--"),
           std::to_string(c.n_invalid),
           std::to_string(c.n_valid)};
  if (!diagnostics) {
    for (int i = 0; i < 8; ++i) r.push_back("n/a");
    return r;
  }
  r.push_back(std::to_string(c.n_ev_drift));
  r.push_back(std::to_string(c.n_scope_loss));
  r.push_back(std::to_string(c.n_ev_ent));
  r.push_back(std::to_string(c.n_unver_add));
  r.push_back(diag_rate(c.n_ev_drift, c.n_invalid));
  r.push_back(diag_rate(c.n_scope_loss, c.n_invalid));
  r.push_back(diag_rate(c.n_ev_ent, c.n_valid));
  r.push_back(diag_rate(c.n_unver_add, c.n_valid));
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::pair<std::string, std::string>> meta_pairs(
    const RunMetadata& m) {
  return {{"config_fingerprint", m.config_fingerprint},
          {"dataset_hash", m.dataset_hash},
          {"oracle", m.oracle},
          {"premise_mode", m.premise_mode},
          {"entail_threshold", canonical_number(m.entail_threshold)},
          {"sbert_threshold", canonical_number(m.sbert_threshold)},
          {"ppl_threshold", canonical_number(m.ppl_threshold)},
          {"surface_source", m.surface_source},
          {"diagnostics", m.diagnostics ? "on" : "off"},
          {"instances", std::to_string(m.n_instances)},
          {"fallback_claims", std::to_string(m.n_fallback_claims)},
          {"fallback_rewrites", std::to_string(m.n_fallback_rewrites)}};
}

std::string render_table(const RunReport& rep) {
  std::vector<Row> rows = {kHeader};
  for (const auto& [k, c] : rep.cells) {
    rows.push_back(table_row(k, c, rep.meta.diagnostics));
  }
  std::vector<size_t> width(kHeader.size(), 0);
  for (const Row& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) {
      width[i] = std::max(width[i], display_width(r[i]));
    }
  }
  std::string out;
  for (const auto& [k, v] : meta_pairs(rep.meta)) out += "# " + k + ": " + v + "\n";
  for (const Row& r : rows) {
    std::string line;
    for (size_t i = 0; i < r.size(); ++i) {
      // Text columns left-aligned, numbers right-aligned.
      size_t pad = width[i] - display_width(r[i]);
      if (i < 3) {
        line += r[i] + std::string(pad, ' ');
      } else {
        line += std::string(pad, ' ') + r[i];
      }
      if (i + 1 < r.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_markdown(const RunReport& rep) {
  std::string out;
  for (const auto& [k, v] : meta_pairs(rep.meta)) {
    out += "- " + k + ": `" + v + "`\n";
  }
  out += "\n";
  auto emit = [&](const Row& r) {
    out += "|";
    for (const auto& cell : r) out += " " + cell + " |";
    out += "\n";
  };
  emit(kHeader);
  out += "|";
  for (size_t i = 0; i < kHeader.size(); ++i) out += i < 3 ? " --- |" : " ---: |";
  out += "\n";
  for (const auto& [k, c] : rep.cells) emit(table_row(k, c, rep.meta.diagnostics));
  return out;
}

std::string render_csv(const RunReport& rep) {
  std::string out;
  auto emit = [&](const Row& r) {
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += csv_field(r[i]);
    }
    out += "\n";
  };
  emit(kCsvHeader);
  for (const auto& [k, c] : rep.cells) emit(csv_row(k, c, rep.meta.diagnostics));
  return out;
}

json rate_json(const std::optional<Rate>& r) {
  if (!r || r->denominator <= 0) return nullptr;
  return std::stod(r->format(2));
}

json opt_json(const std::optional<int64_t>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string render_json_lines(const RunReport& rep) {
  const RunMetadata& m = rep.meta;
  json meta = {{"type", "metadata"},
               {"config_fingerprint", m.config_fingerprint},
               {"dataset_hash", m.dataset_hash},
               {"oracle", m.oracle},
               {"premise_mode", m.premise_mode},
               {"entail_threshold", m.entail_threshold},
               {"sbert_threshold", m.sbert_threshold},
               {"ppl_threshold", m.ppl_threshold},
               {"surface_source", m.surface_source},
               {"diagnostics", m.diagnostics},
               {"n_instances", m.n_instances},
               {"n_fallback_claims", m.n_fallback_claims},
               {"n_fallback_rewrites", m.n_fallback_rewrites}};
  std::string out = meta.dump() + "\n";
  for (const auto& [k, c] : rep.cells) {
    json j = {{"type", "cell"},
              {"verifier", k.verifier},
              {"generator", k.generator},
              {"attack_family", k.family},
              {"n_attackable", c.n_attackable},
              {"n_raw_success", c.n_raw_success},
              {"n_sbert_pass", opt_json(c.n_sbert_pass)},
              {"n_ppl_pass", opt_json(c.n_ppl_pass)},
              {"n_invalid", c.n_invalid},
              {"n_valid", c.n_valid},
              {"asr", rate_json(c.asr())},
              {"s_asr", rate_json(c.s_asr())},
              {"p_asr", rate_json(c.p_asr())},
              {"vasr", rate_json(c.vasr())}};
    if (m.diagnostics) {
      j["n_ev_drift"] = c.n_ev_drift;
      j["n_scope_loss"] = c.n_scope_loss;
      j["n_ev_ent"] = c.n_ev_ent;
      j["n_unver_add"] = c.n_unver_add;
      auto rate = [](int64_t n, int64_t d) -> json {
        if (d < kMinDiagnosticMembers) return nullptr;
        return std::stod(format_percent(n, d, 2));
      };
      j["rate_ev_drift"] = rate(c.n_ev_drift, c.n_invalid);
      j["rate_scope_loss"] = rate(c.n_scope_loss, c.n_invalid);
      j["rate_ev_ent"] = rate(c.n_ev_ent, c.n_valid);
      j["rate_unver_add"] = rate(c.n_unver_add, c.n_valid);
    }
    out += j.dump() + "\n";
  }
  return out;
}

template <typename T>
T field(const json& j, const char* key, int line) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(key, "missing field", line);
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw SchemaError(key, "wrong type", line);
  }
}

std::optional<int64_t> opt_field(const json& j, const char* key, int line) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw SchemaError(key, "expected integer", line);
  return it->get<int64_t>();
}

}  // namespace

std::optional<Rate> CellStats::s_asr() const {
  if (!n_sbert_pass) return std::nullopt;
  return Rate{*n_sbert_pass, n_attackable};
}

std::optional<Rate> CellStats::p_asr() const {
  if (!n_ppl_pass) return std::nullopt;
  return Rate{*n_ppl_pass, n_attackable};
}

std::string_view format_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::kTableText:
      return "table_text";
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kJsonLines:
      return "json_lines";
    case ReportFormat::kMarkdown:
      return "markdown";
  }
  return "table_text";
}

std::optional<ReportFormat> parse_format(std::string_view s) {
  for (ReportFormat f : {ReportFormat::kTableText, ReportFormat::kCsv,
                         ReportFormat::kJsonLines, ReportFormat::kMarkdown}) {
    if (format_name(f) == s) return f;
  }
  return std::nullopt;
}

std::string_view format_extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::kTableText:
      return "txt";
    case ReportFormat::kCsv:
      return "csv";
    case ReportFormat::kJsonLines:
      return "jsonl";
    case ReportFormat::kMarkdown:
      return "md";
  }
  return "txt";
}

std::string count_cell(int64_t count, int64_t denominator, int64_t min_members) {
  if (denominator <= 0 || denominator < min_members) return "--";
  return format_percent(count, denominator, 1) + " (" + std::to_string(count) +
         ")";
}

std::string check_consistency(const RunReport& report) {
  for (const auto& [k, c] : report.cells) {
    std::string where = k.verifier + "/" + k.generator + "/" + k.family + ": ";
    if (c.n_raw_success != c.n_invalid + c.n_valid) {
      return where + "n_raw_success != n_invalid + n_valid";
    }
    if (c.n_raw_success > c.n_attackable) {
      return where + "more raw successes than attackable instances";
    }
    if (c.n_sbert_pass && *c.n_sbert_pass > c.n_raw_success) {
      return where + "S-ASR exceeds ASR";
    }
    if (c.n_ppl_pass && *c.n_ppl_pass > c.n_raw_success) {
      return where + "P-ASR exceeds ASR";
    }
    if (report.meta.diagnostics &&
        (c.n_ev_drift > c.n_invalid || c.n_scope_loss > c.n_invalid ||
         c.n_ev_ent > c.n_valid || c.n_unver_add > c.n_valid)) {
      return where + "diagnostic count exceeds its side";
    }
  }
  return "";
}

std::string render_report(const RunReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kTableText:
      return render_table(report);
    case ReportFormat::kCsv:
      return render_csv(report);
    case ReportFormat::kJsonLines:
      return render_json_lines(report);
    case ReportFormat::kMarkdown:
      return render_markdown(report);
  }
  return render_table(report);
}

RunReport parse_report_json_lines(std::string_view text) {
  RunReport rep;
  std::istringstream in{std::string(text)};
  std::string s;
  int line = 0;
  bool have_meta = false;
  while (std::getline(in, s)) {
    ++line;
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(s);
    } catch (const json::parse_error& e) {
      throw SchemaError("", std::string("malformed JSON: ") + e.what(), line);
    }
    std::string type = field<std::string>(j, "type", line);
    if (type == "metadata") {
      RunMetadata& m = rep.meta;
      m.config_fingerprint = field<std::string>(j, "config_fingerprint", line);
      m.dataset_hash = field<std::string>(j, "dataset_hash", line);
      m.oracle = field<std::string>(j, "oracle", line);
      m.premise_mode = field<std::string>(j, "premise_mode", line);
      m.entail_threshold = field<double>(j, "entail_threshold", line);
      m.sbert_threshold = field<double>(j, "sbert_threshold", line);
      m.ppl_threshold = field<double>(j, "ppl_threshold", line);
      m.surface_source = field<std::string>(j, "surface_source", line);
      m.diagnostics = field<bool>(j, "diagnostics", line);
      m.n_instances = field<int64_t>(j, "n_instances", line);
      m.n_fallback_claims = field<int64_t>(j, "n_fallback_claims", line);
      m.n_fallback_rewrites = field<int64_t>(j, "n_fallback_rewrites", line);
      have_meta = true;
    } else if (type == "cell") {
      CellKey k{field<std::string>(j, "verifier", line),
                field<std::string>(j, "generator", line),
                field<std::string>(j, "attack_family", line)};
      CellStats c;
      c.n_attackable = field<int64_t>(j, "n_attackable", line);
      c.n_raw_success = field<int64_t>(j, "n_raw_success", line);
      c.n_sbert_pass = opt_field(j, "n_sbert_pass", line);
      c.n_ppl_pass = opt_field(j, "n_ppl_pass", line);
      c.n_invalid = field<int64_t>(j, "n_invalid", line);
      c.n_valid = field<int64_t>(j, "n_valid", line);
      c.n_ev_drift = opt_field(j, "n_ev_drift", line).value_or(0);
      c.n_scope_loss = opt_field(j, "n_scope_loss", line).value_or(0);
      c.n_ev_ent = opt_field(j, "n_ev_ent", line).value_or(0);
      c.n_unver_add = opt_field(j, "n_unver_add", line).value_or(0);
      if (!rep.cells.emplace(std::move(k), c).second) {
        throw SchemaError("", "duplicate cell", line);
      }
    } else {
      throw SchemaError("type", "unknown record type '" + type + "'", line);
    }
  }
  if (!have_meta) throw SchemaError("type", "no metadata record");
  return rep;
}

}  // namespace vasr
