#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "structure/check_report.hpp"

namespace tanlift::io {

struct ResidualComponent {
  std::string index;  // e.g. "[c,cdot]"
  std::string value;
};

struct WitnessInfo {
  std::vector<std::pair<std::string, std::string>> point;  // empty: no sample hit
  std::string component;
  std::string value;
};

enum class Verdict { Pass, Fail, Info };

const char* to_string(Verdict v);

struct ReportRow {
  std::string name;
  std::string tag;
  Verdict verdict = Verdict::Info;
  std::vector<ResidualComponent> residual;  // nonzero components only
  std::optional<WitnessInfo> witness;
};

struct LedgerRow {
  int epsilon;
  std::string signature;
  int s;
  int t;
  std::optional<bool> predicted;
  bool pass;
  std::optional<WitnessInfo> witness;
};

struct ReportSection {
  std::string task;
  std::string title;
  bool informational = false;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
  std::vector<structure::Erratum> errata;
  std::vector<LedgerRow> ledger;
  std::optional<std::string> error;

  bool passed() const;
};

struct Report {
  std::uint64_t seed = structure::kDefaultSeed;
  std::string mode;
  std::vector<ReportSection> sections;

  bool passed() const;
  int exit_status() const { return passed() ? 0 : 1; }
};

ResidualComponent residual_component(const tensor::TensorField& t, std::size_t flat_index);
std::vector<ResidualComponent> nonzero_components(const tensor::TensorField& t);
WitnessInfo witness_info(const tensor::TensorField& residual, const tensor::Witness& w);

/// Appends rows, notes and errata of a check report to a section.
void append_check(ReportSection& section, const structure::CheckReport& report);

std::string render_human(const Report& report);
/// Single JSON document, two-space indented, keys in a fixed order.
std::string render_machine(const Report& report);

}  // namespace tanlift::io
