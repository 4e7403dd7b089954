#include "io/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tanlift::io {

using tensor::TensorField;
using tensor::Valence;

namespace {

std::string sign_text(int v) { return v < 0 ? "-1" : "+1"; }

std::string witness_text(const WitnessInfo& w) {
  if (w.point.empty()) return "nonzero symbolically at " + w.component + " (no sampled point hit)";
  std::string out = "at {";
  for (std::size_t i = 0; i < w.point.size(); ++i) {
    if (i) out += ", ";
    out += w.point[i].first + "=" + w.point[i].second;
  }
  return out + "} component " + w.component + " = " + w.value;
}

nlohmann::ordered_json witness_json(const std::optional<WitnessInfo>& w) {
  if (!w) return nullptr;
  nlohmann::ordered_json point = nullptr;
  if (!w->point.empty()) {
    point = nlohmann::ordered_json::object();
    for (const auto& [k, v] : w->point) point[k] = v;
  }
  nlohmann::ordered_json out;
  out["point"] = point;
  out["component"] = w->component;
  out["value"] = w->value;
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Info: return "INFO";
  }
  return "?";
}

bool ReportSection::passed() const {
  if (error) return false;
  if (informational) return true;
  return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.verdict == Verdict::Fail; });
}

bool Report::passed() const {
  return std::all_of(sections.begin(), sections.end(), [](const ReportSection& s) { return s.passed(); });
}

ResidualComponent residual_component(const TensorField& t, std::size_t flat) {
  const auto& ch = t.chart();
  std::string index;
  switch (t.valence()) {
    case Valence::Scalar: index = "[]"; break;
    case Valence::Vector:
    case Valence::OneForm: index = "[" + ch.coord(flat) + "]"; break;
    case Valence::Endo:
    case Valence::Bilinear:
      index = "[" + ch.coord(flat / ch.dim()) + "," + ch.coord(flat % ch.dim()) + "]";
      break;
  }
  return {index, t.components()[flat].str()};
}

std::vector<ResidualComponent> nonzero_components(const TensorField& t) {
  std::vector<ResidualComponent> out;
  for (std::size_t i = 0; i < t.components().size(); ++i) {
    if (!t.components()[i].is_zero()) out.push_back(residual_component(t, i));
  }
  return out;
}

WitnessInfo witness_info(const TensorField& residual, const tensor::Witness& w) {
  WitnessInfo out;
  if (w.point) {
    for (std::size_t i = 0; i < w.point->values.size(); ++i) {
      out.point.emplace_back(w.point->chart.coord(i), w.point->values[i].get_str());
    }
  }
  out.component = residual_component(residual, w.component).index;
  out.value = w.point ? w.value.get_str() : residual.components()[w.component].str();
  return out;
}

void append_check(ReportSection& section, const structure::CheckReport& report) {
  for (const auto& e : report.entries) {
    ReportRow row;
    row.name = e.name;
    row.tag = e.tag;
    row.verdict = e.pass ? Verdict::Pass : Verdict::Fail;
    row.residual = nonzero_components(e.residual);
    if (e.witness) row.witness = witness_info(e.residual, *e.witness);
    section.rows.push_back(std::move(row));
  }
  section.notes.insert(section.notes.end(), report.notes.begin(), report.notes.end());
  section.errata.insert(section.errata.end(), report.errata.begin(), report.errata.end());
}

std::string render_human(const Report& report) {
  std::ostringstream out;
  out << "tanlift report (seed " << report.seed << ", mode " << report.mode << ")\n";
  for (const auto& s : report.sections) {
    out << "\n== " << s.task << ": " << s.title << (s.informational ? " [informational]" : "") << " ==\n";
    if (s.error) out << "ERROR: " << *s.error << "\n";
    for (const auto& r : s.rows) {
      out << r.name << " : " << to_string(r.verdict);
      if (!r.tag.empty()) out << "  " << r.tag;
      out << "\n";
      for (const auto& c : r.residual) out << "    " << (r.verdict == Verdict::Info ? "" : "residual ") << c.index << " = " << c.value << "\n";
      if (r.witness) out << "    witness " << witness_text(*r.witness) << "\n";
    }
    if (!s.ledger.empty()) {
      out << "ledger:\n";
      for (const auto& l : s.ledger) {
        out << "  eps=" << sign_text(l.epsilon) << " " << l.signature << " s=" << sign_text(l.s)
            << " t=" << sign_text(l.t) << " : " << (l.pass ? "PASS" : "FAIL");
        if (l.predicted) out << " (predicted " << (*l.predicted ? "PASS" : "FAIL") << ")";
        out << "\n";
        if (l.witness) out << "    witness " << witness_text(*l.witness) << "\n";
      }
    }
    if (!s.notes.empty()) {
      out << "notes:\n";
      for (const auto& n : s.notes) out << "  - " << n << "\n";
    }
    if (!s.errata.empty()) {
      out << "errata:\n";
      for (const auto& e : s.errata) {
        out << "  - " << e.display << "\n      printed: " << e.printed << "\n      derived: " << e.derived << "\n";
      }
    }
    out << "section: " << (s.passed() ? "PASS" : "FAIL") << "\n";
  }
  out << "\noverall: " << (report.passed() ? "PASS" : "FAIL") << " (exit " << report.exit_status() << ")\n";
  return out.str();
}

std::string render_machine(const Report& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["seed"] = report.seed;
  doc["mode"] = report.mode;
  doc["passed"] = report.passed();
  doc["exit_status"] = report.exit_status();
  ordered_json sections = ordered_json::array();
  for (const auto& s : report.sections) {
    ordered_json sec;
    sec["task"] = s.task;
    sec["title"] = s.title;
    sec["informational"] = s.informational;
    sec["passed"] = s.passed();
    sec["error"] = s.error ? ordered_json(*s.error) : ordered_json(nullptr);
    ordered_json rows = ordered_json::array();
    for (const auto& r : s.rows) {
      ordered_json row;
      row["name"] = r.name;
      row["tag"] = r.tag;
      row["verdict"] = to_string(r.verdict);
      ordered_json residual = ordered_json::array();
      for (const auto& c : r.residual) residual.push_back({{"component", c.index}, {"value", c.value}});
      row["residual"] = residual;
      row["witness"] = witness_json(r.witness);
      rows.push_back(std::move(row));
    }
    sec["rows"] = rows;
    ordered_json ledger = ordered_json::array();
    for (const auto& l : s.ledger) {
      ordered_json cell;
      cell["epsilon"] = l.epsilon;
      cell["signature"] = l.signature;
      cell["s"] = l.s;
      cell["t"] = l.t;
      cell["predicted"] = l.predicted ? ordered_json(*l.predicted) : ordered_json(nullptr);
      cell["pass"] = l.pass;
      cell["witness"] = witness_json(l.witness);
      ledger.push_back(std::move(cell));
    }
    sec["ledger"] = ledger;
    sec["notes"] = s.notes;
    ordered_json errata = ordered_json::array();
    for (const auto& e : s.errata) {
      errata.push_back({{"display", e.display}, {"printed", e.printed}, {"derived", e.derived}});
    }
    sec["errata"] = errata;
    sections.push_back(std::move(sec));
  }
  doc["sections"] = sections;
  return doc.dump(2) + "\n";
}

}  // namespace tanlift::io
