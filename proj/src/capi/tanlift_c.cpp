#include "tanlift/tanlift.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "common/error.hpp"
#include "io/definition.hpp"
#include "io/runner.hpp"

struct tl_definition {
  tanlift::io::Definition def;
};

struct tl_report {
  tanlift::io::Report report;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError last_error;

void clear_error() { last_error = LastError{}; }

tl_status from_code(tanlift::ErrorCode code) {
  using tanlift::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return TL_ERR_INVALID_ARGUMENT;
    case ErrorCode::VariableMismatch: return TL_ERR_VARIABLE_MISMATCH;
    case ErrorCode::MissingAssignment: return TL_ERR_MISSING_ASSIGNMENT;
    case ErrorCode::EpsilonMismatch: return TL_ERR_EPSILON_MISMATCH;
    case ErrorCode::NotUnimodular: return TL_ERR_NOT_UNIMODULAR;
    case ErrorCode::InexactDivision: return TL_ERR_INEXACT_DIVISION;
    case ErrorCode::ChartMismatch: return TL_ERR_CHART_MISMATCH;
    case ErrorCode::ValenceMismatch: return TL_ERR_VALENCE_MISMATCH;
    case ErrorCode::MissingConnection: return TL_ERR_MISSING_CONNECTION;
    case ErrorCode::MissingMetric: return TL_ERR_MISSING_METRIC;
    case ErrorCode::Unsupported: return TL_ERR_UNSUPPORTED;
    case ErrorCode::OddDimension: return TL_ERR_ODD_DIMENSION;
    case ErrorCode::Parse: return TL_ERR_PARSE;
  }
  return TL_ERR_INTERNAL;
}

tl_status fail(tl_status status, std::string message) {
  last_error.message = std::move(message);
  return status;
}

// Runs f, translating exceptions into status codes.
template <class F>
tl_status guarded(F&& f) {
  clear_error();
  try {
    f();
    return TL_OK;
  } catch (const tanlift::ParseError& e) {
    last_error.line = e.line();
    last_error.column = e.column();
    return fail(TL_ERR_PARSE, e.what());
  } catch (const tanlift::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TL_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tanlift::io::RunOptions run_options(const tl_run_options* options) {
  tanlift::io::RunOptions out;
  if (!options) return out;
  out.seed = options->seed;
  switch (options->mode) {
    case TL_MODE_PAPER_LITERAL: out.mode = tanlift::structure::AxiomMode::PaperLiteral; break;
    case TL_MODE_CONSISTENT: out.mode = tanlift::structure::AxiomMode::Consistent; break;
    case TL_MODE_DEFAULT: break;
    default: throw tanlift::Error(tanlift::ErrorCode::InvalidArgument, "unknown mode");
  }
  return out;
}

}  // namespace

extern "C" {

void tl_run_options_init(tl_run_options* options) {
  if (!options) return;
  options->mode = TL_MODE_DEFAULT;
  options->seed = tanlift::structure::kDefaultSeed;
}

uint64_t tl_default_seed(void) { return tanlift::structure::kDefaultSeed; }

const char* tl_status_string(tl_status status) {
  switch (status) {
    case TL_OK: return "ok";
    case TL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TL_ERR_PARSE: return "parse error";
    case TL_ERR_VARIABLE_MISMATCH: return "variable mismatch";
    case TL_ERR_MISSING_ASSIGNMENT: return "missing assignment";
    case TL_ERR_EPSILON_MISMATCH: return "epsilon mismatch";
    case TL_ERR_NOT_UNIMODULAR: return "not unimodular";
    case TL_ERR_INEXACT_DIVISION: return "inexact division";
    case TL_ERR_CHART_MISMATCH: return "chart mismatch";
    case TL_ERR_VALENCE_MISMATCH: return "valence mismatch";
    case TL_ERR_MISSING_CONNECTION: return "missing connection";
    case TL_ERR_MISSING_METRIC: return "missing metric";
    case TL_ERR_UNSUPPORTED: return "unsupported";
    case TL_ERR_ODD_DIMENSION: return "odd dimension";
    case TL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tl_last_error_message(void) { return last_error.message.c_str(); }
size_t tl_last_error_line(void) { return last_error.line; }
size_t tl_last_error_column(void) { return last_error.column; }

tl_status tl_definition_parse(const char* text, size_t length, tl_definition** out) {
  if (!text || !out) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = nullptr;
    auto def = std::make_unique<tl_definition>();
    def->def = tanlift::io::parse_definition(std::string_view(text, length));
    *out = def.release();
  });
}

tl_status tl_definition_canonical(int n, int r, int epsilon, tl_signature signature, tl_mode mode,
                                  tl_definition** out) {
  if (!out) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = nullptr;
    if (signature != TL_RIEMANNIAN && signature != TL_LORENTZIAN) {
      throw tanlift::Error(tanlift::ErrorCode::InvalidArgument, "unknown signature");
    }
    auto def = std::make_unique<tl_definition>();
    const auto m = mode == TL_MODE_CONSISTENT ? tanlift::structure::AxiomMode::Consistent
                                              : tanlift::structure::AxiomMode::PaperLiteral;
    def->def = tanlift::io::canonical_definition(
        n, r, epsilon,
        signature == TL_LORENTZIAN ? tanlift::structure::Signature::Lorentzian
                                   : tanlift::structure::Signature::Riemannian,
        m);
    *out = def.release();
  });
}

tl_status tl_definition_emit(const tl_definition* def, char** out) {
  if (!def || !out) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(tanlift::io::emit_definition(def->def)); });
}

int tl_definition_equal(const tl_definition* a, const tl_definition* b) {
  if (!a || !b) return 0;
  return a->def == b->def ? 1 : 0;
}

size_t tl_definition_task_count(const tl_definition* def) { return def ? def->def.tasks.size() : 0; }

void tl_definition_free(tl_definition* def) { delete def; }

tl_status tl_run(const tl_definition* def, const char* tasks, const tl_run_options* options, tl_report** out) {
  if (!def || !out) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = nullptr;
    const auto opts = run_options(options);
    auto report = std::make_unique<tl_report>();
    if (tasks) {
      std::vector<tanlift::io::Task> list;
      std::string_view text(tasks);
      std::size_t line = 1;
      while (!text.empty()) {
        const std::size_t end = std::min(text.find('\n'), text.size());
        const std::string_view piece = text.substr(0, end);
        if (piece.find_first_not_of(" \t\r") != std::string_view::npos) {
          list.push_back(tanlift::io::parse_task(piece, line, 1));
        }
        text.remove_prefix(end == text.size() ? end : end + 1);
        ++line;
      }
      report->report = tanlift::io::run(def->def, list, opts);
    } else {
      report->report = tanlift::io::run(def->def, opts);
    }
    *out = report.release();
  });
}

tl_status tl_run_demo(const tl_run_options* options, tl_report** out) {
  if (!out) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = nullptr;
    auto report = std::make_unique<tl_report>();
    report->report = tanlift::io::run_demo(run_options(options));
    *out = report.release();
  });
}

tl_status tl_report_render(const tl_report* report, tl_format format, char** out) {
  if (!report || !out) return fail(TL_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    switch (format) {
      case TL_FORMAT_HUMAN: *out = copy_string(tanlift::io::render_human(report->report)); return;
      case TL_FORMAT_MACHINE: *out = copy_string(tanlift::io::render_machine(report->report)); return;
    }
    throw tanlift::Error(tanlift::ErrorCode::InvalidArgument, "unknown format");
  });
}

int tl_report_passed(const tl_report* report) { return report && report->report.passed() ? 1 : 0; }

int tl_report_exit_status(const tl_report* report) { return report ? report->report.exit_status() : 1; }

void tl_report_free(tl_report* report) { delete report; }

void tl_string_free(char* s) { std::free(s); }

}  // extern "C"
