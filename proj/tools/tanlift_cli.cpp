// Command-line driver over the tanlift C API.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tanlift/tanlift.h"

namespace {

constexpr int kExitUsage = 2;

struct DefinitionDeleter {
  void operator()(tl_definition* d) const { tl_definition_free(d); }
};
struct ReportDeleter {
  void operator()(tl_report* r) const { tl_report_free(r); }
};
using DefinitionPtr = std::unique_ptr<tl_definition, DefinitionDeleter>;
using ReportPtr = std::unique_ptr<tl_report, ReportDeleter>;

struct Options {
  std::string mode = "default";
  std::string format = "human";
  std::uint64_t seed = tl_default_seed();
};

int report_error(const std::string& where, tl_status status) {
  std::cerr << "tanlift: " << where;
  if (status == TL_ERR_PARSE && tl_last_error_line() > 0) {
    std::cerr << ":" << tl_last_error_line() << ":" << tl_last_error_column();
  }
  std::cerr << ": " << tl_status_string(status) << ": " << tl_last_error_message() << "\n";
  return kExitUsage;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tl_run_options run_options(const Options& o) {
  tl_run_options out;
  tl_run_options_init(&out);
  out.seed = o.seed;
  if (o.mode == "paper-literal") out.mode = TL_MODE_PAPER_LITERAL;
  if (o.mode == "consistent") out.mode = TL_MODE_CONSISTENT;
  return out;
}

int print_string(char* s) {
  std::fputs(s, stdout);
  tl_string_free(s);
  return 0;
}

int emit_report(const tl_report* report, const Options& o) {
  char* text = nullptr;
  const tl_status st = tl_report_render(report, o.format == "machine" ? TL_FORMAT_MACHINE : TL_FORMAT_HUMAN, &text);
  if (st != TL_OK) return report_error("render", st);
  print_string(text);
  return tl_report_exit_status(report);
}

int load(const std::string& path, DefinitionPtr& out) {
  const auto text = read_file(path);
  if (!text) {
    std::cerr << "tanlift: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  tl_definition* def = nullptr;
  const tl_status st = tl_definition_parse(text->data(), text->size(), &def);
  if (st != TL_OK) return report_error(path, st);
  out.reset(def);
  return 0;
}

// Runs `tasks` (or the file's own list when empty) on the file.
int run_file(const std::string& path, const std::string& tasks, const Options& o) {
  DefinitionPtr def;
  if (int rc = load(path, def)) return rc;
  const tl_run_options opts = run_options(o);
  tl_report* report = nullptr;
  const tl_status st = tl_run(def.get(), tasks.empty() ? nullptr : tasks.c_str(), &opts, &report);
  if (st != TL_OK) return report_error(path, st);
  ReportPtr owned(report);
  return emit_report(report, o);
}

std::string join(const std::string& head, const std::vector<std::string>& args) {
  std::string out = head;
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of lifted structures on tangent bundles"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--mode", o.mode, "Axiom mode override")
      ->check(CLI::IsMember({"default", "paper-literal", "consistent"}));
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--seed", o.seed, "Seed for witness search");

  int rc = 0;
  std::string file;
  std::vector<std::string> args;

  struct Simple {
    const char* name;
    const char* help;
    const char* args_help;  // nullptr: no task arguments
  };
  const Simple simple[] = {
      {"check", "Check the structure axioms (and metric, if given)", nullptr},
      {"metric", "Check metric compatibility", nullptr},
      {"lift", "Lift interaction table", "complete | horizontal"},
      {"build-j", "Assemble the lifted J", "4.1 .. 4.4 | KIND S T"},
      {"verify", "Check the action formulas of J", "4.1 .. 4.4 | KIND S T"},
      {"theorem", "Verify J^2 = eps*I", "4.1 .. 4.4 | KIND S T"},
      {"sweep", "Sign sweep over (s, t)", "complete | horizontal"},
  };
  for (const Simple& s : simple) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", file, "Definition file")->required();
    if (s.args_help) sub->add_option("args", args, s.args_help)->required();
    sub->callback([&, name = std::string(s.name)] { rc = run_file(file, join(name, args), o); });
  }

  CLI::App* run = app.add_subcommand("run", "Run the task list of a definition file");
  run->add_option("file", file, "Definition file")->required();
  run->callback([&] { rc = run_file(file, "", o); });

  CLI::App* demo = app.add_subcommand("demo", "End-to-end pipeline on built-in canonical models");
  demo->callback([&] {
    const tl_run_options opts = run_options(o);
    tl_report* report = nullptr;
    const tl_status st = tl_run_demo(&opts, &report);
    if (st != TL_OK) {
      rc = report_error("demo", st);
      return;
    }
    ReportPtr owned(report);
    rc = emit_report(report, o);
  });

  CLI::App* fmt = app.add_subcommand("fmt", "Print a definition file in canonical form");
  fmt->add_option("file", file, "Definition file")->required();
  fmt->callback([&] {
    DefinitionPtr def;
    if ((rc = load(file, def))) return;
    char* text = nullptr;
    const tl_status st = tl_definition_emit(def.get(), &text);
    rc = st == TL_OK ? print_string(text) : report_error(file, st);
  });

  int n = 1, r = 1, epsilon = -1;
  std::string signature = "riemannian";
  CLI::App* canonical = app.add_subcommand("canonical", "Print the canonical model as a definition file");
  canonical->add_option("-n", n, "Half the rank of F")->check(CLI::Range(0, 16));
  canonical->add_option("-r", r, "Number of Reeb fields")->check(CLI::Range(0, 16));
  canonical->add_option("--epsilon", epsilon, "-1 or +1")->check(CLI::IsMember({-1, 1}));
  canonical->add_option("--signature", signature)->check(CLI::IsMember({"riemannian", "lorentzian"}));
  canonical->callback([&] {
    tl_definition* def = nullptr;
    const tl_mode mode = o.mode == "consistent" ? TL_MODE_CONSISTENT : TL_MODE_PAPER_LITERAL;
    tl_status st = tl_definition_canonical(n, r, epsilon, signature == "lorentzian" ? TL_LORENTZIAN : TL_RIEMANNIAN,
                                           mode, &def);
    if (st != TL_OK) {
      rc = report_error("canonical", st);
      return;
    }
    DefinitionPtr owned(def);
    char* text = nullptr;
    st = tl_definition_emit(def, &text);
    rc = st == TL_OK ? print_string(text) : report_error("canonical", st);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return rc;
}
