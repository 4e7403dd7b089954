#include "io/definition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "common/error.hpp"
#include "io/expr.hpp"
#include "structure/kit.hpp"

namespace tanlift::io {

using lift::Connection;
using lift::LiftKind;
using structure::AxiomMode;
using structure::AxiomSystem;
using structure::Signature;
using tensor::Chart;
using tensor::Poly;
using tensor::TensorField;

namespace {

// A token of a line with its 1-based column.
struct Word {
  std::string_view text;
  std::size_t column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<Word> split_words(std::string_view line, std::size_t column) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), column + start});
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

int parse_sign(const Word& w, std::size_t line) {
  const auto v = parse_int(w.text);
  if (!v || (*v != 1 && *v != -1)) throw ParseError(line, w.column, "expected -1 or +1, got '" + std::string(w.text) + "'");
  return *v;
}

LiftKind parse_lift_kind(const Word& w, std::size_t line) {
  if (w.text == "complete") return LiftKind::Complete;
  if (w.text == "horizontal") return LiftKind::Horizontal;
  throw ParseError(line, w.column, "expected 'complete' or 'horizontal', got '" + std::string(w.text) + "'");
}

std::string sign_text(int v) { return v < 0 ? "-1" : "+1"; }

class DefParser {
 public:
  explicit DefParser(std::string_view text) : text_(text) {}

  Definition parse() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      std::string_view line = text_.substr(pos, end - pos);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      handle_line(line, line_no);
      if (end == text_.size()) break;
      pos = end + 1;
    }
    finish_structure();
    if (!have_chart_) throw ParseError(1, 1, "missing 'chart' declaration");
    if (def_.chart.dim() == 0) throw ParseError(chart_line_, 1, "chart declares no coordinates");
    return std::move(def_);
  }

 private:
  enum class Section { None, Chart, Connection, Structure, Tasks };

  void handle_line(std::string_view line, std::size_t ln) {
    const std::vector<Word> words = split_words(line, 1);
    if (words.empty()) return;
    const std::string_view head = words[0].text;

    if (head == "chart") {
      if (have_chart_) throw ParseError(ln, 1, "duplicate 'chart' declaration");
      if (words.size() != 2) throw ParseError(ln, 1, "expected 'chart NAME'");
      chart_name_ = std::string(words[1].text);
      chart_line_ = ln;
      have_chart_ = true;
      section_ = Section::Chart;
      return;
    }
    if (words.size() == 1 && (head == "connection" || head == "structure" || head == "tasks")) {
      require_coords(ln);
      finish_structure();
      if (head == "connection") {
        if (def_.connection) throw ParseError(ln, 1, "duplicate 'connection' section");
        def_.connection = Connection(def_.chart);
        gamma_seen_ = false;
        section_ = Section::Connection;
      } else if (head == "structure") {
        if (structure_line_) throw ParseError(ln, 1, "duplicate 'structure' section");
        structure_line_ = ln;
        section_ = Section::Structure;
      } else {
        section_ = Section::Tasks;
      }
      return;
    }

    switch (section_) {
      case Section::None: throw ParseError(ln, 1, "expected 'chart NAME' before any other line");
      case Section::Chart: return chart_line(words, ln);
      case Section::Connection: return connection_line(line, words, ln);
      case Section::Structure: return structure_line(line, words, ln);
      case Section::Tasks: def_.tasks.push_back(parse_task(line, ln, 1)); return;
    }
  }

  void require_coords(std::size_t ln) {
    if (!have_coords_) throw ParseError(ln, 1, "chart coordinates must be declared first");
  }

  void chart_line(const std::vector<Word>& words, std::size_t ln) {
    if (words[0].text == "coords") {
      if (have_coords_) throw ParseError(ln, 1, "duplicate 'coords' line");
      std::vector<std::string> names;
      for (std::size_t i = 1; i < words.size(); ++i) {
        const std::string name(words[i].text);
        const bool ident = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                           std::all_of(name.begin(), name.end(), [](char c) {
                             return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                           });
        if (!ident) throw ParseError(ln, words[i].column, "invalid coordinate name '" + name + "'");
        if (std::find(names.begin(), names.end(), name) != names.end()) {
          throw ParseError(ln, words[i].column, "duplicate coordinate '" + name + "'");
        }
        names.push_back(name);
      }
      if (names.empty()) throw ParseError(ln, 1, "expected at least one coordinate");
      def_.chart = Chart(chart_name_, std::move(names));
      have_coords_ = true;
      return;
    }
    if (words[0].text == "suffix") {
      if (words.size() != 2) throw ParseError(ln, 1, "expected 'suffix TEXT'");
      def_.suffix = std::string(words[1].text);
      return;
    }
    throw ParseError(ln, 1, "unknown chart key '" + std::string(words[0].text) + "'");
  }

  // Index written as a coordinate name or a 1-based number.
  std::size_t coord_index(std::string_view text, std::size_t ln, std::size_t col) const {
    if (auto v = parse_int(text)) {
      if (*v < 1 || static_cast<std::size_t>(*v) > def_.chart.dim()) {
        throw ParseError(ln, col, "index " + std::string(text) + " out of range 1.." +
                                      std::to_string(def_.chart.dim()));
      }
      return static_cast<std::size_t>(*v - 1);
    }
    if (auto i = def_.chart.index_of(text)) return *i;
    throw ParseError(ln, col, "unknown coordinate '" + std::string(text) + "'");
  }

  // Parses NAME[i1,i2,...] = rhs into its index texts and the rhs span.
  struct Indexed {
    std::string_view name;
    std::vector<Word> indices;
    std::string_view rhs;
    std::size_t rhs_column;
  };

  Indexed indexed(std::string_view line, std::size_t ln) const {
    const std::size_t open = line.find('[');
    const std::size_t close = line.find(']');
    const std::size_t eq = line.find('=');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
      throw ParseError(ln, 1, "expected NAME[index] = value");
    }
    if (eq == std::string_view::npos || eq < close) throw ParseError(ln, close + 2, "expected '='");
    Indexed out;
    std::size_t name_start = 0;
    while (name_start < open && is_space(line[name_start])) ++name_start;
    out.name = line.substr(name_start, open - name_start);
    while (!out.name.empty() && is_space(out.name.back())) out.name.remove_suffix(1);
    std::size_t start = open + 1;
    for (;;) {
      std::size_t comma = line.find(',', start);
      if (comma == std::string_view::npos || comma > close) comma = close;
      std::string_view piece = line.substr(start, comma - start);
      std::size_t col = start + 1;
      while (!piece.empty() && is_space(piece.front())) {
        piece.remove_prefix(1);
        ++col;
      }
      while (!piece.empty() && is_space(piece.back())) piece.remove_suffix(1);
      if (piece.empty()) throw ParseError(ln, col, "empty index");
      out.indices.push_back({piece, col});
      if (comma == close) break;
      start = comma + 1;
    }
    for (std::size_t i = close + 1; i < eq; ++i) {
      if (!is_space(line[i])) throw ParseError(ln, i + 1, "expected '='");
    }
    out.rhs = line.substr(eq + 1);
    out.rhs_column = eq + 2;
    return out;
  }

  std::vector<Poly> poly_list(std::string_view rhs, std::size_t ln, std::size_t col) const {
    std::vector<Poly> out;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = rhs.find(',', start);
      const std::size_t end = comma == std::string_view::npos ? rhs.size() : comma;
      out.push_back(parse_poly(rhs.substr(start, end - start), def_.chart.coords(), ln, col + start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  }

  void connection_line(std::string_view line, const std::vector<Word>& words, std::size_t ln) {
    if (words[0].text == "symmetric") {
      if (words.size() != 2 || (words[1].text != "yes" && words[1].text != "no")) {
        throw ParseError(ln, 1, "expected 'symmetric yes' or 'symmetric no'");
      }
      if (gamma_seen_) throw ParseError(ln, 1, "'symmetric' must precede the Gamma entries");
      def_.connection = Connection(def_.chart, words[1].text == "yes");
      return;
    }
    const Indexed ix = indexed(line, ln);
    if (ix.name != "Gamma") throw ParseError(ln, 1, "expected a Gamma[i,j,k] entry");
    if (ix.indices.size() != 3) throw ParseError(ln, 1, "Gamma takes three indices");
    std::size_t idx[3];
    for (int k = 0; k < 3; ++k) idx[k] = coord_index(ix.indices[k].text, ln, ix.indices[k].column);
    def_.connection->set(idx[0], idx[1], idx[2], parse_poly(ix.rhs, def_.chart.coords(), ln, ix.rhs_column));
    gamma_seen_ = true;
  }

  void structure_line(std::string_view line, const std::vector<Word>& words, std::size_t ln) {
    const std::string_view key = words[0].text;
    if (line.find('[') == std::string_view::npos) {
      if (words.size() != 2) throw ParseError(ln, 1, "expected '" + std::string(key) + " VALUE'");
      const Word& v = words[1];
      if (key == "n" || key == "r") {
        const auto value = parse_int(v.text);
        if (!value || *value < 0) throw ParseError(ln, v.column, "expected a non-negative integer");
        (key == "n" ? n_ : r_) = *value;
      } else if (key == "epsilon") {
        block_.data.epsilon = parse_sign(v, ln);
      } else if (key == "signature") {
        if (v.text == "riemannian") block_.data.signature = Signature::Riemannian;
        else if (v.text == "lorentzian") block_.data.signature = Signature::Lorentzian;
        else throw ParseError(ln, v.column, "expected 'riemannian' or 'lorentzian'");
      } else if (key == "mode") {
        if (v.text == "paper-literal") block_.mode = AxiomMode::PaperLiteral;
        else if (v.text == "consistent") block_.mode = AxiomMode::Consistent;
        else throw ParseError(ln, v.column, "expected 'paper-literal' or 'consistent'");
      } else if (key == "axioms") {
        if (v.text == "r-contact") block_.system = AxiomSystem::RContact;
        else if (v.text == "contact") block_.system = AxiomSystem::Contact;
        else throw ParseError(ln, v.column, "expected 'r-contact' or 'contact'");
      } else {
        throw ParseError(ln, 1, "unknown structure key '" + std::string(key) + "'");
      }
      return;
    }

    const Indexed ix = indexed(line, ln);
    if (ix.indices.size() != 1) throw ParseError(ln, 1, "expected a single index");
    const Word& index = ix.indices[0];
    std::vector<Poly> values = poly_list(ix.rhs, ln, ix.rhs_column);
    if (values.size() != def_.chart.dim()) {
      throw ParseError(ln, ix.rhs_column, "expected " + std::to_string(def_.chart.dim()) + " entries, got " +
                                              std::to_string(values.size()));
    }
    std::map<std::size_t, Row>* target = nullptr;
    std::size_t i = 0;
    if (ix.name == "F" || ix.name == "G") {
      target = ix.name == "F" ? &f_rows_ : &g_rows_;
      i = coord_index(index.text, ln, index.column);
    } else if (ix.name == "xi" || ix.name == "eta") {
      target = ix.name == "xi" ? &xi_ : &eta_;
      const auto v = parse_int(index.text);
      if (!v || *v < 1) throw ParseError(ln, index.column, "expected a positive index");
      i = static_cast<std::size_t>(*v - 1);
    } else {
      throw ParseError(ln, 1, "unknown structure entry '" + std::string(ix.name) + "'");
    }
    if (target->count(i)) throw ParseError(ln, index.column, "duplicate entry " + std::string(ix.name) + "[" +
                                                                std::string(index.text) + "]");
    (*target)[i] = Row{std::move(values), ln, index.column};
  }

  struct Row {
    std::vector<Poly> values;
    std::size_t line = 0;
    std::size_t column = 0;
  };

  void finish_structure() {
    if (!structure_line_ || finished_) return;
    finished_ = true;
    const std::size_t ln = *structure_line_;
    if (n_ < 0 || r_ < 0) throw ParseError(ln, 1, "structure needs 'n' and 'r'");
    const std::size_t dim = def_.chart.dim();
    if (static_cast<std::size_t>(2 * n_ + r_) != dim) {
      throw ParseError(ln, 1, "shape mismatch: 2n + r = " + std::to_string(2 * n_ + r_) +
                                  " but the chart has dimension " + std::to_string(dim));
    }
    auto& s = block_.data;
    s.chart = def_.chart;
    s.n = n_;
    s.r = r_;

    std::vector<Poly> f;
    for (std::size_t i = 0; i < dim; ++i) {
      auto it = f_rows_.find(i);
      if (it == f_rows_.end()) throw ParseError(ln, 1, "missing row F[" + def_.chart.coord(i) + "]");
      f.insert(f.end(), it->second.values.begin(), it->second.values.end());
    }
    s.F = TensorField::endo(def_.chart, std::move(f));

    auto vectors = [&](std::map<std::size_t, Row>& rows, const char* name, bool form) {
      std::vector<TensorField> out;
      for (const auto& [i, row] : rows) {
        if (i >= static_cast<std::size_t>(r_)) {
          throw ParseError(row.line, row.column, std::string(name) + " index out of range 1.." + std::to_string(r_));
        }
      }
      for (std::size_t a = 0; a < static_cast<std::size_t>(r_); ++a) {
        auto it = rows.find(a);
        if (it == rows.end()) throw ParseError(ln, 1, "missing " + std::string(name) + "[" + std::to_string(a + 1) + "]");
        out.push_back(form ? TensorField::one_form(def_.chart, it->second.values)
                           : TensorField::vector(def_.chart, it->second.values));
      }
      return out;
    };
    s.xi = vectors(xi_, "xi", false);
    s.eta = vectors(eta_, "eta", true);

    if (!g_rows_.empty()) {
      std::vector<Poly> g;
      for (std::size_t i = 0; i < dim; ++i) {
        auto it = g_rows_.find(i);
        if (it == g_rows_.end()) throw ParseError(ln, 1, "missing row G[" + def_.chart.coord(i) + "]");
        g.insert(g.end(), it->second.values.begin(), it->second.values.end());
      }
      s.metric = TensorField::bilinear(def_.chart, std::move(g));
    }
    def_.structure = std::move(block_);
  }

  std::string_view text_;
  Definition def_;
  Section section_ = Section::None;
  std::string chart_name_;
  std::size_t chart_line_ = 0;
  bool have_chart_ = false;
  bool have_coords_ = false;
  bool gamma_seen_ = false;
  std::optional<std::size_t> structure_line_;
  bool finished_ = false;
  int n_ = -1;
  int r_ = -1;
  StructureBlock block_;
  std::map<std::size_t, Row> f_rows_, g_rows_, xi_, eta_;
};

std::string join(const std::vector<Poly>& polys, std::size_t from, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += ", ";
    out += polys[from + i].str();
  }
  return out;
}

bool same_structure(const StructureBlock& a, const StructureBlock& b) {
  const auto& x = a.data;
  const auto& y = b.data;
  return a.mode == b.mode && a.system == b.system && x.chart == y.chart && x.n == y.n && x.r == y.r &&
         x.F == y.F && x.xi == y.xi && x.eta == y.eta && x.epsilon == y.epsilon &&
         x.signature == y.signature && x.metric == y.metric;
}

}  // namespace

const char* to_string(TaskKind k) {
  switch (k) {
    case TaskKind::Check: return "check";
    case TaskKind::Metric: return "metric";
    case TaskKind::Lift: return "lift";
    case TaskKind::BuildJ: return "build-j";
    case TaskKind::Verify: return "verify";
    case TaskKind::Theorem: return "theorem";
    case TaskKind::Sweep: return "sweep";
  }
  return "?";
}

std::string Task::str() const {
  std::string out = to_string(kind);
  switch (kind) {
    case TaskKind::Check:
    case TaskKind::Metric: return out;
    case TaskKind::Lift:
    case TaskKind::Sweep: return out + " " + lift::to_string(lift);
    case TaskKind::BuildJ:
    case TaskKind::Verify:
    case TaskKind::Theorem:
      if (theorem) return out + " " + theorem::to_string(*theorem);
      return out + " " + lift::to_string(lift) + " " + sign_text(s) + " " + sign_text(t);
  }
  return out;
}

Task parse_task(std::string_view text, std::size_t line, std::size_t column) {
  const std::vector<Word> w = split_words(text, column);
  if (w.empty()) throw ParseError(line, column, "empty task");
  Task task;
  const std::string_view head = w[0].text;
  auto arity = [&](std::size_t n) {
    if (w.size() != n) throw ParseError(line, w[0].column, "wrong number of arguments for '" + std::string(head) + "'");
  };
  if (head == "check" || head == "metric") {
    arity(1);
    task.kind = head == "check" ? TaskKind::Check : TaskKind::Metric;
  } else if (head == "lift" || head == "sweep") {
    arity(2);
    task.kind = head == "lift" ? TaskKind::Lift : TaskKind::Sweep;
    task.lift = parse_lift_kind(w[1], line);
  } else if (head == "build-j" || head == "verify" || head == "theorem") {
    task.kind = head == "build-j" ? TaskKind::BuildJ : head == "verify" ? TaskKind::Verify : TaskKind::Theorem;
    if (w.size() == 2) {
      const auto id = theorem::parse_theorem(w[1].text);
      if (!id) throw ParseError(line, w[1].column, "unknown theorem '" + std::string(w[1].text) + "'");
      task.theorem = id;
      const auto spec = theorem::theorem_spec(*id, structure::RContactStructure{});
      task.lift = spec.kind;
      task.s = spec.s;
      task.t = spec.t;
    } else {
      arity(4);
      task.lift = parse_lift_kind(w[1], line);
      task.s = parse_sign(w[2], line);
      task.t = parse_sign(w[3], line);
    }
  } else {
    throw ParseError(line, w[0].column, "unknown task '" + std::string(head) + "'");
  }
  return task;
}

bool operator==(const Definition& a, const Definition& b) {
  if (!(a.chart == b.chart) || a.suffix != b.suffix || a.tasks != b.tasks) return false;
  if (a.connection.has_value() != b.connection.has_value()) return false;
  if (a.connection && !(*a.connection == *b.connection)) return false;
  if (a.structure.has_value() != b.structure.has_value()) return false;
  return !a.structure || same_structure(*a.structure, *b.structure);
}

Definition parse_definition(std::string_view text) { return DefParser(text).parse(); }

std::string emit_definition(const Definition& def) {
  std::ostringstream out;
  const Chart& ch = def.chart;
  const std::size_t dim = ch.dim();
  out << "chart " << ch.name() << "\ncoords";
  for (std::size_t i = 0; i < dim; ++i) out << ' ' << ch.coord(i);
  out << "\nsuffix " << def.suffix << "\n";

  if (def.connection) {
    const Connection& c = *def.connection;
    out << "\nconnection\nsymmetric " << (c.symmetric() ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = c.symmetric() ? j : 0; k < dim; ++k) {
          if (c(i, j, k).is_zero()) continue;
          out << "Gamma[" << ch.coord(i) << ',' << ch.coord(j) << ',' << ch.coord(k) << "] = " << c(i, j, k).str()
              << "\n";
        }
      }
    }
  }

  if (def.structure) {
    const auto& b = *def.structure;
    const auto& s = b.data;
    out << "\nstructure\n";
    out << "n " << s.n << "\nr " << s.r << "\nepsilon " << sign_text(s.epsilon) << "\n";
    out << "signature " << structure::to_string(s.signature) << "\n";
    out << "mode " << structure::to_string(b.mode) << "\n";
    out << "axioms " << structure::to_string(b.system) << "\n";
    for (std::size_t i = 0; i < dim; ++i) out << "F[" << ch.coord(i) << "] = " << join(s.F.components(), i * dim, dim) << "\n";
    for (std::size_t a = 0; a < s.xi.size(); ++a) out << "xi[" << a + 1 << "] = " << join(s.xi[a].components(), 0, dim) << "\n";
    for (std::size_t a = 0; a < s.eta.size(); ++a) out << "eta[" << a + 1 << "] = " << join(s.eta[a].components(), 0, dim) << "\n";
    if (s.metric) {
      for (std::size_t i = 0; i < dim; ++i) out << "G[" << ch.coord(i) << "] = " << join(s.metric->components(), i * dim, dim) << "\n";
    }
  }

  if (!def.tasks.empty()) {
    out << "\ntasks\n";
    for (const Task& t : def.tasks) out << t.str() << "\n";
  }
  return out.str();
}

Definition canonical_definition(int n, int r, int epsilon, Signature signature, AxiomMode mode) {
  Definition def;
  StructureBlock block;
  block.data = structure::canonical_structure(n, r, epsilon, signature);
  block.mode = mode;
  def.chart = block.data.chart;
  def.structure = std::move(block);
  def.tasks.push_back(Task{});
  return def;
}

}  // namespace tanlift::io
