#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lift/lift.hpp"
#include "structure/structure.hpp"
#include "theorem/theorem.hpp"

namespace tanlift::io {

enum class TaskKind { Check, Metric, Lift, BuildJ, Verify, Theorem, Sweep };

const char* to_string(TaskKind k);

/// One line of the task list. BuildJ, Verify and Theorem name either a
/// numbered theorem or an explicit lift kind with signs s and t.
struct Task {
  TaskKind kind = TaskKind::Check;
  lift::LiftKind lift = lift::LiftKind::Complete;
  std::optional<theorem::TheoremId> theorem;
  int s = 1;
  int t = -1;

  std::string str() const;
  friend bool operator==(const Task&, const Task&) = default;
};

/// Throws ParseError located at (line, column + offset).
Task parse_task(std::string_view text, std::size_t line = 1, std::size_t column = 1);

struct StructureBlock {
  structure::RContactStructure data;
  structure::AxiomMode mode = structure::AxiomMode::PaperLiteral;
  structure::AxiomSystem system = structure::AxiomSystem::RContact;
};

struct Definition {
  tensor::Chart chart;
  std::string suffix = lift::kDefaultFiberSuffix;
  std::optional<lift::Connection> connection;
  std::optional<StructureBlock> structure;
  std::vector<Task> tasks;
};

bool operator==(const Definition& a, const Definition& b);

Definition parse_definition(std::string_view text);
std::string emit_definition(const Definition& def);

/// The canonical model wrapped as a definition with a single `check` task.
Definition canonical_definition(int n, int r, int epsilon, structure::Signature signature,
                                structure::AxiomMode mode = structure::AxiomMode::PaperLiteral);

}  // namespace tanlift::io
