#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "io/definition.hpp"
#include "io/report.hpp"

namespace tanlift::io {

struct RunOptions {
  std::optional<structure::AxiomMode> mode;  // overrides the definition's mode
  std::uint64_t seed = structure::kDefaultSeed;
};

/// Runs the definition's own task list.
Report run(const Definition& def, const RunOptions& options = {});
Report run(const Definition& def, std::span<const Task> tasks, const RunOptions& options = {});

/// Axioms, metric, lift tables, all four theorems, action formulas and a
/// paracontact sign sweep on built-in canonical models, plus the canonical
/// eps-complex structure.
Report run_demo(const RunOptions& options = {});

}  // namespace tanlift::io
