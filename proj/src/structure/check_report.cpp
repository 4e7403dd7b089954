#include "structure/check_report.hpp"

#include <algorithm>

namespace tanlift::structure {

void CheckReport::add(std::string name, std::string tag, tensor::TensorField residual) {
  CheckEntry e{std::move(name), std::move(tag), std::move(residual), false, std::nullopt};
  e.pass = e.residual.is_zero();
  if (!e.pass) e.witness = tensor::find_witness(e.residual, seed);
  entries.push_back(std::move(e));
}

bool CheckReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.pass; });
}

void CheckReport::append(const CheckReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  errata.insert(errata.end(), other.errata.begin(), other.errata.end());
}

}  // namespace tanlift::structure
