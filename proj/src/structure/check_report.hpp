#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensor/tensor_field.hpp"

namespace tanlift::structure {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CheckEntry {
  std::string name;
  std::string tag;  // equation label shown in reports, may be empty
  tensor::TensorField residual;
  bool pass = false;
  std::optional<tensor::Witness> witness;  // present iff !pass
};

/// A printed display that disagrees with what the engine derives.
struct Erratum {
  std::string display;
  std::string printed;
  std::string derived;
};

struct CheckReport {
  std::uint64_t seed = kDefaultSeed;
  std::vector<CheckEntry> entries;
  std::vector<std::string> notes;
  std::vector<Erratum> errata;

  /// Records a residual; a nonzero residual fails and gets a witness.
  void add(std::string name, std::string tag, tensor::TensorField residual);
  bool passed() const;
  void append(const CheckReport& other);
};

}  // namespace tanlift::structure
