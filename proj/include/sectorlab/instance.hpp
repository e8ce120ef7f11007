#pragma once

// A single serialized theorem input: named matrices and scalars plus the
// catalog tokens needed to rebuild maps, functions and means.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "sectorlab/linalg.hpp"

namespace sectorlab {

struct Instance {
  std::map<std::string, Matrix> matrices;
  std::map<std::string, double> scalars;
  std::string map_id;
  std::string function_id;
  std::vector<std::string> mean_ids;

  const Matrix& matrix(const std::string& name) const;
  double scalar(const std::string& name) const;
  bool empty() const noexcept { return matrices.empty() && scalars.empty(); }

  /// Largest dimension among the square matrices (0 when there are none).
  Index max_dim() const;

  nlohmann::json to_json() const;
  static Instance from_json(const nlohmann::json& j);

  /// FNV-1a over names and the raw bit patterns of every entry.
  std::uint64_t digest() const;
};

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h = 14695981039346656037ull);
std::string hex64(std::uint64_t v);

}  // namespace sectorlab
