#pragma once

// JSON matrix format: { "dim": n, "re": [[...]], "im": [[...]] }, row-major.
// Rectangular carriers (isometries) use "rows"/"cols" in place of "dim".

#include <filesystem>

#include "json.hpp"
#include "sectorlab/linalg.hpp"

namespace sectorlab {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

}  // namespace sectorlab
