#pragma once

// Sector statements evaluated on Hermitian positive definite inputs
// (theta = 0) next to the positive definite statements they extend.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "sectorlab/linalg.hpp"

namespace sectorlab {

struct CollapseRow {
  std::string sector_id;
  std::string ancestor_id;
  double sector_residual = 0.0;
  double ancestor_residual = 0.0;
  bool sector_pass = false;
  bool ancestor_pass = false;

  bool agrees(double tol = 1e-9) const {
    return sector_pass == ancestor_pass && std::abs(sector_residual - ancestor_residual) <= tol;
  }
};

std::vector<CollapseRow> collapse_rows(std::uint64_t seed, int dim = 3, const TolerancePolicy& tol = {});

}  // namespace sectorlab
