#pragma once

#include <cmath>

#include "sectorlab/linalg.hpp"
#include "sectorlab/sector.hpp"

namespace testing {

using namespace sectorlab;

inline double rel_err(const Matrix& a, const Matrix& b) {
  return frobenius_norm(a - b) / (1.0 + frobenius_norm(b));
}

inline Matrix diag(std::initializer_list<cdouble> d) {
  Matrix m = Matrix::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
  Index i = 0;
  for (cdouble v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

inline Matrix scalar(cdouble v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace testing
