// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ancillary/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace anc {

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e >= 0.0)) {
    throw std::invalid_argument("Tolerance: eps must be >= 0");
  }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("CMatrix: dimensions must be nonzero");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1.0;
  }
  return m;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions disagree");
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx(0.0, 0.0)) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const cplx v = a.at(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = v * b.at(i2, j2);
        }
      }
    }
  }
  return out;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.at(j, i) = std::conj(a.at(i, j));
    }
  }
  return out;
}

cplx trace(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("trace: matrix is not square");
  }
  cplx t(0.0, 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    t += a.at(i, i);
  }
  return t;
}

CMatrix add(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("add: shape mismatch");
  }
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
    out.at(i / a.cols(), i % a.cols()) = a.entries()[i] + b.entries()[i];
  }
  return out;
}

CMatrix scale(cplx s, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.at(i, j) = s * a.at(i, j);
    }
  }
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

bool approx_eq(const CMatrix& a, const CMatrix& b, Tolerance tol) {
  return max_abs_diff(a, b) <= tol.eps;
}

}  // namespace anc
