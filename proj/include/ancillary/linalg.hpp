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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace anc {

using cplx = std::complex<double>;

/// Absolute entrywise tolerance used by every approximate comparison in the
/// library. Default is 1e-9.
struct Tolerance {
  double eps = 1e-9;

  constexpr Tolerance() = default;
  explicit Tolerance(double e);
};

/// Dense complex matrix, row-major storage.
class CMatrix {
 public:
  /// Zero matrix of the given shape. Throws std::invalid_argument if either
  /// dimension is zero.
  CMatrix(std::size_t rows, std::size_t cols);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const cplx& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  const std::vector<cplx>& entries() const { return a_; }

  bool operator==(const CMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> a_;
};

/// a * b. Throws std::invalid_argument on inner-dimension mismatch.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// Kronecker product, left factor major: (kron(a,b))[i1*rb+i2, j1*cb+j2] =
/// a[i1,j1] * b[i2,j2].
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& a);

/// Sum of diagonal entries. Throws std::invalid_argument if not square.
cplx trace(const CMatrix& a);

/// Entrywise sum. Throws std::invalid_argument on shape mismatch.
CMatrix add(const CMatrix& a, const CMatrix& b);

/// Scalar multiple.
CMatrix scale(cplx s, const CMatrix& a);

/// max_{i,j} |a[i,j] - b[i,j]|. Throws std::invalid_argument on shape
/// mismatch.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// True iff the matrices have the same shape and max_abs_diff <= tol.eps.
/// Shape mismatch is an error, not inequality.
bool approx_eq(const CMatrix& a, const CMatrix& b, Tolerance tol = {});

}  // namespace anc
