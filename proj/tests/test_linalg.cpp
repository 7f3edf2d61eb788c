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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ancillary/linalg.hpp"

using namespace anc;

namespace {

CMatrix from_rows(std::size_t rows, std::size_t cols, std::initializer_list<cplx> vals) {
  CMatrix m(rows, cols);
  std::size_t k = 0;
  for (cplx v : vals) {
    m.at(k / cols, k % cols) = v;
    ++k;
  }
  REQUIRE(k == rows * cols);
  return m;
}

CMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = cplx(d(rng), d(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("zero construction and identity") {
  CMatrix z(2, 3);
  CHECK(z.rows() == 2);
  CHECK(z.cols() == 3);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(z.at(r, c) == cplx(0.0, 0.0));
    }
  }

  CMatrix id = CMatrix::identity(3);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      CHECK(id.at(r, c) == (r == c ? cplx(1.0) : cplx(0.0)));
    }
  }

  CHECK_THROWS_AS(CMatrix(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(CMatrix(2, 0), std::invalid_argument);
}

TEST_CASE("matmul on a worked 2x2 example") {
  // [[1,2],[3,4]] * [[0,1],[1,0]] = [[2,1],[4,3]]
  CMatrix a = from_rows(2, 2, {1.0, 2.0, 3.0, 4.0});
  CMatrix x = from_rows(2, 2, {0.0, 1.0, 1.0, 0.0});
  CMatrix prod = matmul(a, x);
  CHECK(prod == from_rows(2, 2, {2.0, 1.0, 4.0, 3.0}));

  // Non-square shapes compose too: (2x3)*(3x1).
  CMatrix b = from_rows(2, 3, {1.0, 0.0, 2.0, 0.0, 1.0, 1.0});
  CMatrix v = from_rows(3, 1, {1.0, 2.0, 3.0});
  CHECK(matmul(b, v) == from_rows(2, 1, {7.0, 5.0}));

  CHECK_THROWS_AS(matmul(a, v), std::invalid_argument);
}

TEST_CASE("kron layout is left-factor major") {
  CMatrix a = from_rows(2, 2, {1.0, 2.0, 3.0, 4.0});
  CMatrix b = from_rows(2, 2, {0.0, 5.0, 6.0, 7.0});
  CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  // Block (i1,j1) is a[i1,j1] * b.
  CHECK(k.at(0, 1) == cplx(5.0));
  CHECK(k.at(1, 0) == cplx(6.0));
  CHECK(k.at(0, 3) == cplx(10.0));
  CHECK(k.at(3, 2) == cplx(24.0));
  CHECK(k.at(2, 2) == cplx(0.0));
  CHECK(k.at(3, 3) == cplx(28.0));
}

TEST_CASE("mixed-product identity (A otimes B)(C otimes D) = AC otimes BD") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 10; ++round) {
    CMatrix a = random_matrix(rng, 2, 3);
    CMatrix c = random_matrix(rng, 3, 2);
    CMatrix b = random_matrix(rng, 2, 2);
    CMatrix d = random_matrix(rng, 2, 4);
    CMatrix lhs = matmul(kron(a, b), kron(c, d));
    CMatrix rhs = kron(matmul(a, c), matmul(b, d));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("adjoint conjugates and transposes") {
  CMatrix m = from_rows(2, 3, {cplx(1, 2), cplx(0, -1), 3.0, 4.0, cplx(0, 5), 0.0});
  CMatrix h = adjoint(m);
  REQUIRE(h.rows() == 3);
  REQUIRE(h.cols() == 2);
  CHECK(h.at(0, 0) == cplx(1, -2));
  CHECK(h.at(1, 0) == cplx(0, 1));
  CHECK(h.at(1, 1) == cplx(0, -5));
  CHECK(h.at(2, 0) == cplx(3, 0));
  CHECK(adjoint(h) == m);
}

TEST_CASE("trace, add, scale") {
  CMatrix m = from_rows(2, 2, {cplx(1, 1), 9.0, 9.0, cplx(2, -3)});
  CHECK(trace(m) == cplx(3, -2));
  CHECK_THROWS_AS(trace(CMatrix(2, 3)), std::invalid_argument);

  CMatrix s = add(m, CMatrix::identity(2));
  CHECK(s.at(0, 0) == cplx(2, 1));
  CHECK(s.at(0, 1) == cplx(9, 0));
  CHECK_THROWS_AS(add(m, CMatrix(2, 3)), std::invalid_argument);

  CMatrix t = scale(cplx(0, 2), m);
  CHECK(t.at(0, 0) == cplx(-2, 2));
  CHECK(t.at(1, 1) == cplx(6, 4));
}

TEST_CASE("max_abs_diff and approx_eq") {
  CMatrix a = CMatrix::identity(2);
  CMatrix b = a;
  b.at(1, 0) = cplx(0.0, 3e-10);
  CHECK(max_abs_diff(a, b) == doctest::Approx(3e-10));
  CHECK(approx_eq(a, b));
  CHECK(approx_eq(a, b, Tolerance(1e-9)));
  CHECK_FALSE(approx_eq(a, b, Tolerance(1e-10)));
  CHECK_THROWS_AS(max_abs_diff(a, CMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(approx_eq(a, CMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("tolerance rejects negative eps") {
  CHECK_THROWS_AS(Tolerance(-1e-9), std::invalid_argument);
  CHECK(Tolerance(0.0).eps == 0.0);
  CHECK(Tolerance{}.eps == doctest::Approx(1e-9));
}
