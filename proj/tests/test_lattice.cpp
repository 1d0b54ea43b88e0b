#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toric/double_description.hpp"
#include "toric/generator.hpp"
#include "toric/lattice.hpp"
#include "toric/oracle.hpp"

using namespace toric;

namespace {

MatrixX<Integer> random_matrix(std::mt19937_64& rng, int rows, int cols, int range) {
  MatrixX<Integer> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, -range, range);
  return m;
}

MatrixX<Coeff> to_coeff(const MatrixX<Integer>& m) {
  MatrixX<Coeff> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<Coeff>();
  return out;
}

}  // namespace

TEST_CASE("big-integer scalars work inside Eigen expressions") {
  MatrixX<Integer> a(2, 2);
  a << 2, 1, 1, 1;
  const MatrixX<Integer> b = Integer(3) * a;
  CHECK(b(0, 0) == 6);
  const MatrixX<Integer> c = a * a;
  CHECK(c(0, 0) == 5);
  CHECK(determinant(a) == 1);
}

TEST_CASE("narrowing checks range") {
  CHECK(narrow<int>(Integer(42)) == 42);
  CHECK_THROWS_AS(narrow<int>(Integer(1) << 40), Error);
  CHECK(floor_div<Integer>(-7, 2) == -4);
  CHECK(floor_div<Coeff>(7, -2) == -4);
  CHECK(gcd_value<Integer>(-12, 18) == 6);
}

TEST_CASE("determinant and rank") {
  MatrixX<Integer> m(3, 3);
  m << 1, 2, 3, 4, 5, 6, 7, 8, 10;
  CHECK(determinant(m) == -3);
  CHECK(rank(m) == 3);
  m(2, 2) = 9;
  CHECK(determinant(m) == 0);
  CHECK(rank(m) == 2);
}

TEST_CASE("Hermite reduction gives one representative per coset") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = uniform_int(rng, 1, 6);
    const int cols = uniform_int(rng, 1, 6);
    const auto gens = random_matrix(rng, rows, cols, 4);
    const HermiteLattice<Integer> lat(gens);
    CHECK(lat.rank() == rank(gens));
    const auto v = random_matrix(rng, rows, 1, 9).col(0).eval();
    const auto y = random_matrix(rng, cols, 1, 3).col(0).eval();
    const VectorX<Integer> shifted = v + gens * y;
    CHECK(lat.reduce(v) == lat.reduce(shifted));
    CHECK(lat.reduce(lat.reduce(v)) == lat.reduce(v));
    CHECK(lat.contains(gens * y));
  }
}

TEST_CASE("integer kernel") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = uniform_int(rng, 1, 4);
    const int cols = uniform_int(rng, 2, 6);
    const auto a = random_matrix(rng, rows, cols, 3);
    const auto k = integer_kernel(a);
    CHECK(k.cols() == cols - rank(a));
    CHECK((a * k).isZero());
    if (k.cols() > 0) CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("Smith invariants match gcds of minors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = uniform_int(rng, 1, 5);
    const int cols = uniform_int(rng, 1, 4);
    const auto m = random_matrix(rng, rows, cols, 6);
    const auto snf = smith_normal_form(m);
    CHECK(snf.invariants == oracle::determinantal_invariants(to_coeff(m)));
    CHECK(snf.rank() == rank(m));
    for (std::size_t i = 1; i < snf.invariants.size(); ++i) CHECK(snf.invariants[i] % snf.invariants[i - 1] == 0);
  }
}

TEST_CASE("double description finds the facets of the cubical cone") {
  // cone over the unit square at height 1
  MatrixX<Integer> pts(4, 3);
  pts << 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1;
  const auto fs = facet_normals(pts);
  REQUIRE(fs.size() == 4);
  for (const auto& f : fs) CHECK(f.incident.count() == 2);
  CHECK_THROWS_AS(facet_normals(MatrixX<Integer>(pts.topRows(2))), Error);
}

TEST_CASE("double description agrees with cofactor enumeration on random cones") {
  std::mt19937_64 rng(6);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int d = uniform_int(rng, 2, 4);
    const int count = uniform_int(rng, d, d + 5);
    MatrixX<Integer> pts(count, d);
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j + 1 < d; ++j) pts(i, j) = uniform_int(rng, -3, 3);
      pts(i, d - 1) = uniform_int(rng, 1, 3);  // pointed: all in the upper half-space
    }
    if (rank(pts) < d) continue;
    ++checked;
    std::vector<LatticePoint> got;
    for (const auto& f : facet_normals(pts)) got.push_back(narrow_vector<Coeff>(f.normal));
    CHECK(got == oracle::facet_normals(to_coeff(pts)));
  }
  CHECK(checked > 40);
}
