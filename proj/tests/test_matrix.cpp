#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "opk/snf.hpp"
#include "opk/sparse_matrix.hpp"

using namespace opk;

namespace {

SparseIntMatrix from_rows(int rows, int cols,
                          std::initializer_list<std::initializer_list<int>> v) {
  SparseIntMatrix m(rows, cols);
  int r = 0;
  for (const auto& row : v) {
    int c = 0;
    for (int x : row) m.set(r, c++, Int(x));
    ++r;
  }
  return m;
}

std::vector<Int> divisors_of(const SparseIntMatrix& m) {
  return smith_normal_form(m).divisors;
}

Int det3(const SparseIntMatrix& m) {
  auto a = [&](int r, int c) { return m.get(r, c); };
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

}  // namespace

TEST_CASE("sparse matrix arithmetic") {
  SparseIntMatrix a = from_rows(2, 3, {{1, 0, 2}, {0, -1, 3}});
  SparseIntMatrix b = from_rows(3, 2, {{1, 1}, {0, 2}, {5, 0}});
  SparseIntMatrix ab = a * b;
  CHECK(ab.rows() == 2);
  CHECK(ab.cols() == 2);
  CHECK(ab.get(0, 0) == 11);
  CHECK(ab.get(0, 1) == 1);
  CHECK(ab.get(1, 0) == 15);
  CHECK(ab.get(1, 1) == -2);

  CHECK((a + a) == a.scaled(2));
  CHECK((a - a).is_zero());
  CHECK(a.transposed().transposed() == a);
  CHECK(SparseIntMatrix::identity(3) * b == b);

  std::map<int, Int> v{{0, 1}, {2, -1}};
  auto av = a.apply(v);
  CHECK(av.at(0) == -1);
  CHECK(av.at(1) == -3);

  SparseIntMatrix z(2, 3);
  z.set(1, 1, 4);
  z.set(1, 1, 0);
  CHECK(z.is_zero());
  z.add_to(0, 0, 2);
  z.add_to(0, 0, -2);
  CHECK(z.nnz() == 0);
}

TEST_CASE("smith normal form on pinned examples") {
  CHECK(divisors_of(from_rows(2, 2, {{2, 0}, {0, 3}})) ==
        std::vector<Int>{1, 6});
  CHECK(divisors_of(from_rows(2, 2, {{2, 4}, {4, 8}})) == std::vector<Int>{2});
  CHECK(divisors_of(from_rows(2, 2, {{1, 2}, {3, 4}})) ==
        std::vector<Int>{1, 2});
  CHECK(divisors_of(from_rows(2, 2, {{4, 6}, {6, 9}})) == std::vector<Int>{1});
  CHECK(divisors_of(from_rows(3, 3, {{3, 1, 0}, {1, 3, 1}, {0, 1, 3}})) ==
        std::vector<Int>{1, 1, 21});
  CHECK(divisors_of(SparseIntMatrix::identity(3)) ==
        std::vector<Int>{1, 1, 1});
  CHECK(smith_normal_form(SparseIntMatrix(4, 2)).rank == 0);
  CHECK(smith_normal_form(SparseIntMatrix(0, 5)).rank == 0);

  // divisibility chain d1 | d2 | ... on a mixed example
  auto d = divisors_of(from_rows(3, 3, {{2, 0, 0}, {0, 6, 0}, {0, 0, 10}}));
  CHECK(d == std::vector<Int>{2, 2, 30});
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937_64 rng(0x5eed0001ull);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    SparseIntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        if (rng() % 3) m.set(r, c, Int(entry(rng)));

    SnfResult s = smith_normal_form(m);
    SnfResult st = smith_normal_form(m.transposed());
    CHECK(s.rank == st.rank);
    CHECK(s.divisors == st.divisors);
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
      CHECK(s.divisors[i] > 0);
      CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
    }

    // unimodular changes of basis do not move the divisors
    auto [u, uinv] = testgen::random_basis_change(rows, rng, 5);
    auto [w, winv] = testgen::random_basis_change(cols, rng, 5);
    CHECK((u * uinv) == SparseIntMatrix::identity(rows));
    CHECK((w * winv) == SparseIntMatrix::identity(cols));
    CHECK(smith_normal_form(u * m * w).divisors == s.divisors);
  }
}

TEST_CASE("smith normal form divisor product equals |det| for 3x3") {
  std::mt19937_64 rng(0x5eed0002ull);
  std::uniform_int_distribution<int> entry(-4, 4);
  int nonsingular_seen = 0;
  for (int trial = 0; trial < 80; ++trial) {
    SparseIntMatrix m(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) m.set(r, c, Int(entry(rng)));
    Int d = det3(m);
    SnfResult s = smith_normal_form(m);
    if (d == 0) {
      CHECK(s.rank < 3);
    } else {
      ++nonsingular_seen;
      REQUIRE(s.rank == 3);
      Int prod = 1;
      for (const auto& x : s.divisors) prod *= x;
      CHECK(prod == abs_int(d));
    }
  }
  CHECK(nonsingular_seen > 40);
}

TEST_CASE("integral column span membership") {
  // columns (2,0) and (0,3)
  SparseIntMatrix m = from_rows(2, 2, {{2, 0}, {0, 3}});
  CHECK(in_column_span(m, {{0, Int(2)}}));
  CHECK(in_column_span(m, {{1, Int(3)}}));
  CHECK(in_column_span(m, {{0, Int(2)}, {1, Int(3)}}));
  CHECK(in_column_span(m, {}));
  CHECK_FALSE(in_column_span(m, {{0, Int(1)}}));
  CHECK_FALSE(in_column_span(m, {{0, Int(2)}, {1, Int(1)}}));

  // single column (2,4)
  SparseIntMatrix n = from_rows(2, 1, {{2}, {4}});
  CHECK(in_column_span(n, {{0, Int(4)}, {1, Int(8)}}));
  CHECK_FALSE(in_column_span(n, {{0, Int(1)}, {1, Int(2)}}));
  CHECK_FALSE(in_column_span(n, {{0, Int(2)}, {1, Int(5)}}));

  // span check is insensitive to a unimodular recombination of columns
  std::mt19937_64 rng(0x5eed0003ull);
  for (int trial = 0; trial < 30; ++trial) {
    auto [w, winv] = testgen::random_basis_change(2, rng, 4);
    SparseIntMatrix mw = m * w;
    CHECK(in_column_span(mw, {{0, Int(2)}}));
    CHECK_FALSE(in_column_span(mw, {{0, Int(1)}}));
    CHECK_FALSE(in_column_span(mw, {{1, Int(1)}}));
  }
}
