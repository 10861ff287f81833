#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "liewhit/linalg.hpp"

using namespace liewhit;

TEST_CASE("rank on the small fixed cases") {
  CHECK(rank(SparseMatrix::identity(2)) == 2);
  CHECK(rank(SparseMatrix(3, 3)) == 0);

  SparseMatrix m(2, 2);  // [[1,2],[2,4]] has proportional rows
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  m.set(1, 0, 2);
  m.set(1, 1, 4);
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(SparseMatrix::identity(2)).empty());
  CHECK(kernel_basis(SparseMatrix(1, 3)).size() == 3);

  SparseMatrix m(1, 2);  // [[1,-1]] has kernel spanned by (1,1)
  m.set(0, 0, 1);
  m.set(0, 1, -1);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("solve") {
  SparseMatrix id = SparseMatrix::identity(2);
  auto x = solve(id, {Rational(3), Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 3);
  CHECK((*x)[1] == 5);

  SparseMatrix m(1, 2);  // x + y = 2, any (t, 2-t) solves
  m.set(0, 0, 1);
  m.set(0, 1, 1);
  auto y = solve(m, {Rational(2)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] + (*y)[1] == 2);

  SparseMatrix inc(2, 1);  // x = 0 and x = 1 is inconsistent
  inc.set(0, 0, 1);
  inc.set(1, 0, 1);
  CHECK(!solve(inc, {Rational(0), Rational(1)}).has_value());

  CHECK_THROWS_AS(solve(inc, {Rational(0)}), usage_error);
}

TEST_CASE("rank-nullity and exact kernel residuals on random matrices") {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<int> dim(1, 7), val(-4, 4), den(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    int r = dim(rng), c = dim(rng);
    SparseMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (val(rng) > 1) m.set(i, j, rat(val(rng), den(rng)));
    auto ker = kernel_basis(m);
    CHECK(rank(m) + static_cast<int>(ker.size()) == c);
    for (const auto& v : ker) {
      auto image = m.apply(v);
      for (const auto& entry : image) CHECK(entry == 0);
    }
    // Any consistent system solves exactly.
    std::vector<Rational> x0(c);
    for (auto& e : x0) e = rat(val(rng), den(rng));
    auto rhs = m.apply(x0);
    auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == rhs);
  }
}

TEST_CASE("row space canonical form") {
  RowSpace s(3);
  CHECK(s.insert({Rational(1), Rational(2), Rational(0)}));
  CHECK(s.insert({Rational(0), Rational(1), Rational(1)}));
  CHECK(!s.insert({Rational(1), Rational(3), Rational(1)}));  // dependent
  CHECK(s.dim() == 2);
  CHECK(s.contains({Rational(2), Rational(5), Rational(1)}));
  CHECK(!s.contains({Rational(0), Rational(0), Rational(1)}));

  RowSpace t(3);
  t.insert({Rational(0), Rational(2), Rational(2)});
  t.insert({Rational(2), Rational(4), Rational(0)});
  CHECK(s == t);  // same space, same canonical form
}
