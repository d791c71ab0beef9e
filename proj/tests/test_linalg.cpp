#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grex/linalg.hpp"

using namespace grex;

namespace {

template <class K>
Mat<K> from_ints(const std::vector<std::vector<long>>& rows, const FieldSpec& f) {
  Mat<K> m(Index(rows.size()), rows.empty() ? 0 : Index(rows[0].size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = FieldOps<K>::from_int(rows[size_t(i)][size_t(j)], f);
  return m;
}

}  // namespace

TEST_CASE("rref on dependent rows over Q") {
  FieldSpec q;
  auto a = from_ints<Rat>({{1, 2}, {2, 4}}, q);
  auto e = rref(a);
  CHECK(e.rank == 1);
  CHECK(e.pivots == std::vector<Index>{0});
  CHECK(e.R(0, 0) == Rat(1));
  CHECK(e.R(0, 1) == Rat(2));
}

TEST_CASE("rref identity over F_5 and char-2 dependence") {
  FieldSpec f5(5);
  auto id = from_ints<Fp>({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, f5);
  auto e = rref(id);
  CHECK(e.rank == 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(e.R(i, j) == id(i, j));

  FieldSpec f2(2);
  auto a = from_ints<Fp>({{1, 1}, {1, 1}}, f2);
  auto e2 = rref(a);
  CHECK(e2.rank == 1);
  CHECK(e2.R(0, 1).value() == 1);
  CHECK(e2.R(1, 0).is_zero());
  CHECK(e2.R(1, 1).is_zero());
}

TEST_CASE("kernel basis shapes") {
  FieldSpec q;
  Mat<Rat> z(2, 3);
  z.setZero();
  CHECK(kernel_basis(z).cols() == 3);

  FieldSpec f2(2);
  auto a = from_ints<Fp>({{1, 1}}, f2);
  auto k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0).value() == 1);
  CHECK(k(1, 0).value() == 1);

  auto inv = from_ints<Rat>({{1, 1}, {0, 1}}, q);
  CHECK(kernel_basis(inv).cols() == 0);
}

TEST_CASE("membership") {
  FieldSpec q;
  auto id = from_ints<Rat>({{1, 0}, {0, 1}}, q);
  Vec<Rat> v(2);
  v << Rat(7), Rat(-3);
  auto c = membership(id, v);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == Rat(7));
  CHECK((*c)[1] == Rat(-3));

  auto col = from_ints<Rat>({{1}, {0}}, q);
  Vec<Rat> w(2);
  w << Rat(0), Rat(1);
  CHECK(!membership(col, w).has_value());

  FieldSpec f5(5);
  auto two = from_ints<Fp>({{2}}, f5);
  Vec<Fp> u(1);
  u << Fp::make(1, 5);
  auto s = membership(two, u);
  REQUIRE(s.has_value());
  CHECK((*s)[0].value() == 3);  // 2*3 = 6 = 1 mod 5

  CHECK_THROWS_AS(membership(two, w), std::invalid_argument);
}

TEST_CASE("subspace algebra") {
  FieldSpec q;
  auto a = Subspace<Rat>::from_rows(from_ints<Rat>({{1, 0, 1}, {0, 1, 1}}, q));
  auto b = Subspace<Rat>::from_rows(from_ints<Rat>({{1, 1, 2}}, q));
  CHECK(a.dim() == 2);
  CHECK(a.contains(b));
  CHECK(!b.contains(a));
  CHECK(sum(a, b) == a);
  auto c = Subspace<Rat>::from_rows(from_ints<Rat>({{0, 0, 1}}, q));
  CHECK(intersect(a, c).dim() == 0);
  auto d = intersect(a, sum(b, c));
  CHECK(d.dim() == 2);  // b+c contains (1,1,2),(0,0,1) => (1,1,0),... meets a in dim 2? a∩(b+c): b+c is 2-dim
  auto reps = quotient_reps(a, b);
  CHECK(reps.rows() == 1);
}

TEST_CASE("seeded random matrices: rank-nullity, kernel, idempotence") {
  std::mt19937 rng(12345);
  FieldSpec f(32003);
  for (int iter = 0; iter < 200; ++iter) {
    Index r = 1 + Index(rng() % 6), c = 1 + Index(rng() % 6);
    Mat<Fp> a(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) a(i, j) = Fp::make(int64_t(rng() % 19) - 9, f.p);
    auto e = rref(a);
    auto k = kernel_basis(a);
    CHECK(e.rank + k.cols() == c);
    CHECK(is_zero_mat<Fp>(a * k));
    auto e2 = rref(e.R);
    CHECK(e2.rank == e.rank);
    for (Index i = 0; i < e.R.rows(); ++i)
      for (Index j = 0; j < e.R.cols(); ++j) CHECK(e2.R(i, j) == e.R(i, j));
    // membership(A, A*c) succeeds and reproduces A*c
    Vec<Fp> coef(c);
    for (Index j = 0; j < c; ++j) coef[j] = Fp::make(int64_t(rng() % 7), f.p);
    Vec<Fp> v = a * coef;
    auto m = membership(a, v);
    REQUIRE(m.has_value());
    CHECK(is_zero_vec<Fp>(Vec<Fp>(a * *m - v)));
  }
}
