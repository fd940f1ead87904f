#include "doctest.h"

#include <random>

#include "lorentz/enumerate.hpp"
#include "lorentz/exact.hpp"

using namespace lorentz;

namespace {

IntMat random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_diagonal(const IntMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("det of small matrices") {
  CHECK(det(IntMat{{2, 1}, {1, 2}}) == 3);
  CHECK(det(IntMat{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMat{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(det(IntMat{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}) == -30);
}

TEST_CASE("hnf transform reproduces the form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat m = random_matrix(rng, 6, 4, 9);
    HermiteResult h = hnf(m);
    CHECK(h.transform * m == h.form);
    CHECK(abs(det(h.transform)) == 1);
    CHECK(h.rank <= 4);
    std::size_t last = 0;
    for (std::size_t r = 0; r < h.rank; ++r) {
      std::size_t p = 0;
      while (h.form(r, p) == 0) ++p;
      CHECK(h.form(r, p) > 0);
      if (r > 0) CHECK(p > last);
      last = p;
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(h.form(above, p) >= 0);
        CHECK(h.form(above, p) < h.form(r, p));
      }
    }
    for (std::size_t r = h.rank; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) CHECK(h.form(r, c) == 0);
  }
}

TEST_CASE("snf diagonal with divisibility chain") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat m = random_matrix(rng, 4, 5, 12);
    SmithResult s = snf(m);
    CHECK(s.left * m * s.right == s.diag);
    CHECK(is_diagonal(s.diag));
    CHECK(abs(det(s.left)) == 1);
    CHECK(abs(det(s.right)) == 1);
    for (std::size_t i = 0; i + 1 < 4; ++i) {
      const Int& a = s.diag(i, i);
      const Int& b = s.diag(i + 1, i + 1);
      CHECK(a >= 0);
      if (a != 0) CHECK(b % a == 0);
      else CHECK(b == 0);
    }
  }
  SmithResult s = snf(IntMat{{2, 0}, {0, 3}});
  CHECK(s.diag(0, 0) == 1);
  CHECK(s.diag(1, 1) == 6);
}

TEST_CASE("left kernel is saturated") {
  IntMat m{{2, 4}, {1, 2}, {3, 6}};
  IntMat k = left_kernel(m);
  CHECK(k.rows() == 2);
  for (std::size_t r = 0; r < k.rows(); ++r) {
    IntVec v = mul(k.row(r), m);
    for (const Int& x : v) CHECK(x == 0);
  }
  // (1, -2, 0) is in the kernel; its coordinates in k must be integral.
  RatMat kr = to_rational(k);
  auto sol = solve_left(kr, RatVec{1, -2, 0});
  REQUIRE(sol);
  for (const Rat& x : *sol) CHECK(x.get_den() == 1);
}

TEST_CASE("inverse and ldl") {
  IntMat g{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  RatMat inv = inverse(g);
  CHECK(to_rational(g) * inv == RatMat::identity(3));
  LdlResult f = ldl(g);
  RatMat d(3, 3);
  for (std::size_t i = 0; i < 3; ++i) d(i, i) = f.diag[i];
  CHECK(f.lower * d * f.lower.transpose() == to_rational(g));
  CHECK_THROWS_AS(inverse(IntMat{{1, 2}, {2, 4}}), MathError);
}

TEST_CASE("positive definiteness and quad forms") {
  CHECK(is_positive_definite(IntMat{{2, 1}, {1, 2}}));
  CHECK_FALSE(is_positive_definite(IntMat{{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(QuadForm(IntMat{{0, 1}, {1, 0}}, Signature::positive_definite), MathError);
  QuadForm h(IntMat{{0, 1}, {1, 0}}, Signature::lorentzian);
  CHECK(h.norm(IntVec{1, 1}) == 2);
  CHECK(h.is_even());
  QuadForm z2(IntMat{{1, 0}, {0, 1}}, Signature::positive_definite);
  CHECK_FALSE(z2.is_even());
}

TEST_CASE("lll reduces a skewed basis of Z^3") {
  IntMat b{{1, 0, 0}, {57, 1, 0}, {913, 44, 1}};
  IntMat g = b * b.transpose();
  LllResult r = lll_gram(g);
  CHECK(r.transform * g * r.transform.transpose() == r.gram);
  CHECK(abs(det(r.transform)) == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.gram(i, i) == 1);
}

TEST_CASE("sphere enumeration in small lattices") {
  QuadForm z2(IntMat{{1, 0}, {0, 1}}, Signature::positive_definite);
  CHECK(enumerate_sphere(z2, RatVec{0, 0}, Rat(5), SphereMode::exact).size() == 8);
  CHECK(enumerate_sphere(z2, RatVec{0, 0}, Rat(2), SphereMode::at_most).size() == 9);
  CHECK(enumerate_sphere(z2, RatVec{Rat(1, 2), Rat(1, 2)}, Rat(1, 2), SphereMode::exact).size() == 4);
  QuadForm a2(IntMat{{2, -1}, {-1, 2}}, Signature::positive_definite);
  CHECK(enumerate_sphere(a2, RatVec{0, 0}, Rat(2), SphereMode::exact).size() == 6);
  // Deep hole of A2: three nearest points at norm 2/3.
  CHECK(enumerate_sphere(a2, RatVec{Rat(1, 3), Rat(2, 3)}, Rat(2, 3), SphereMode::exact).size() == 3);
  QuadForm h(IntMat{{0, 1}, {1, 0}}, Signature::lorentzian);
  CHECK_THROWS_AS(enumerate_sphere(h, RatVec{0, 0}, Rat(2), SphereMode::exact), MathError);
  CHECK_THROWS_AS(enumerate_sphere(z2, RatVec{0, 0}, Rat(-1), SphereMode::exact), MathError);
}

TEST_CASE("e8 root count") {
  IntMat e8{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
            {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
            {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, -1, 0, 0, 0, 0, 2}};
  QuadForm q(e8, Signature::positive_definite);
  CHECK(det(e8) == 1);
  CHECK(enumerate_sphere(q, RatVec(8, Rat(0)), Rat(2), SphereMode::exact).size() == 240);
  CHECK(enumerate_sphere(q, RatVec(8, Rat(0)), Rat(4), SphereMode::exact).size() == 2160);
}
