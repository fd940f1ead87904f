#include "doctest.h"

#include <functional>
#include <numeric>

#include "lorentz/rootsys.hpp"

using namespace lorentz;

namespace {

IpMatrix gram_from_cartan(const IntMat& c) {
  IpMatrix ip(c.rows(), std::vector<std::int64_t>(c.cols()));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) ip[i][j] = -c(i, j).get_si();
  return ip;
}

// Block sum of Cartan matrices, in the given order.
IpMatrix block_gram(const std::vector<std::pair<RootKind, int>>& parts) {
  std::size_t n = 0;
  for (auto [k, r] : parts) n += static_cast<std::size_t>(r);
  IpMatrix ip(n, std::vector<std::int64_t>(n, 0));
  std::size_t off = 0;
  for (auto [k, r] : parts) {
    IntMat c = cartan_matrix(k, r);
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) ip[off + i][off + j] = -c(i, j).get_si();
    off += c.rows();
  }
  return ip;
}

std::int64_t pairing(const IntMat& c, const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * c(i, j).get_si() * y[j];
  return s;
}

// Largest set of pairwise orthogonal positive roots, by exhaustive search.
int brute_max_orthogonal(const IntMat& c) {
  const auto roots = positive_roots(c);
  const std::size_t n = roots.size();
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) orth[i][j] = pairing(c, roots[i], roots[j]) == 0;
  const int cap = static_cast<int>(c.rows());
  int best = 0;
  std::function<void(std::vector<std::size_t>&, int)> grow = [&](std::vector<std::size_t>& cand, int size) {
    best = std::max(best, size);
    if (best == cap) return;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      if (size + static_cast<int>(cand.size() - k) <= best) return;
      std::vector<std::size_t> next;
      for (std::size_t l = k + 1; l < cand.size(); ++l)
        if (orth[cand[k]][cand[l]]) next.push_back(cand[l]);
      grow(next, size + 1);
    }
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  grow(all, 0);
  return best;
}

std::vector<std::pair<RootKind, int>> all_types(int max_rank) {
  std::vector<std::pair<RootKind, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({RootKind::a, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({RootKind::d, n});
  for (int n = 6; n <= 8; ++n) out.push_back({RootKind::e, n});
  return out;
}

}  // namespace

TEST_CASE("classify small diagrams") {
  CHECK(classify_gram({{-2}}).signature() == "a_1");
  RootSystem aff = classify_gram({{-2, 2}, {2, -2}});
  CHECK(aff.signature() == "A_1");
  CHECK(aff.components[0].coxeter == 2);
  CHECK(classify_gram({}).signature() == "None");
  CHECK(classify_gram({{-2, 1}, {1, -2}}).signature() == "a_2");
  CHECK_THROWS_AS(classify_gram({{-2, 3}, {3, -2}}), MathError);
  CHECK_THROWS_AS(classify_gram({{-2, 2, 0}, {2, -2, 1}, {0, 1, -2}}), MathError);
}

TEST_CASE("classify standard spherical types") {
  for (auto [k, r] : all_types(25)) {
    RootSystem rs = classify_gram(gram_from_cartan(cartan_matrix(k, r)));
    REQUIRE(rs.components.size() == 1);
    CHECK(rs.components[0].kind == k);
    CHECK(rs.components[0].rank == r);
    CHECK_FALSE(rs.components[0].affine);
    CHECK(rs.components[0].coxeter == coxeter_number(k, r));
  }
}

TEST_CASE("signature ordering") {
  IpMatrix ip = block_gram({{RootKind::a, 1}, {RootKind::a, 3}, {RootKind::d, 4}, {RootKind::a, 5},
                            {RootKind::a, 3}, {RootKind::a, 5}, {RootKind::a, 1}});
  CHECK(classify_gram(ip).signature() == "a_5^2 d_4 a_3^2 a_1^2");
  ip = block_gram({{RootKind::a, 6}, {RootKind::d, 6}, {RootKind::e, 6}});
  CHECK(classify_gram(ip).signature() == "e_6 d_6 a_6");
}

TEST_CASE("affine diagrams from extended Cartan matrices") {
  // Extend each spherical type by its lowest root and reclassify.
  for (auto [k, r] : all_types(12)) {
    IntMat c = cartan_matrix(k, r);
    auto marks = highest_root_marks(c);
    const std::size_t n = c.rows();
    IpMatrix ip(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ip[i][j] = -c(i, j).get_si();
    ip[n][n] = -2;
    std::vector<std::int64_t> theta = marks;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (std::size_t j = 0; j < n; ++j) p += c(i, j).get_si() * theta[j];
      // Extending node -theta has Lorentzian inner product p with node i.
      ip[i][n] = ip[n][i] = p;
    }
    RootSystem rs = classify_gram(ip);
    REQUIRE(rs.components.size() == 1);
    const ADEComponent& comp = rs.components[0];
    CHECK(comp.affine);
    CHECK(comp.kind == k);
    CHECK(comp.rank == r);
    CHECK(comp.coxeter == coxeter_number(k, r));
    CHECK(comp.marks[n] == 1);
  }
}

TEST_CASE("highest root marks") {
  for (auto [k, r] : all_types(25)) {
    IntMat c = cartan_matrix(k, r);
    auto marks = highest_root_marks(c);
    const std::int64_t sum = std::accumulate(marks.begin(), marks.end(), std::int64_t{0});
    CHECK(sum == coxeter_number(k, r) - 1);
    CHECK(pairing(c, marks, marks) == 2);
  }
  auto e8 = highest_root_marks(cartan_matrix(RootKind::e, 8));
  CHECK(std::accumulate(e8.begin(), e8.end(), 0) == 29);
}

TEST_CASE("positive root counts") {
  for (auto [k, r] : all_types(12)) {
    const auto roots = positive_roots(cartan_matrix(k, r));
    CHECK(static_cast<int>(roots.size()) * 2 == r * coxeter_number(k, r));
  }
}

TEST_CASE("weyl vector norms") {
  for (auto [k, r] : all_types(25)) {
    ADEComponent c;
    c.kind = k;
    c.rank = r;
    const int h = coxeter_number(k, r);
    Rat expect(-h * (h + 1) * r, 12);
    expect.canonicalize();
    CHECK(weyl_vector_norm(c) == expect);
  }
  ADEComponent a1;
  a1.kind = RootKind::a;
  a1.rank = 1;
  CHECK(weyl_vector_norm(a1) == Rat(-1, 2));
  RootSystem rs = classify_gram(block_gram(std::vector<std::pair<RootKind, int>>(9, {RootKind::a, 1})));
  CHECK(-2 * weyl_vector_norm(rs) == 9);
  rs = classify_gram(block_gram({{RootKind::d, 24}, {RootKind::a, 1}}));
  CHECK(-2 * weyl_vector_norm(rs) == 93 * 93);
}

TEST_CASE("max orthogonal closed forms against exhaustive search") {
  for (auto [k, r] : all_types(10)) {
    ADEComponent c;
    c.kind = k;
    c.rank = r;
    CHECK_MESSAGE(max_orthogonal(c) == brute_max_orthogonal(cartan_matrix(k, r)), c.name());
  }
  RootSystem rs = classify_gram(block_gram({{RootKind::e, 6}, {RootKind::e, 6}, {RootKind::e, 6},
                                            {RootKind::e, 6}, {RootKind::a, 1}}));
  CHECK(max_orthogonal(rs) == 17);
  rs = classify_gram(block_gram({{RootKind::e, 7}, {RootKind::e, 7}, {RootKind::e, 7}, {RootKind::d, 4}}));
  CHECK(max_orthogonal(rs) == 25);
}

TEST_CASE("removing a component leaves the rest unchanged") {
  IpMatrix full = block_gram({{RootKind::e, 6}, {RootKind::d, 5}, {RootKind::a, 3}});
  IpMatrix part = block_gram({{RootKind::d, 5}, {RootKind::a, 3}});
  CHECK(classify_gram(full).signature() == "e_6 d_5 a_3");
  CHECK(classify_gram(part).signature() == "d_5 a_3");
}
