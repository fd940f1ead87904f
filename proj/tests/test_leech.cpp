#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>

#include "lorentz/data.hpp"
#include "lorentz/leech.hpp"

using namespace lorentz;

namespace {

// Minimal vectors listed by shape: (+-4)^2, (+-2)^8 on an octad with an even
// number of minus signs, and (-+3, +-1^23) patterned by a codeword.
std::set<LeechVec> minimal_vectors_by_shape(const GolayCode& code) {
  std::set<LeechVec> out;
  for (std::size_t i = 0; i < kLeechDim; ++i)
    for (std::size_t j = i + 1; j < kLeechDim; ++j)
      for (int si : {-4, 4})
        for (int sj : {-4, 4}) {
          LeechVec v{};
          v[i] = si;
          v[j] = sj;
          out.insert(v);
        }
  for (std::uint32_t w : code.words()) {
    if (std::popcount(w) != 8) continue;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < kLeechDim; ++i)
      if (w >> i & 1u) pos.push_back(i);
    for (std::uint32_t signs = 0; signs < 256; ++signs) {
      if (std::popcount(signs) % 2 != 0) continue;
      LeechVec v{};
      for (std::size_t k = 0; k < 8; ++k) v[pos[k]] = (signs >> k & 1u) ? -2 : 2;
      out.insert(v);
    }
  }
  for (std::uint32_t w : code.words())
    for (std::size_t i = 0; i < kLeechDim; ++i) {
      LeechVec v;
      for (std::size_t k = 0; k < kLeechDim; ++k) v[k] = (w >> k & 1u) ? -1 : 1;
      v[i] = v[i] == 1 ? -3 : 3;
      out.insert(v);
    }
  return out;
}

}  // namespace

TEST_CASE("golay code from bundled generator") {
  GolayCode code = GolayCode::from_file(data_path("golay12x24.txt"));
  CHECK(code.words().size() == 4096);
  CHECK(code.min_weight() == 8);
  auto dist = code.weight_distribution();
  CHECK(dist[8] == 759);
  CHECK(dist[12] == 2576);
  CHECK(code.contains(0xFFFFFFu));
  CHECK_THROWS(GolayCode::from_rows({1, 2, 4}));
  auto rows = code.generator();
  rows[0] ^= 1u << 23;
  CHECK_THROWS(GolayCode::from_rows(rows));
}

TEST_CASE("leech basis is even unimodular") {
  const Leech& l = Leech::instance();
  CHECK(det(l.gram()) == 1);
  for (std::size_t i = 0; i < kLeechDim; ++i) CHECK(l.gram()(i, i) % 2 == 0);
  CHECK(is_positive_definite(l.gram()));
}

TEST_CASE("leech membership") {
  const Leech& l = Leech::instance();
  LeechVec v{};
  v[0] = 4;
  v[5] = -4;
  CHECK(l.contains(v));
  v[5] = 0;
  CHECK_FALSE(l.contains(v));
  v[0] = 8;
  CHECK(l.contains(v));
  LeechVec odd;
  odd.fill(1);
  odd[3] = -3;
  CHECK(l.contains(odd));
  odd[3] = 5;
  CHECK(l.contains(odd));
  odd[4] = 3;
  CHECK_FALSE(l.contains(odd));
  auto y = l.coords(v);
  REQUIRE(y);
  CHECK(l.from_coords(*y) == v);
  LeechVec bad{};
  bad[0] = 1;
  CHECK_FALSE(l.coords(bad));
}

TEST_CASE("leech minimal vectors match the shape census") {
  const Leech& l = Leech::instance();
  auto shapes = minimal_vectors_by_shape(l.golay());
  CHECK(shapes.size() == 196560);
  for (const LeechVec& v : shapes) {
    REQUIRE(l.contains(v));
    REQUIRE(scaled_norm(v) == 32);
  }
  ScaledCenter origin;
  auto mins = l.points_at(origin, Rat(4), SphereMode::exact);
  CHECK(mins.size() == 196560);
  CHECK(std::equal(mins.begin(), mins.end(), shapes.begin(), shapes.end()));
  CHECK(l.points_at(origin, Rat(2), SphereMode::exact).empty());
  CHECK(l.points_at(origin, Rat(3), SphereMode::at_most).size() == 1);
}

TEST_CASE("leech holes") {
  const Leech& l = Leech::instance();
  ScaledCenter c;
  c.num[0] = 4;
  c.den = 1;
  // (4, 0^23)/sqrt(8) is a deep hole of type A1^24: 48 nearest points at norm 2.
  auto n = l.nearest(c);
  CHECK(n.dist2 == 2);
  CHECK(n.points.size() == 48);
  CHECK_FALSE(l.closest_below(c, Rat(2)));
  auto below = l.closest_below(c, Rat(5, 2));
  REQUIRE(below);
  CHECK(distance2(*below, c) == 2);
  ScaledCenter lattice_pt;
  lattice_pt.num[0] = 8;
  lattice_pt.num[1] = 8;
  lattice_pt.den = 2;
  CHECK(l.nearest(lattice_pt).dist2 == 0);
  CHECK(l.nearest(lattice_pt).points.size() == 1);
}
