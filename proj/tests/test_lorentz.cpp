#include "doctest.h"

#include <algorithm>

#include "lorentz/lorentz.hpp"
#include "lorentz/rootsys.hpp"

using namespace lorentz;

namespace {

LorentzVec vec(std::int64_t a, std::int64_t b) { return {LeechVec{}, a, b}; }

LeechVec min_vec() {
  LeechVec m{};
  m[0] = 4;
  m[1] = 4;
  return m;
}

// The A_1^24 deep hole (4, 0^23)/sqrt 8 lifted to a norm-0 vector of height 2.
LorentzVec a1_24_rep() {
  LorentzVec z;
  z.lam[0] = 8;
  z.a = 2;
  z.b = 2;
  return z;
}

// For u = (0; 1, n) the norm-0 vectors x = (mu; alpha, beta) with (x, u) = c
// satisfy alpha n + beta = c and |mu|^2 = 2 alpha beta, so their number is a
// sum of Leech shell sizes. Returns -1 when a shell above norm 4 is needed.
std::int64_t shell_count(std::int64_t n, std::int64_t c) {
  std::int64_t total = 0;
  for (std::int64_t alpha = 0; alpha * n <= c; ++alpha) {
    const std::int64_t beta = c - alpha * n;
    const std::int64_t k = 2 * alpha * beta;
    if (k > 4) return -1;
    total += k == 0 ? 1 : k == 4 ? 196560 : 0;
  }
  return total;
}

}  // namespace

TEST_CASE("inner products and simple roots") {
  const LorentzVec w = weyl_vector();
  CHECK(inner(w, w) == 0);
  CHECK(norm(vec(1, 1)) == 2);
  CHECK(height(vec(1, 1)) == 1);
  const LorentzVec r0 = simple_root(LeechVec{});
  CHECK(r0 == vec(1, -1));
  CHECK(norm(r0) == -2);
  const LorentzVec r = simple_root(min_vec());
  CHECK(r.b == 1);
  CHECK(norm(r) == -2);
  CHECK(inner(w, r) == 1);
  CHECK(inner(w, r0) == 1);
  // (r_mu, r_nu) = |mu - nu|^2 / 2 - 2.
  CHECK(inner(r, r0) == 0);
}

TEST_CASE("roots of (0;1,1)") {
  const LorentzVec u = vec(1, 1);
  auto r0 = roots_at(u, 0);
  REQUIRE(r0.size() == 1);
  CHECK(r0[0] == LeechVec{});
  CHECK(roots_at(u, 1).empty());
  auto r2 = roots_at(u, 2);
  CHECK(r2.size() == 196560);
  for (std::size_t k = 0; k < r2.size(); k += 997) CHECK(inner(u, simple_root(r2[k])) == 2);
  CHECK(roots_at(u, -1).empty());
  CHECK_THROWS_AS(roots_at(weyl_vector(), 0), MathError);
}

TEST_CASE("domain membership") {
  CHECK(in_domain(weyl_vector()));
  CHECK(in_domain(vec(1, 1)));
  CHECK(in_domain(a1_24_rep()));
  const LorentzVec r = simple_root(min_vec());
  const LorentzVec u = vec(1, 1);
  const LorentzVec v = u + inner(u, r) * r;  // reflection of u in r
  CHECK(norm(v) == 2);
  CHECK(inner(v, r) < 0);
  CHECK_FALSE(in_domain(v));
  auto witness = negative_root(v);
  REQUIRE(witness);
  CHECK(inner(v, simple_root(*witness)) < 0);
  CHECK_THROWS_AS(in_domain(simple_root(LeechVec{})), MathError);
}

TEST_CASE("reduce_to_domain") {
  const LorentzVec u = vec(1, 1);
  auto fixed = reduce_to_domain(u);
  CHECK(fixed.vec == u);
  CHECK(fixed.reflections == 0);

  // Walk out of D through several reflections, then come back.
  LorentzVec v = a1_24_rep() + vec(1, 3);
  REQUIRE(in_domain(v));
  const std::int64_t n = norm(v);
  for (const LeechVec& mu : roots_at(v, 2)) {
    const LorentzVec r = simple_root(mu);
    v = v + inner(v, r) * r;
    if (v.a > 12) break;
  }
  REQUIRE_FALSE(in_domain(v));
  LorentzVec cur = v;
  std::size_t steps = 0;
  while (auto mu = negative_root(cur)) {
    const LorentzVec r = simple_root(*mu);
    const LorentzVec next = cur + inner(cur, r) * r;
    CHECK(next.a < cur.a);
    CHECK(norm(next) == n);
    cur = next;
    ++steps;
  }
  auto red = reduce_to_domain(v);
  CHECK(red.vec == cur);
  CHECK(red.reflections == steps);
  CHECK(in_domain(red.vec));
  CHECK(reduce_to_domain(red.vec).vec == red.vec);
}

TEST_CASE("norm-0 vectors at fixed inner product") {
  auto x = norm0_at(vec(1, 1), 1);
  REQUIRE(x.size() == 2);
  CHECK(std::find(x.begin(), x.end(), weyl_vector()) != x.end());
  CHECK(std::find(x.begin(), x.end(), weyl_partner()) != x.end());
  CHECK(norm0_at(vec(1, 2), 2).size() == 2);
  CHECK_THROWS_AS(norm0_at(vec(1, 1), 0), MathError);
  for (const LorentzVec& u : {vec(1, 1), vec(1, 2), a1_24_rep() + vec(1, 1), a1_24_rep() + vec(1, 3)}) {
    for (std::int64_t c = 1; c <= 3; ++c) {
      auto fast = norm0_at(u, c);
      CHECK(fast == norm0_at(u, c, 2));
      for (const LorentzVec& z : fast) {
        CHECK(norm(z) == 0);
        CHECK(inner(z, u) == c);
        CHECK(in_positive_cone(z));
      }
    }
  }
}

TEST_CASE("norm-0 counts from Leech shells") {
  int checked = 0;
  for (std::int64_t n = 1; n <= 4; ++n)
    for (std::int64_t c = 1; c <= 6; ++c) {
      const std::int64_t expect = shell_count(n, c);
      if (expect < 0) continue;
      CHECK(static_cast<std::int64_t>(norm0_at(vec(1, n), c).size()) == expect);
      ++checked;
    }
  CHECK(checked >= 10);
}

TEST_CASE("content") {
  CHECK(content(2 * weyl_vector()) == 2);
  CHECK(content(a1_24_rep()) == 1);
  LorentzVec z = 3 * a1_24_rep();
  CHECK(content(z) == 3);
  CHECK(divide(z, 3) == a1_24_rep());
}

TEST_CASE("A_1^24 hole diagram") {
  const LorentzVec z = a1_24_rep();
  CHECK(norm(z) == 0);
  CHECK(height(z) == 2);
  auto r0 = roots_at(z, 0);
  CHECK(r0.size() == 48);
  RootSystem rs = classify_points(r0);
  CHECK(rs.signature() == "A_1^24");
  for (const auto& c : rs.components) CHECK(c.coxeter == 2);
}
