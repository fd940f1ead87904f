#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <random>

#include "lorentz/classifier.hpp"
#include "lorentz/leech.hpp"
#include "lorentz/norm0.hpp"
#include "lorentz/orbit.hpp"

using namespace lorentz;

namespace {

// Translation by a Leech vector composed with -1: an automorphism of D fixing w.
LeechIsometry flip_and_shift(const LeechVec& shift) {
  LeechIsometry g = LeechIsometry::identity();
  for (std::int64_t& x : g.m) x = -x;
  g.t = *Leech::instance().coords(shift);
  return g;
}

LeechVec shift_vec() {
  LeechVec s{};
  s[0] = 4;
  s[1] = 4;
  s[2] = 4;
  s[3] = -4;
  return s;
}

// A few norm-2 vectors of D above the A_1^24 representative.
const std::vector<LorentzVec>& some_norm2() {
  static const std::vector<LorentzVec> out = [] {
    std::mt19937_64 rng(7);
    std::vector<LorentzVec> v;
    for (const Candidate& c : successors(norm0_rep("A_1^24").z, &rng)) v.push_back(c.u);
    return v;
  }();
  return out;
}

}  // namespace

TEST_CASE("isometries act on D") {
  const LeechIsometry g = flip_and_shift(shift_vec());
  const LorentzVec z = norm0_rep("A_2^12").z;
  const LorentzVec gz = g.apply(z);
  CHECK(norm(gz) == 0);
  CHECK(gz.a == z.a);
  CHECK(in_domain(gz));
  for (const LeechVec& mu : roots_at(z, 0)) CHECK(inner(gz, g.apply(simple_root(mu))) == 0);
}

TEST_CASE("successor candidates satisfy the pattern") {
  const std::vector<LorentzVec>& us = some_norm2();
  REQUIRE(!us.empty());
  const LorentzVec v = norm0_rep("A_1^24").z;
  for (const LorentzVec& u : us) {
    CHECK(norm(u) == 2);
    CHECK(in_domain(u));
    CHECK(u.a > v.a);
  }
  // a single node of R_2 is an a_1 with theta = r
  const std::vector<LeechVec> r2 = roots_at(v, 2);
  REQUIRE(!r2.empty());
  const auto theta = successor_root(v, {r2.front()});
  REQUIRE(theta);
  CHECK(*theta == simple_root(r2.front()));
  // a node of R_0 alone does not qualify, nor does a pair from R_2
  const std::vector<LeechVec> r0 = roots_at(v, 0);
  CHECK_FALSE(successor_root(v, {r0.front()}));
  if (r2.size() >= 2) CHECK_FALSE(successor_root(v, {r2[0], r2[1]}));
  // a_2 with both ends in R_1
  const std::vector<LeechVec> r1 = roots_at(v, 1);
  for (std::size_t i = 0; i < r1.size(); ++i)
    for (std::size_t j = i + 1; j < r1.size(); ++j) {
      if (inner(simple_root(r1[i]), simple_root(r1[j])) != 1) continue;
      const auto t = successor_root(v, {r1[i], r1[j]});
      REQUIRE(t);
      CHECK(norm(v + *t) == 2);
      CHECK(in_domain(v + *t));
      CHECK((v + *t).a == v.a + 2);
      return;
    }
}

TEST_CASE("fingerprint and equivalence are invariant under a constructed symmetry") {
  const LeechIsometry g = flip_and_shift(shift_vec());
  int tried = 0;
  for (const LorentzVec& u : some_norm2()) {
    const LorentzVec gu = g.apply(u);
    REQUIRE(norm(gu) == norm(u));
    REQUIRE(in_domain(gu));
    CHECK(fingerprint(gu).serialize() == fingerprint(u).serialize());
    const Equivalence e = equivalent(u, gu);
    CHECK(e.verdict == Verdict::yes);
    REQUIRE(e.map);
    CHECK(e.map->apply(u) == gu);
    if (++tried == 3) break;
  }
  CHECK(tried > 0);
}

TEST_CASE("reduce_to_domain is idempotent and lowers height") {
  std::mt19937_64 rng(3);
  const LeechIsometry g = flip_and_shift(shift_vec());
  for (const LorentzVec& u : some_norm2()) {
    // leave D by the reflection in a root of R_2, then come back
    const std::vector<LeechVec> r2 = roots_at(u, 2);
    if (r2.empty()) continue;
    const LorentzVec r = simple_root(r2[rng() % r2.size()]);
    const LorentzVec out = g.apply(u);
    const LorentzVec x = u + inner(u, r) * r;
    CHECK(x.a > u.a);
    const Reduction red = reduce_to_domain(x);
    CHECK(in_domain(red.vec));
    CHECK(red.vec.a <= x.a);
    CHECK(norm(red.vec) == norm(u));
    CHECK(reduce_to_domain(red.vec).vec == red.vec);
    CHECK(reduce_to_domain(red.vec).reflections == 0);
    CHECK(reduce_to_domain(out).vec == out);
  }
}

TEST_CASE("orbit store deduplicates and round-trips") {
  const LeechIsometry g = flip_and_shift(shift_vec());
  const std::vector<LorentzVec>& us = some_norm2();
  OrbitStore s(2);
  for (const LorentzVec& u : us) s.insert_or_find(u, fingerprint(u), {"n0:A_1^24", "a_1"});
  const std::size_t n = s.size();
  CHECK(n >= 1);
  CHECK(n <= us.size());
  for (const LorentzVec& u : us) {
    CHECK_FALSE(s.insert_or_find(u, fingerprint(u), {"n0:A_1^24", "a_1"}).fresh);
    const LorentzVec gu = g.apply(u);
    CHECK_FALSE(s.insert_or_find(gu, fingerprint(gu), {"n0:A_1^24", "a_1"}).fresh);
    CHECK(s.find(gu, fingerprint(gu)));
  }
  CHECK(s.size() == n);
  s.finalize();

  const auto path = std::filesystem::temp_directory_path() / "lorentz_store_test.jsonl";
  s.save(path.string());
  const OrbitStore back = OrbitStore::load(path.string(), 2);
  std::filesystem::remove(path);
  REQUIRE(back.size() == s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(back.at(i).key == s.at(i).key);
    CHECK(back.at(i).rep == s.at(i).rep);
    CHECK(back.at(i).fp == s.at(i).fp);
    CHECK(back.at(i).parents.size() == s.at(i).parents.size());
  }
}

TEST_CASE("norm-0 parents") {
  const std::vector<Parent> ps = norm0_parents();
  CHECK(ps.size() == 2 + 2 * 23);
  for (const Parent& p : ps) {
    CHECK(norm(p.v) == 0);
    CHECK(in_domain(p.v));
  }
}
