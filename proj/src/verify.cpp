#include "lorentz/verify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "lorentz/classifier.hpp"
#include "lorentz/leech.hpp"
#include "lorentz/norm0.hpp"
#include "lorentz/rootsys.hpp"

namespace lorentz {

void Check::expect(bool cond, const std::string& what) {
  if (cond) ++passed;
  else failures.push_back(what);
}

Check& Report::check(const std::string& name) {
  for (Check& c : checks)
    if (c.name == name) return c;
  checks.push_back({name, 0, {}});
  return checks.back();
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok(); });
}

std::string Report::text() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << (c.ok() ? "PASS " : "FAIL ") << c.name << ": " << c.passed << " passed, " << c.failures.size()
       << " failed\n";
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) os << "  " << c.failures[i] << '\n';
  }
  for (const std::string& n : notes) os << "note: " << n << '\n';
  return os.str();
}

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Coxeter number of a type label ("Leech" counts as 0).
std::int64_t type_coxeter(const std::string& type) {
  return type == kLeechType ? 0 : norm0_rep(type).coxeter_h;
}

struct Components {
  RootSystem rs;
  std::vector<LorentzVec> roots;
};

Components components_of(const LorentzVec& u) {
  Components c;
  const std::vector<LeechVec> r0 = roots_at(u, 0);
  c.rs = classify_points(r0);
  for (const LeechVec& m : r0) c.roots.push_back(simple_root(m));
  return c;
}

std::string id(const OrbitRecord& r) { return r.key + " (height " + std::to_string(r.rep.a) + ")"; }

}  // namespace

Report verify_leech() {
  Report rep;
  const Leech& l = Leech::instance();
  const auto dist = l.golay().weight_distribution();
  Check& golay = rep.check("Golay code: 4096 words, 759 of weight 8, minimum weight 8");
  golay.expect(l.golay().words().size() == 4096 && dist[8] == 759 && l.golay().min_weight() == 8,
               std::to_string(l.golay().words().size()) + " words, " + std::to_string(dist[8]) + " octads");
  Check& gram = rep.check("Leech Gram: even, determinant 1, positive definite");
  bool even = true;
  for (std::size_t i = 0; i < kLeechDim; ++i) even = even && l.gram()(i, i) % 2 == 0;
  gram.expect(even && det(l.gram()) == 1 && is_positive_definite(l.gram()), "Gram matrix");
  Check& kiss = rep.check("Leech: minimum 4, 196560 minimal vectors");
  const QuadForm q(l.gram(), Signature::positive_definite);
  const std::int64_t n2 = count_norm(q, 2), n4 = count_norm(q, 4);
  kiss.expect(n2 == 0 && n4 == 196560, "norm 2: " + std::to_string(n2) + ", norm 4: " + std::to_string(n4));
  rep.notes.push_back("kissing number " + std::to_string(n4));
  return rep;
}

Report verify_table0() {
  Report rep;
  const auto& reps = norm0_orbits();
  Check& count = rep.check("24 norm-0 orbits, one per type");
  std::vector<std::string> types;
  for (const auto& r : reps) types.push_back(r.type);
  std::sort(types.begin(), types.end());
  count.expect(reps.size() == 24 && std::adjacent_find(types.begin(), types.end()) == types.end(),
               "found " + std::to_string(reps.size()) + " representatives");
  Check& inv = rep.check("representative in D, primitive, norm 0, height = Coxeter number");
  Check& letter = rep.check("letter is the first of a, d, e in the diagram");
  for (const auto& r : reps) {
    const bool leech = r.type == kLeechType;
    inv.expect(norm(r.z) == 0 && in_positive_cone(r.z) && content(r.z) == 1 && r.z.a == r.coxeter_h &&
                   (leech ? r.z == weyl_vector() : in_domain(r.z)),
               r.type);
    if (leech) {
      letter.expect(r.letter == 'x', r.type);
      continue;
    }
    const RootSystem rs = norm0_diagram(r.z);
    bool same_h = rs.signature() == r.type;
    for (const auto& c : rs.components) same_h = same_h && c.affine && c.coxeter == r.coxeter_h;
    inv.expect(same_h, r.type + ": diagram or Coxeter number");
    letter.expect(r.letter == type_letter(rs), r.type);
  }
  Check& five = rep.check("A_4^6 is the only norm-0 orbit of height 5");
  std::vector<std::string> at5;
  for (const auto& r : reps)
    for (std::int64_t n = 1; n * r.coxeter_h <= 5 && r.coxeter_h > 0; ++n)
      if (n * r.coxeter_h == 5) at5.push_back(std::to_string(n) + "*" + r.type);
  five.expect(at5.size() == 1 && at5[0] == "1*A_4^6", "height-5 vectors of D: " + std::to_string(at5.size()));
  return rep;
}

Report verify_norm2(OrbitStore& store) {
  Report rep;
  Check& cnt = rep.check("121 norm-2 orbits");
  cnt.expect(store.size() == kNorm2Orbits, "found " + std::to_string(store.size()));
  Check& fpc = rep.check("stored fingerprint recomputes");
  Check& rho = rep.check("height^2 = -2 rho^2");
  Check& theta = rep.check("12 height = 18 - 4 z1 + r");
  Check& mod4 = rep.check("r = 2 mod 4");
  Check& type1 = rep.check("type 1: height = 1 + 2h, diagram B + a_1");
  Check& drop = rep.check("u - theta has norm 0 and height u - h + 1 for every component");
  Check& in_d = rep.check("u - theta in D, except on B of a type-1 row, where it reduces to z_B");
  Check& edges = rep.check("parent links: height(u) = height(v) + h - 1");
  Check& no_rootless = rep.check("every norm-2 orbit has roots");

  std::map<std::string, LorentzVec> parents;
  for (const Parent& p : norm0_parents()) parents[p.key] = p.v;

  std::int64_t top = 0;
  std::size_t reduced = 0;
  for (const OrbitRecord& r : store.records()) {
    const LorentzVec& u = r.rep;
    const Fingerprint fp = fingerprint(u);
    fpc.expect(fp == r.fp, id(r));
    const Components c = components_of(u);
    no_rootless.expect(!c.rs.empty(), id(r));
    const Rat rho2 = weyl_vector_norm(c.rs);
    rho.expect(-2 * rho2 == Rat(u.a * u.a), id(r));
    const std::int64_t roots = c.rs.root_count();
    const std::int64_t z1 = static_cast<std::int64_t>(fp.z1.size());
    theta.expect(12 * u.a == 18 - 4 * z1 + roots, id(r));
    mod4.expect(roots % 4 == 2, id(r));
    if (z1 > 0) {
      const std::string type = fp.z1.front();
      const std::int64_t h = type_coxeter(type);
      std::map<std::string, int> want;
      for (const auto& [name, n] : signature_counts(type == kLeechType ? "None" : type)) want[lower(name)] += n;
      ++want["a_1"];
      type1.expect(u.a == 1 + 2 * h && signature_counts(c.rs.signature()) == want, id(r));
    }
    // u - theta always has height u - h + 1; it lies in D except on the
    // Niemeier part B of a type-1 row, where it reduces to z_B itself
    for (const ADEComponent& comp : c.rs.components) {
      const LorentzVec x = u - highest_root(comp, c.roots);
      const std::string what = id(r) + " " + comp.name();
      drop.expect(norm(x) == 0 && x.a == u.a - comp.coxeter + 1, what);
      if (in_domain(x)) {
        in_d.expect(true, what);
        continue;
      }
      const LorentzVec y = reduce_to_domain(x).vec;
      const bool b_part = z1 > 0 && norm0_label(y) == fp.z1.front() && y.a == type_coxeter(fp.z1.front());
      in_d.expect(b_part, what + ": u - theta is outside D");
      reduced += b_part;
    }
    for (const ParentLink& l : r.parents) {
      auto it = parents.find(l.orbit);
      if (it == parents.end()) {
        edges.expect(false, id(r) + ": unknown parent " + l.orbit);
        continue;
      }
      edges.expect(u.a == it->second.a + coxeter_number(l.component) - 1, id(r) + " from " + l.orbit);
    }
    top = std::max(top, u.a);
  }
  rep.notes.push_back("largest norm-2 height " + std::to_string(top));
  rep.notes.push_back(std::to_string(reduced) +
                      " components of type-1 rows have u - theta outside D (reduced height h, not u - h + 1)");
  return rep;
}

Report verify_norm4(const OrbitStore& store, const OrbitStore& norm2, const std::vector<Norm4Profile>& profiles) {
  Report rep;
  Check& cnt = rep.check("665 norm-4 orbits");
  cnt.expect(store.size() == kNorm4Orbits && profiles.size() == store.size(),
             "found " + std::to_string(store.size()));
  Check& theta = rep.check("8 height = 20 - 2 z2 - 8 z1 + r");
  Check& roots_match = rep.check("norm-2 vectors of A = roots of u-perp");
  Check& k2 = rep.check("kind 2: height = 2(h+n-1), -rho^2 = (h+n-1)^2");
  Check& k3 = rep.check("kind 3: u = z1 + z2 in D, height = h1 + h2, -rho^2 = h1 h2, 8(h1+h2-2) roots");
  Check& k1 = rep.check("kind 1: 24 orbits, one per Niemeier type, height = 1 + 3h");
  Check& i25 = rep.check("I^25: d_25, rho^2 = -(0^2+...+24^2) = -70^2, h = 46, height 140");
  Check& drop = rep.check("u - theta has norm 2 and height t - h + 1 for every component");
  Check& edges = rep.check("parent links: height(u) = height(v) + h - 1, or u = w + v, or u = v + z");

  std::map<std::string, LorentzVec> parents;
  for (const Parent& p : norm0_parents()) parents[p.key] = p.v;
  for (const OrbitRecord& r : norm2.records()) parents[r.key] = r.rep;

  std::vector<std::string> kind1_types;
  std::size_t i25_rows = 0;
  std::map<std::string, std::size_t> offsets;  // components by class and extra drop
  for (std::size_t i = 0; i < store.size() && i < profiles.size(); ++i) {
    const OrbitRecord& r = store.at(i);
    const Norm4Profile& p = profiles[i];
    const LorentzVec& u = r.rep;
    const Components c = components_of(u);
    const Rat rho2 = weyl_vector_norm(c.rs);
    const std::int64_t roots = c.rs.root_count();
    roots_match.expect(p.lattice.norm2_count == roots, id(r));
    const std::int64_t z1 = static_cast<std::int64_t>(p.z1.size());
    const std::int64_t z2 = p.lattice.norm1_count;
    theta.expect(z1 <= 1 && 8 * u.a == 20 - 2 * z2 - 8 * z1 + roots, id(r));

    if (p.kind == 2) {
      const std::int64_t n = z2 / 2;
      const std::int64_t h = p.neighbors.size() == 1 ? type_coxeter(p.neighbors[0]) : -1000;
      const std::int64_t m = h + n - 1;
      k2.expect(p.neighbors.size() == 1 && u.a == 2 * m && -rho2 == Rat(m * m), id(r));
      if (z2 == 50) {
        ++i25_rows;
        std::int64_t sum = 0;
        for (std::int64_t k = 0; k <= 24; ++k) sum += k * k;
        i25.expect(c.rs.signature() == "d_25" && sum == 4900 && -rho2 == Rat(sum) && h == 46 && u.a == 140 &&
                       p.lattice.a1_dim == 0,
                   id(r));
      }
    } else if (p.kind == 3) {
      const LorentzVec& za = p.z2[0];
      const LorentzVec& zb = p.z2[1];
      const std::int64_t h1 = za.a, h2 = zb.a;
      const bool types = type_coxeter(norm0_label(za)) == h1 && type_coxeter(norm0_label(zb)) == h2;
      k3.expect(in_domain(za) && in_domain(zb) && types && za + zb == u && u.a == h1 + h2 &&
                    -rho2 == Rat(h1 * h2) && roots == 8 * (h1 + h2 - 2),
                id(r));
    } else if (p.kind == 1) {
      const std::string type = norm0_label(p.z1.front());
      kind1_types.push_back(type);
      k1.expect(u.a == 1 + 3 * type_coxeter(type) && p.lattice.a1_dim == 24 && p.lattice.a1_even, id(r));
    }

    // the reduced height is tallied, not asserted: the table's rule
    // (t - h + 1, or t - h on 24E rows) is checked empirically
    for (const ADEComponent& comp : c.rs.components) {
      const LorentzVec x = u - highest_root(comp, c.roots);
      drop.expect(norm(x) == 2 && x.a == u.a - comp.coxeter + 1, id(r) + " " + comp.name());
      const std::int64_t below = u.a - comp.coxeter + 1 - reduce_to_domain(x).vec.a;
      ++offsets["class " + std::to_string(p.kind) + ", reduced " + std::to_string(below) + " below t - h + 1"];
    }
    for (const ParentLink& l : r.parents) {
      auto it = parents.find(l.orbit);
      if (it == parents.end()) {
        edges.expect(false, id(r) + ": unknown parent " + l.orbit);
        continue;
      }
      const LorentzVec& v = it->second;
      if (l.component == "w") {
        edges.expect(norm(u) == norm(v) + 2 * v.a && u.a == v.a, id(r) + " = w + " + l.orbit);
      } else if (l.component == "z") {
        // u is reduce(v + z) for a norm-0 z with (v, z) = 1
        bool found = false;
        for (const LorentzVec& z : norm0_at(v, 1)) {
          const LorentzVec x = reduce_to_domain(v + z).vec;
          found = x == u || (x.a == u.a && equivalent(x, u).verdict == Verdict::yes);
          if (found) break;
        }
        edges.expect(norm(u) == norm(v) + 2 && found, id(r) + " = " + l.orbit + " + z");
      } else {
        edges.expect(u.a == v.a + coxeter_number(l.component) - 1, id(r) + " from " + l.orbit);
      }
    }
  }
  std::sort(kind1_types.begin(), kind1_types.end());
  const bool distinct = std::adjacent_find(kind1_types.begin(), kind1_types.end()) == kind1_types.end();
  k1.expect(kind1_types.size() == 24 && distinct, std::to_string(kind1_types.size()) + " orbits of kind 1");
  i25.expect(i25_rows == 1, std::to_string(i25_rows) + " orbits with 50 norm-1 vectors");
  for (const auto& [what, n] : offsets) rep.notes.push_back(std::to_string(n) + " components: " + what);
  return rep;
}

Report verify_rootless26(Rootless26* out) {
  Report rep;
  const NormZeroRep& z = norm0_rep("A_4^6");
  const LorentzVec u = weyl_vector() + z.z;
  Check& vec = rep.check("u = w + z(A_4^6): height 5, norm 10, in D, no roots");
  vec.expect(z.z.a == 5 && norm(u) == 10 && u.a == 5 && in_domain(u) && roots_at(u, 0).empty(), to_string(u));
  Check& n0 = rep.check("no norm-0 vector has inner product 1, 2, 3 or 4 with u");
  for (std::int64_t c = 1; c <= 4; ++c)
    n0.expect(norm0_at(u, c).empty(), "inner product " + std::to_string(c));

  // (x, u) = (x, w) + (x, z) >= 5 by the type of x; (x, w) is at least
  // the height of the type and (x, z) >= 1 unless x = z
  Check& bounds = rep.check("(x, u) >= 5 for every norm-0 type x");
  for (const NormZeroRep& t : norm0_orbits()) {
    std::int64_t low;
    if (t.type == kLeechType) low = 0 + z.z.a;        // (x, z) >= height of z
    else if (t.type == "A_4^6") low = t.z.a + 0;      // x = z allowed
    else if (t.type == "A_1^24") low = t.z.a + 3;     // (x, z) = 2 ruled out by n0 above
    else low = t.z.a + 2;                              // (x, z) = 1 forces equal types
    bounds.expect(low >= 5, t.type);
  }

  Check& gram = rep.check("glued lattice: dimension 26, determinant 1, odd, minimum 3");
  const QuadForm q = rootless26_gram(u);
  const std::int64_t c1 = count_norm(q, 1), c2 = count_norm(q, 2);
  gram.expect(q.dim() == 26 && det(q.gram()) == 1 && !q.is_even() && c1 == 0 && c2 == 0 && count_norm(q, 3) > 0,
              "norm-1 " + std::to_string(c1) + ", norm-2 " + std::to_string(c2));
  rep.notes.push_back("norm-3 vectors of the 26-dimensional lattice: " + std::to_string(count_norm(q, 3)));
  if (out) *out = {u, q};
  return rep;
}

}  // namespace lorentz
