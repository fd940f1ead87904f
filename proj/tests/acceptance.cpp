// One PASS/FAIL line per acceptance criterion. All comparisons are exact.
// Orbit databases come from $LORENTZ_DB (default: <build>/orbits) and are
// built there, resumably, when missing.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lorentz/classifier.hpp"
#include "lorentz/leech.hpp"
#include "lorentz/norm0.hpp"
#include "lorentz/tables.hpp"
#include "lorentz/verify.hpp"

using namespace lorentz;

namespace {

using Rows = std::multiset<std::string>;

std::vector<std::vector<std::string>> read_fixture(const std::string& name) {
  std::ifstream in(std::string(LORENTZ_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) f.push_back(cell);
    while (f.size() < 5) f.emplace_back();
    out.push_back(f);
  }
  return out;
}

std::string sorted_words(const std::string& s, char sep) {
  std::vector<std::string> w;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, sep))
    if (!x.empty()) w.push_back(x);
  std::sort(w.begin(), w.end());
  std::string out;
  for (const std::string& t : w) out += (out.empty() ? "" : ",") + t;
  return out;
}

// "a_1>a^9" stands for nine copies of "a_1>a"
std::string expand_ancestry(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (ss >> t) {
    const auto gt = t.find('>');
    const auto hat = t.find('^', gt);
    if (gt == std::string::npos || hat == std::string::npos) {
      out.push_back(t);
      continue;
    }
    out.insert(out.end(), std::stoul(t.substr(hat + 1)), t.substr(0, hat));
  }
  std::sort(out.begin(), out.end());
  std::string joined;
  for (const std::string& x : out) joined += (joined.empty() ? "" : " ") + x;
  return joined;
}

// Components of equal rank may be listed in any order.
std::string roots_key(const std::string& sig) { return sorted_words(sig, ' '); }

// Rows present on one side only, at most a few of each.
std::string diff(const Rows& got, const Rows& want) {
  std::vector<std::string> extra, missing;
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::ostringstream os;
  os << extra.size() << " unexpected, " << missing.size() << " missing";
  for (std::size_t i = 0; i < extra.size() && i < 5; ++i) os << "\n    + " << extra[i];
  for (std::size_t i = 0; i < missing.size() && i < 5; ++i) os << "\n    - " << missing[i];
  return os.str();
}

std::string db_dir() {
  const char* env = std::getenv("LORENTZ_DB");
  return env && *env ? env : LORENTZ_DEFAULT_DB;
}

ClassifyOptions quiet() { return {}; }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int report(int n, const std::string& title, const std::function<Outcome()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = f();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << std::fixed
            << std::setprecision(1) << secs << " s)\n";
  if (!o.detail.empty()) std::cout << "  " << o.detail << '\n';
  std::cout.flush();
  return o.pass ? 0 : 1;
}

Outcome from(const Report& r, std::string extra = {}) {
  std::string text = r.text();
  if (!extra.empty()) text = extra + "\n" + text;
  std::string indented;
  for (char c : text) indented += c == '\n' ? std::string("\n  ") : std::string(1, c);
  while (!indented.empty() && (indented.back() == ' ' || indented.back() == '\n')) indented.pop_back();
  return {r.ok(), indented};
}

Outcome leech() { return from(verify_leech()); }

Outcome table0() {
  Rows got, want;
  for (const Norm0Row& r : norm0_rows()) got.insert(std::to_string(r.height) + " " + r.letter + " " + r.type);
  for (const auto& f : read_fixture("norm0_orbits.tsv")) want.insert(f[0] + " " + f[1] + " " + f[2]);
  Report rep = verify_table0();
  rep.check("rows match the table (height, letter, type)").expect(got == want, diff(got, want));
  return from(rep);
}

Outcome table1(OrbitStore& n2) {
  Rows got, want;
  for (const OrbitRecord& r : n2.records()) {
    const Norm2Row row = norm2_row(r);
    std::string anc;
    for (const std::string& a : row.ancestry) anc += (anc.empty() ? "" : " ") + a;
    got.insert(std::to_string(row.height) + " | " + (row.type1 ? "1" : "0") + " | " + roots_key(row.roots) + " | " +
               std::to_string(row.s) + " | " + expand_ancestry(anc));
  }
  for (const auto& f : read_fixture("norm2_orbits.tsv"))
    want.insert(f[0] + " | " + f[1] + " | " + roots_key(f[2]) + " | " + f[3] + " | " + expand_ancestry(f[4]));
  Report rep = verify_norm2(n2);
  rep.check("rows match the table (height, type 1, roots, S, ancestry)").expect(got == want, diff(got, want));
  return from(rep);
}

int class_of(int dim, bool even) {
  if (dim == 24 && even) return 1;
  if (dim == 25) return 4;
  if (dim == 24) return 3;
  return 2;
}

Outcome table2(OrbitStore& n2) {
  OrbitStore n4 = load_or_classify(4, db_dir(), &n2, quiet(), false);
  std::vector<Norm4Profile> profiles;
  Rows got, want;
  for (const OrbitRecord& r : n4.records()) {
    profiles.push_back(neighbors(r.rep));
    const Norm4Row row = norm4_row(r, profiles.back());
    std::string nb;
    for (const std::string& t : row.neighbors) nb += (nb.empty() ? "" : ",") + t;
    got.insert(std::to_string(row.height) + " | " + std::to_string(row.dim) + " | " + (row.even ? "1" : "0") +
               " | " + roots_key(row.roots) + " | " + sorted_words(nb, ',') + " | class " + std::to_string(row.kind));
  }
  for (const auto& f : read_fixture("norm4_orbits.tsv")) {
    const int cls = class_of(std::stoi(f[1]), f[2] == "1");
    want.insert(f[0] + " | " + f[1] + " | " + f[2] + " | " + roots_key(f[3]) + " | " + sorted_words(f[4], ',') + " | class " +
                std::to_string(cls));
  }
  Report rep = verify_norm4(n4, n2, profiles);
  rep.check("rows match the table (height, dim, E, roots, neighbors, class)").expect(got == want, diff(got, want));
  return from(rep);
}

Outcome rootless() { return from(verify_rootless26()); }

// The property suites on a small sample: completeness of norm0_at against
// a widened search, reduce_to_domain, and fingerprint / dedup invariance
// under the symmetry x -> -x + s of the Leech lattice.
Outcome properties() {
  Report rep;
  std::mt19937_64 rng(11);
  std::vector<LorentzVec> sample;
  for (const Candidate& c : successors(norm0_rep("A_2^12").z, &rng)) sample.push_back(c.u);
  sample.push_back(weyl_vector() + norm0_rep("A_4^6").z);

  LeechIsometry g = LeechIsometry::identity();
  for (std::int64_t& x : g.m) x = -x;
  LeechVec s{};
  s[0] = s[1] = s[2] = 4;
  s[3] = -4;
  g.t = *Leech::instance().coords(s);

  Check& oracle = rep.check("norm0_at agrees with a search 3 steps past the Gram bound");
  Check& red = rep.check("reduce_to_domain: idempotent, height never rises, norm kept");
  Check& fp = rep.check("fingerprint and exact test invariant under a Leech symmetry");
  Check& dedup = rep.check("re-inserting orbits and their images adds nothing");
  OrbitStore store(2);
  for (const LorentzVec& u : sample) {
    for (std::int64_t c = 1; c <= 3; ++c) oracle.expect(norm0_at(u, c) == norm0_at(u, c, 3), to_string(u));
    for (const LeechVec& mu : roots_at(u, 2)) {
      const LorentzVec r = simple_root(mu);
      const LorentzVec x = u + inner(u, r) * r;
      const Reduction a = reduce_to_domain(x);
      red.expect(in_domain(a.vec) && a.vec.a <= x.a && norm(a.vec) == norm(x) &&
                     reduce_to_domain(a.vec).vec == a.vec && reduce_to_domain(a.vec).reflections == 0,
                 to_string(x));
      break;
    }
    const LorentzVec gu = g.apply(u);
    const Equivalence e = equivalent(u, gu);
    fp.expect(fingerprint(u) == fingerprint(gu) && e.verdict == Verdict::yes, to_string(u));
    if (norm(u) == 2) store.insert_or_find(u, fingerprint(u), {"sample", "a_1"});
  }
  const std::size_t n = store.size();
  for (const LorentzVec& u : sample) {
    if (norm(u) != 2) continue;
    const LorentzVec gu = g.apply(u);
    dedup.expect(!store.insert_or_find(u, fingerprint(u), {"sample", "a_1"}).fresh &&
                     !store.insert_or_find(gu, fingerprint(gu), {"sample", "a_1"}).fresh,
                 to_string(u));
  }
  dedup.expect(store.size() == n, "store grew");
  return from(rep, std::to_string(sample.size()) + " sample vectors");
}

}  // namespace

int main() {
  int failed = 0;
  failed += report(1, "Golay code and Leech lattice", leech);
  failed += report(2, "24 norm-0 orbits", table0);
  std::optional<OrbitStore> n2;
  failed += report(3, "121 norm-2 orbits", [&] {
    n2 = load_or_classify(2, db_dir(), nullptr, quiet(), false);
    return table1(*n2);
  });
  failed += report(4, "665 norm-4 orbits", [&]() -> Outcome {
    if (!n2) return {false, "needs the norm-2 database"};
    return table2(*n2);
  });
  failed += report(5, "rootless 26-dimensional unimodular lattice", rootless);
  failed += report(6, "orbit engine properties", properties);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << '\n';
  return failed ? 1 : 0;
}
