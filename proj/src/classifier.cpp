#include "lorentz/classifier.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "lorentz/rootsys.hpp"

namespace lorentz {
namespace {

struct VecHash {
  std::size_t operator()(const LorentzVec& u) const {
    std::uint64_t h = 1469598103934665603ull;
    auto add = [&](std::int64_t x) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    };
    for (std::int64_t x : u.lam) add(x);
    add(u.a);
    add(u.b);
    return static_cast<std::size_t>(h);
  }
};

// (r_x, r_y) for the simple roots at Leech points x and y
std::int64_t root_ip(const LeechVec& x, const LeechVec& y) { return scaled_norm(x - y) / 16 - 2; }

struct UnionFind {
  std::vector<std::size_t> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) up[std::max(x, y)] = std::min(x, y);
  }
};

// Least item of each class under the group generated by gens.
std::vector<std::size_t> class_reps(const std::vector<LorentzVec>& items, const std::vector<LeechIsometry>& gens) {
  std::vector<std::size_t> reps;
  if (gens.empty()) {
    reps.resize(items.size());
    std::iota(reps.begin(), reps.end(), 0);
    return reps;
  }
  std::unordered_map<LorentzVec, std::size_t, VecHash> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);
  UnionFind uf(items.size());
  for (const LeechIsometry& g : gens)
    for (std::size_t i = 0; i < items.size(); ++i) {
      auto it = index.find(g.apply(items[i]));
      if (it == index.end()) throw MathError("successors: candidate set not closed under a stabilizer element");
      uf.unite(i, it->second);
    }
  std::vector<std::size_t> best(items.size(), items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t& b = best[uf.find(i)];
    if (b == items.size() || items[i] < items[b]) b = i;
  }
  for (std::size_t b : best)
    if (b != items.size()) reps.push_back(b);
  std::sort(reps.begin(), reps.end());
  return reps;
}

// Stabilizer elements of p, added until the class count of items settles.
std::vector<LeechIsometry> sample_group(const MarkedSet& p, const std::vector<LorentzVec>& items,
                                        std::mt19937_64& rng) {
  std::vector<LeechIsometry> gens = random_stabilizer(p, 4, rng);
  if (gens.empty()) return gens;
  std::size_t classes = class_reps(items, gens).size();
  for (int stable = 0, round = 0; stable < 2 && round < 8 && classes > 1; ++round) {
    std::vector<LeechIsometry> more = random_stabilizer(p, 2, rng);
    if (more.empty()) break;
    gens.insert(gens.end(), more.begin(), more.end());
    const std::size_t c = class_reps(items, gens).size();
    stable = c == classes ? stable + 1 : 0;
    classes = c;
  }
  return gens;
}

std::vector<Candidate> weyl_multiple_successors(const LorentzVec& v) {
  const std::int64_t k = v.b;
  if (k == 2) return {{v + simple_root(LeechVec{}), "a_1", 2}};
  if (k != 1) return {};
  // one a_2: r_0 and r_nu with |nu|^2 = 6 are joined
  std::optional<LeechVec> nu;
  Leech::instance().visit(ScaledCenter{}, Rat(6), SphereMode::exact, [&](const LeechVec& p) {
    nu = p;
    return false;
  });
  if (!nu) throw MathError("successors: no Leech vector of norm 6");
  const LorentzVec u = v + simple_root(LeechVec{}) + simple_root(*nu);
  return {{reduce_to_domain(u).vec, "a_2", 3}};
}

}  // namespace

std::optional<LorentzVec> successor_root(const LorentzVec& v, const std::vector<LeechVec>& c) {
  if (c.empty()) return std::nullopt;
  RootSystem rs;
  try {
    rs = classify_points(c);
  } catch (const MathError&) {
    return std::nullopt;
  }
  if (rs.components.size() != 1 || rs.components[0].affine) return std::nullopt;
  std::vector<LorentzVec> roots;
  for (const LeechVec& m : c) roots.push_back(simple_root(m));
  const LorentzVec theta = highest_root(rs.components[0], roots);
  for (const LorentzVec& r : roots)
    if (inner(v, r) != -inner(theta, r)) return std::nullopt;
  return theta;
}

std::vector<Candidate> successors(const LorentzVec& v, std::mt19937_64* rng, SuccessorStats* stats) {
  SuccessorStats st;
  std::vector<Candidate> out;
  if (is_weyl_multiple(v)) {
    out = weyl_multiple_successors(v);
    st.raw = st.emitted = out.size();
    if (stats) *stats = st;
    return out;
  }
  const std::vector<LeechVec> r0 = roots_at(v, 0), r1 = roots_at(v, 1), r2 = roots_at(v, 2);
  const std::size_t n0 = r0.size();
  std::vector<std::vector<std::int64_t>> ip00(n0, std::vector<std::int64_t>(n0));
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) ip00[x][y] = x == y ? -2 : root_ip(r0[x], r0[y]);
  std::vector<std::vector<std::size_t>> n1_of(n0);  // R_1 nodes joined to each R_0 node
  for (std::size_t y = 0; y < n0; ++y)
    for (std::size_t t = 0; t < r1.size(); ++t)
      if (root_ip(r0[y], r1[t]) == 1) n1_of[y].push_back(t);

  MarkedSet p;
  std::vector<LeechIsometry> g;
  if (rng) {
    p = spanning_marked_set(v);
    if (!p.points.empty()) {
      std::vector<LorentzVec> items;
      for (const LeechVec& m : r1) items.push_back(simple_root(m));
      for (const LeechVec& m : r2) items.push_back(simple_root(m));
      g = sample_group(p, items, *rng);
    }
  }
  st.generators = g.size();

  // a_1 in R_2
  {
    std::vector<LorentzVec> items;
    for (const LeechVec& m : r2) items.push_back(simple_root(m));
    st.raw += items.size();
    for (std::size_t i : class_reps(items, g)) out.push_back({v + items[i], "a_1", 2});
  }

  std::vector<LorentzVec> roots1;
  for (const LeechVec& m : r1) roots1.push_back(simple_root(m));
  const std::vector<std::size_t> starts = class_reps(roots1, g);
  st.r1_reps = starts.size();

  for (std::size_t s : starts) {
    std::vector<Candidate> cand;
    const LorentzVec rs = roots1[s];
    for (std::size_t t = 0; t < r1.size(); ++t)
      if (t != s && root_ip(r1[s], r1[t]) == 1) cand.push_back({v + rs + roots1[t], "a_2", 3});

    // a_n: s, an induced path in R_0, t
    std::vector<std::size_t> path;
    auto extend = [&](auto& self, std::size_t y) -> void {
      path.push_back(y);
      for (std::size_t t : n1_of[y]) {
        if (t == s || root_ip(r1[t], r1[s]) != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) ok = root_ip(r1[t], r0[path[i]]) == 0;
        if (!ok) continue;
        LorentzVec theta = rs + roots1[t];
        for (std::size_t x : path) theta = theta + simple_root(r0[x]);
        const int rank = static_cast<int>(path.size()) + 2;
        cand.push_back({v + theta, "a_" + std::to_string(rank), rank + 1});
      }
      for (std::size_t z = 0; z < n0; ++z) {
        if (ip00[y][z] != 1 || std::find(path.begin(), path.end(), z) != path.end()) continue;
        bool ok = root_ip(r1[s], r0[z]) == 0;
        for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) ok = ip00[path[i]][z] == 0;
        if (ok) self(self, z);
      }
      path.pop_back();
    };
    for (std::size_t y = 0; y < n0; ++y)
      if (root_ip(r1[s], r0[y]) == 1) extend(extend, y);

    // d_n and e_n with s next to the extending node: grow connected sets
    // of R_0 nodes around s while they stay spherical
    std::vector<std::int64_t> ip_s(n0);
    for (std::size_t y = 0; y < n0; ++y) ip_s[y] = root_ip(r1[s], r0[y]);
    std::set<std::vector<std::size_t>> seen{{}};
    std::vector<std::vector<std::size_t>> todo{{}};
    while (!todo.empty()) {
      const std::vector<std::size_t> cur = std::move(todo.back());
      todo.pop_back();
      for (std::size_t z = 0; z < n0; ++z) {
        if (std::binary_search(cur.begin(), cur.end(), z)) continue;
        bool joined = ip_s[z] == 1, bad = ip_s[z] >= 2;
        for (std::size_t x : cur) {
          joined = joined || ip00[x][z] == 1;
          bad = bad || ip00[x][z] >= 2;
        }
        if (!joined || bad) continue;
        std::vector<std::size_t> next = cur;
        next.insert(std::upper_bound(next.begin(), next.end(), z), z);
        if (!seen.insert(next).second) continue;
        std::vector<LeechVec> pts{r1[s]};
        for (std::size_t x : next) pts.push_back(r0[x]);
        RootSystem sys;
        try {
          sys = classify_points(pts);
        } catch (const MathError&) {
          continue;
        }
        if (sys.components.size() != 1 || sys.components[0].affine) continue;
        todo.push_back(next);
        if (sys.components[0].kind == RootKind::a) continue;
        if (auto theta = successor_root(v, pts)) cand.push_back({v + *theta, sys.components[0].name(), sys.components[0].coxeter});
      }
    }

    std::vector<LorentzVec> us;
    std::vector<Candidate> uniq;
    std::unordered_set<LorentzVec, VecHash> have;
    for (Candidate& c : cand)
      if (have.insert(c.u).second) {
        us.push_back(c.u);
        uniq.push_back(std::move(c));
      }
    st.raw += uniq.size();
    std::vector<LeechIsometry> h;
    if (!g.empty() && uniq.size() > 1) {
      MarkedSet ps = p;
      const auto it = std::find(ps.points.begin(), ps.points.end(), r1[s]);
      if (it == ps.points.end()) throw MathError("successors: R_1 node missing from the marked set");
      ps.level[static_cast<std::size_t>(it - ps.points.begin())] = 1000;
      h = sample_group(ps, us, *rng);
    }
    for (std::size_t i : class_reps(us, h)) out.push_back(std::move(uniq[i]));
  }
  st.emitted = out.size();
  if (stats) *stats = st;
  return out;
}

std::vector<Parent> norm0_parents() {
  std::vector<Parent> out;
  for (const NormZeroRep& r : norm0_orbits()) {
    out.push_back({"n0:" + r.type, r.z});
    out.push_back({"n0:2*" + r.type, 2 * r.z});
  }
  return out;
}

std::vector<Parent> rootless_successors(std::int64_t n, const std::vector<Parent>& lower) {
  std::vector<Parent> out;
  for (const Parent& p : lower) {
    if (norm(p.v) + 2 * p.v.a != n) continue;
    const LorentzVec u = weyl_vector() + p.v;
    if (!in_domain(u) || !roots_at(u, 0).empty())
      throw MathError("rootless successor of " + p.key + " is not a rootless vector of D");
    out.push_back({p.key, u});
  }
  return out;
}

std::vector<Parent> norm0_sums(std::int64_t n, const std::vector<Parent>& lower) {
  std::vector<Parent> out;
  for (const Parent& p : lower) {
    if (norm(p.v) != n - 2 || n - 2 <= 0) continue;
    for (const LorentzVec& z : norm0_at(p.v, 1)) out.push_back({p.key, reduce_to_domain(p.v + z).vec});
  }
  return out;
}

namespace {

std::string coarse_key(std::int64_t height, const std::string& roots, std::int64_t r1, std::int64_t r2) {
  return std::to_string(height) + "|" + roots + "|" + std::to_string(r1) + "|" + std::to_string(r2);
}

}  // namespace

Norm2Resolver::Norm2Resolver(OrbitStore& store) : store_(store) {
  for (std::size_t i = 0; i < store.size(); ++i) {
    const Fingerprint& f = store.at(i).fp;
    by_key_[coarse_key(f.height, f.roots, f.r1, f.r2)].push_back(i);
  }
}

std::string Norm2Resolver::operator()(const LorentzVec& v) {
  if (auto it = cache_.find(v); it != cache_.end()) return it->second;
  const std::string key = coarse_key(v.a, classify_points(roots_at(v, 0)).signature(),
                                     static_cast<std::int64_t>(roots_at(v, 1).size()),
                                     static_cast<std::int64_t>(roots_at(v, 2).size()));
  if (auto it = by_key_.find(key); it != by_key_.end() && it->second.size() == 1)
    return cache_[v] = store_.at(it->second.front()).key;
  const Fingerprint fp = fingerprint(v);
  const auto idx = store_.find(v, fp);
  if (!idx) throw MathError("no norm 2 orbit matches " + to_string(v));
  return cache_[v] = store_.at(*idx).key;
}

namespace {

using FingerprintFn = std::function<Fingerprint(const LorentzVec&)>;

void save_partial(const std::string& path, const OrbitStore& store, const std::set<std::string>& done) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    nlohmann::json head{{"format", kDbFormat}, {"norm", store.norm()}, {"partial", true}, {"done", done}};
    out << head.dump() << '\n';
    for (const OrbitRecord& r : store.records()) out << record_to_json(r) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

void load_partial(const std::string& path, OrbitStore& store, std::set<std::string>& done) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  if (!std::getline(in, line)) return;
  const nlohmann::json head = nlohmann::json::parse(line);
  if (head.value("format", "") != kDbFormat || head.at("norm") != store.norm())
    throw std::runtime_error(path + ": not a partial run of this norm");
  for (const auto& d : head.at("done")) done.insert(d.get<std::string>());
  while (std::getline(in, line))
    if (!line.empty()) store.add_record(record_from_json(line));
}

std::uint64_t parent_seed(std::uint64_t seed, const std::string& key) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ull;
  for (unsigned char c : key) h = (h ^ c) * 1099511628211ull;
  return h;
}

struct Extra {
  std::string name;       // done-key in the journal
  std::string component;  // parent link label
  std::vector<Parent> items;
};

OrbitStore run_level(std::int64_t n, const std::vector<Parent>& parents, const std::vector<Extra>& extras,
                     const FingerprintFn& fp, const ClassifyOptions& opts) {
  OrbitStore store(n);
  std::set<std::string> done;
  if (!opts.journal.empty()) load_partial(opts.journal, store, done);
  auto log = [&](const std::string& s) {
    if (opts.log) opts.log(s);
  };
  using clock = std::chrono::steady_clock;
  for (const Parent& p : parents) {
    if (done.count(p.key)) continue;
    const auto t0 = clock::now();
    std::mt19937_64 rng(parent_seed(opts.seed, p.key));
    SuccessorStats st;
    const std::vector<Candidate> cands = successors(p.v, &rng, &st);
    std::size_t fresh = 0;
    for (const Candidate& c : cands) {
      if (norm(c.u) != n || c.u.a != p.v.a + c.coxeter - 1)
        throw MathError("successor of " + p.key + " has the wrong norm or height");
      fresh += store.insert_or_find(c.u, fp(c.u), {p.key, c.component}).fresh;
    }
    done.insert(p.key);
    if (!opts.journal.empty()) save_partial(opts.journal, store, done);
    std::ostringstream os;
    os << p.key << ": " << st.raw << " candidates, " << cands.size() << " after symmetry (" << st.generators
       << " generators), " << fresh << " new, " << store.size() << " total, "
       << std::chrono::duration<double>(clock::now() - t0).count() << "s";
    log(os.str());
  }
  for (const Extra& e : extras) {
    if (done.count(e.name)) continue;
    std::size_t fresh = 0;
    for (const Parent& r : e.items) {
      if (norm(r.v) != n || !in_domain(r.v)) throw MathError(e.name + " vector from " + r.key + " is wrong");
      fresh += store.insert_or_find(r.v, fp(r.v), {r.key, e.component}).fresh;
    }
    done.insert(e.name);
    if (!opts.journal.empty()) save_partial(opts.journal, store, done);
    log(e.name + ": " + std::to_string(e.items.size()) + " vectors, " + std::to_string(fresh) + " new, " +
        std::to_string(store.size()) + " total");
  }
  // counters cover this session only when resumed from a journal
  log(std::to_string(store.size()) + " orbits; " + std::to_string(store.exact_tests()) + " exact tests, largest k " +
      std::to_string(store.max_k_used()) + ", " + std::to_string(store.undecided()) + " undecided");
  store.finalize();
  return store;
}

}  // namespace

OrbitStore classify_norm2(const ClassifyOptions& opts) {
  const std::vector<Parent> lower = norm0_parents();
  const std::vector<Extra> extras{{"rootless", "w", rootless_successors(2, lower)}};
  return run_level(2, lower, extras, [](const LorentzVec& u) { return fingerprint(u); }, opts);
}

OrbitStore classify_norm4(OrbitStore& norm2, const ClassifyOptions& opts) {
  std::vector<Parent> parents;
  for (const OrbitRecord& r : norm2.records()) parents.push_back({r.key, r.rep});
  std::vector<Parent> lower = norm0_parents();
  lower.insert(lower.end(), parents.begin(), parents.end());
  Norm2Resolver resolve(norm2);
  const OrbitResolver resolver = [&](const LorentzVec& x) { return resolve(x); };
  const std::vector<Extra> extras{{"rootless", "w", rootless_successors(4, lower)},
                                  {"sums", "z", norm0_sums(4, parents)}};
  return run_level(4, parents, extras, [&](const LorentzVec& u) { return fingerprint(u, resolver); }, opts);
}

OrbitStore load_or_classify(std::int64_t n, const std::string& dir, OrbitStore* norm2, const ClassifyOptions& opts,
                            bool check_counts) {
  if (n != 2 && n != 4) throw std::invalid_argument("load_or_classify: norm must be 2 or 4");
  const std::filesystem::path path = std::filesystem::path(dir) / ("norm" + std::to_string(n) + ".jsonl");
  const std::size_t want = n == 2 ? kNorm2Orbits : kNorm4Orbits;
  auto check = [&](const OrbitStore& s) {
    if (check_counts && s.size() != want)
      throw std::runtime_error("norm " + std::to_string(n) + ": found " + std::to_string(s.size()) +
                               " orbits, expected " + std::to_string(want));
  };
  if (std::filesystem::exists(path)) {
    OrbitStore s = OrbitStore::load(path.string(), n);
    check(s);
    return s;
  }
  std::filesystem::create_directories(dir);
  ClassifyOptions o = opts;
  o.journal = path.string() + ".partial";
  OrbitStore s(n);
  if (n == 2) {
    s = classify_norm2(o);
  } else {
    if (!norm2) throw std::invalid_argument("load_or_classify: norm 4 needs the norm 2 store");
    s = classify_norm4(*norm2, o);
  }
  s.save(path.string());
  std::filesystem::remove(o.journal);
  check(s);
  return s;
}

}  // namespace lorentz
