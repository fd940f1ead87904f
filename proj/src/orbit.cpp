#include "lorentz/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "json.hpp"
#include "lorentz/norm0.hpp"
#include "lorentz/rootsys.hpp"

namespace lorentz {

namespace {

constexpr std::size_t kDim = kLeechDim;
// Point sets up to this size get the full distance profile as label.
constexpr std::size_t kFullProfile = 1500;
// Otherwise the profile is taken against the rarest classes, up to this many points.
constexpr std::size_t kReferencePoints = 200;

std::int64_t dist(const LeechVec& x, const LeechVec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < kDim; ++i) {
    const std::int64_t d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

std::vector<std::int64_t> coords_of(const LeechVec& x) {
  auto y = Leech::instance().coords(x);
  if (!y) throw MathError("point outside the Leech lattice");
  return *y;
}

const std::vector<std::int64_t>& gram64() {
  static const std::vector<std::int64_t> g = [] {
    const IntMat& m = Leech::instance().gram();
    std::vector<std::int64_t> out(kDim * kDim);
    for (std::size_t i = 0; i < kDim; ++i)
      for (std::size_t j = 0; j < kDim; ++j) out[i * kDim + j] = m(i, j).get_si();
    return out;
  }();
  return g;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Labels refined by distance profiles against a reference subset chosen
// from class sizes only, so both sides pick matching references.
std::vector<std::uint64_t> refined_labels(const MarkedSet& s) {
  const std::size_t n = s.points.size();
  std::map<int, std::size_t> sizes;
  for (int l : s.level) ++sizes[l];
  std::vector<std::pair<std::size_t, int>> classes;
  for (auto [l, c] : sizes) classes.push_back({c, l});
  std::sort(classes.begin(), classes.end());
  std::set<int> ref_levels;
  std::size_t taken = 0;
  for (auto [c, l] : classes) {
    if (n > kFullProfile && taken + c > kReferencePoints && !ref_levels.empty()) break;
    ref_levels.insert(l);
    taken += c;
  }
  std::vector<std::size_t> ref;
  for (std::size_t i = 0; i < n; ++i)
    if (ref_levels.count(s.level[i])) ref.push_back(i);

  std::vector<std::uint64_t> out(n);
  std::vector<std::pair<int, std::int64_t>> prof;
  for (std::size_t i = 0; i < n; ++i) {
    prof.clear();
    for (std::size_t j : ref)
      if (j != i) prof.push_back({s.level[j], dist(s.points[i], s.points[j])});
    std::sort(prof.begin(), prof.end());
    std::uint64_t h = static_cast<std::uint64_t>(s.level[i]) + 1;
    for (auto [l, d] : prof) h = mix(mix(h, static_cast<std::uint64_t>(l)), static_cast<std::uint64_t>(d));
    out[i] = h;
  }
  return out;
}

// Greedy affine basis: indices whose differences to the first are
// independent, scanned in the given order.
std::vector<std::size_t> affine_basis(const std::vector<LeechVec>& pts, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> base;
  if (order.empty()) return base;
  base.push_back(order[0]);
  std::vector<std::array<double, kDim>> ortho;
  const LeechVec& p0 = pts[order[0]];
  for (std::size_t k = 1; k < order.size() && ortho.size() < kDim; ++k) {
    std::array<double, kDim> v;
    double n0 = 0;
    for (std::size_t i = 0; i < kDim; ++i) {
      v[i] = static_cast<double>(pts[order[k]][i] - p0[i]);
      n0 += v[i] * v[i];
    }
    if (n0 == 0) continue;
    for (const auto& e : ortho) {
      double d = 0;
      for (std::size_t i = 0; i < kDim; ++i) d += v[i] * e[i];
      for (std::size_t i = 0; i < kDim; ++i) v[i] -= d * e[i];
    }
    double n1 = 0;
    for (double x : v) n1 += x * x;
    if (n1 <= 1e-9 * n0) continue;
    const double s = 1.0 / std::sqrt(n1);
    for (double& x : v) x *= s;
    ortho.push_back(v);
    base.push_back(order[k]);
  }
  return base;
}

// Base whose differences to the first point form a basis of the Leech
// lattice, every partial span kept saturated. Then any distance-preserving
// assignment of the base is an automorphism. Empty if the points do not
// generate the lattice.
std::vector<std::size_t> lattice_basis(const std::vector<LeechVec>& pts, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> base;
  if (order.empty()) return base;
  base.push_back(order[0]);
  const std::vector<std::int64_t> y0 = coords_of(pts[order[0]]);
  // c = y V gives coefficients in the current adapted basis.
  IntMat v(kDim, kDim);
  for (std::size_t i = 0; i < kDim; ++i) v(i, i) = 1;
  std::size_t j = 0;
  std::vector<Int> c(kDim);
  for (std::size_t k = 1; k < order.size() && j < kDim; ++k) {
    const std::vector<std::int64_t> y = coords_of(pts[order[k]]);
    for (std::size_t col = j; col < kDim; ++col) {
      Int s = 0;
      for (std::size_t r = 0; r < kDim; ++r)
        if (y[r] != y0[r]) s += v(r, col) * static_cast<long>(y[r] - y0[r]);
      c[col] = s;
    }
    Int g = 0;
    for (std::size_t col = j; col < kDim; ++col) g = gcd(g, c[col]);
    if (g != 1) continue;
    IntMat tail(kDim - j, 1);
    for (std::size_t col = j; col < kDim; ++col) tail(col - j, 0) = c[col];
    const IntMat t = hnf(tail).transform;  // t * tail = e_1
    // V <- V (I + T)^T on the tail columns.
    IntMat nv(v);
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t a = j; a < kDim; ++a) {
        Int s = 0;
        for (std::size_t b = j; b < kDim; ++b) s += v(r, b) * t(a - j, b - j);
        nv(r, a) = s;
      }
    v = std::move(nv);
    base.push_back(order[k]);
    ++j;
  }
  if (j < kDim) return {};
  return base;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-independent digest of a multiset of labels; equal multisets always
// agree, so comparing digests never prunes a valid branch.
std::pair<std::uint64_t, std::uint64_t> digest(const std::vector<std::uint64_t>& h) {
  std::uint64_t a = 0, b = 0;
  for (std::uint64_t x : h) {
    a += splitmix(x);
    b += splitmix(x ^ 0x5851f42d4c957f2dULL) * (x | 1);
  }
  return {a, b};
}

// Individualize-and-refine: every point carries a label hashed from its
// level and its distances to the base points assigned so far. A partial
// map survives only if both sides have the same label multiset.
struct Search {
  const MarkedSet& from;
  const MarkedSet& to;
  const SearchOptions& opts;
  std::vector<std::size_t> base;     // 25 points, differences form a basis
  std::vector<long double> dinv;     // inverse of the base difference matrix
  std::vector<std::int64_t> dmat;    // base differences in coordinates
  std::vector<std::int64_t> c_from;  // coordinates of the centers' numerators
  std::vector<std::int64_t> c_to;
  std::vector<std::size_t> image;
  std::vector<bool> assigned;
  std::uint64_t nodes = 0;
  std::size_t max_depth = 0;
  bool out_of_budget = false;
  std::optional<LeechIsometry> found;

  bool leaf() {
    const std::vector<std::int64_t> y0 = coords_of(to.points[image[0]]);
    std::vector<std::int64_t> dimg(kDim * kDim);
    for (std::size_t r = 0; r < kDim; ++r) {
      const std::vector<std::int64_t> y = coords_of(to.points[image[r + 1]]);
      for (std::size_t c = 0; c < kDim; ++c) dimg[r * kDim + c] = y[c] - y0[c];
    }
    LeechIsometry g;
    g.m.assign(kDim * kDim, 0);
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) {
        long double s = 0;
        for (std::size_t k = 0; k < kDim; ++k) s += dinv[r * kDim + k] * static_cast<long double>(dimg[k * kDim + c]);
        const long double rs = std::nearbyint(s);
        if (std::fabs(static_cast<double>(s - rs)) > 1e-6) return false;
        g.m[r * kDim + c] = static_cast<std::int64_t>(rs);
      }
    // Exact checks: D M == D' and M G M^T == G.
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < kDim; ++k) s += dmat[r * kDim + k] * g.m[k * kDim + c];
        if (s != dimg[r * kDim + c]) return false;
      }
    const auto& gr = gram64();
    std::vector<std::int64_t> mg(kDim * kDim, 0);
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t k = 0; k < kDim; ++k) {
        const std::int64_t a = g.m[r * kDim + k];
        if (a == 0) continue;
        for (std::size_t c = 0; c < kDim; ++c) mg[r * kDim + c] += a * gr[k * kDim + c];
      }
    for (std::size_t r = 0; r < kDim; ++r)
      for (std::size_t c = 0; c < kDim; ++c) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < kDim; ++k) s += mg[r * kDim + k] * g.m[c * kDim + k];
        if (s != gr[r * kDim + c]) return false;
      }
    const std::vector<std::int64_t> b0 = coords_of(from.points[base[0]]);
    g.t.assign(kDim, 0);
    for (std::size_t c = 0; c < kDim; ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < kDim; ++k) s += b0[k] * g.m[k * kDim + c];
      g.t[c] = y0[c] - s;
    }
    // Center: c M + t == c', with c = num / den on both sides.
    for (std::size_t c = 0; c < kDim; ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < kDim; ++k) s += c_from[k] * g.m[k * kDim + c];
      if (s + from.center.den * g.t[c] != c_to[c]) return false;
    }
    if (opts.skip_identity) {
      bool ident = std::all_of(g.t.begin(), g.t.end(), [](std::int64_t x) { return x == 0; });
      for (std::size_t r = 0; r < kDim && ident; ++r)
        for (std::size_t c = 0; c < kDim; ++c)
          if (g.m[r * kDim + c] != (r == c ? 1 : 0)) {
            ident = false;
            break;
          }
      if (ident) return false;
    }
    found = std::move(g);
    return true;
  }

  bool descend(std::size_t depth, const std::vector<std::uint64_t>& hf, const std::vector<std::uint64_t>& ht) {
    max_depth = std::max(max_depth, depth);
    if (depth == base.size()) return leaf();
    std::unordered_map<std::uint64_t, std::uint32_t> count;
    count.reserve(ht.size());
    for (std::uint64_t x : ht) ++count[x];
    std::size_t pos = base.size();
    std::uint32_t best = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (assigned[i]) continue;
      auto it = count.find(hf[base[i]]);
      const std::uint32_t c = it == count.end() ? 0 : it->second;
      if (c == 0) return false;
      if (pos == base.size() || c < best) {
        pos = i;
        best = c;
      }
    }
    std::vector<std::uint32_t> cand;
    for (std::size_t q = 0; q < ht.size(); ++q)
      if (ht[q] == hf[base[pos]]) cand.push_back(static_cast<std::uint32_t>(q));
    const std::size_t n = cand.size();
    std::size_t offset = 0;
    if (opts.rng && n > 1 && depth < opts.random_depth)
      offset = std::uniform_int_distribution<std::size_t>(0, n - 1)(*opts.rng);

    const LeechVec& b = from.points[base[pos]];
    std::vector<std::uint64_t> hf2(hf.size()), ht2(ht.size());
    for (std::size_t p = 0; p < hf.size(); ++p)
      hf2[p] = mix(hf[p], static_cast<std::uint64_t>(dist(from.points[p], b)));
    const auto want = digest(hf2);
    assigned[pos] = true;
    bool hit = false;
    for (std::size_t s = 0; s < n && !hit; ++s) {
      if (++nodes > opts.node_budget) {
        out_of_budget = true;
        break;
      }
      const std::uint32_t img = cand[(s + offset) % n];
      const LeechVec& q = to.points[img];
      for (std::size_t p = 0; p < ht.size(); ++p)
        ht2[p] = mix(ht[p], static_cast<std::uint64_t>(dist(to.points[p], q)));
      if (digest(ht2) != want) continue;
      image[pos] = img;
      hit = descend(depth + 1, hf2, ht2);
      if (out_of_budget) break;
    }
    assigned[pos] = false;
    return hit;
  }
};

}  // namespace

MarkedSet marked_set(const LorentzVec& u, int k) {
  if (u.a < 1) throw MathError("marked_set: height must be >= 1");
  MarkedSet s;
  s.center = root_center(u);
  for (int i = 0; i <= k; ++i)
    for (const LeechVec& p : roots_at(u, i)) {
      s.points.push_back(p);
      s.level.push_back(i);
    }
  return s;
}

LeechVec LeechIsometry::apply(const LeechVec& x) const {
  const std::vector<std::int64_t> y = coords_of(x);
  std::vector<std::int64_t> z(t);
  for (std::size_t k = 0; k < kDim; ++k) {
    if (y[k] == 0) continue;
    for (std::size_t c = 0; c < kDim; ++c) z[c] += y[k] * m[k * kDim + c];
  }
  return Leech::instance().from_coords(z);
}

LorentzVec LeechIsometry::apply(const LorentzVec& u) const {
  if (u.a < 1) throw MathError("LeechIsometry::apply: height must be >= 1");
  const std::vector<std::int64_t> y = coords_of(u.lam);
  std::vector<std::int64_t> z(kDim);
  for (std::size_t c = 0; c < kDim; ++c) z[c] = u.a * t[c];
  for (std::size_t k = 0; k < kDim; ++k) {
    if (y[k] == 0) continue;
    for (std::size_t c = 0; c < kDim; ++c) z[c] += y[k] * m[k * kDim + c];
  }
  LorentzVec v;
  v.a = u.a;
  v.lam = Leech::instance().from_coords(z);
  // 2ab - |lam|^2 is preserved; scaled norms are 8 times true ones
  const std::int64_t num = scaled_norm(v.lam) + 8 * norm(u);
  if (num % (16 * u.a) != 0) throw MathError("LeechIsometry::apply: image not integral");
  v.b = num / (16 * u.a);
  return v;
}

LeechIsometry LeechIsometry::identity() {
  LeechIsometry g;
  g.m.assign(kDim * kDim, 0);
  for (std::size_t i = 0; i < kDim; ++i) g.m[i * kDim + i] = 1;
  g.t.assign(kDim, 0);
  return g;
}

int affine_rank(const std::vector<LeechVec>& pts) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  const auto b = affine_basis(pts, order);
  return b.empty() ? -1 : static_cast<int>(b.size()) - 1;
}

namespace {

// Shared setup of a search; nullopt when the label multisets differ.
std::optional<Search> prepare(const MarkedSet& from, const MarkedSet& to, const SearchOptions& opts,
                              std::vector<std::uint64_t>& lf, std::vector<std::uint64_t>& lt) {
  const std::size_t n = from.points.size();
  if (to.points.size() != n || from.center.den != to.center.den) return std::nullopt;
  lf = refined_labels(from);
  lt = refined_labels(to);
  if (digest(lf) != digest(lt)) return std::nullopt;
  std::unordered_map<std::uint64_t, std::size_t> count_from;
  for (auto l : lf) ++count_from[l];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const std::size_t cx = count_from[lf[x]], cy = count_from[lf[y]];
    if (cx != cy) return cx < cy;
    return lf[x] < lf[y];
  });
  std::vector<std::size_t> base = lattice_basis(from.points, order);
  if (base.empty()) base = affine_basis(from.points, order);
  if (base.size() != kDim + 1) throw MathError("find_isometry: point set does not span");
  Search s{from, to, opts, std::move(base), {}, {}, {}, {}, {}, {}, 0, 0, false, {}};

  const std::vector<std::int64_t> b0 = coords_of(from.points[s.base[0]]);
  IntMat d(kDim, kDim);
  s.dmat.assign(kDim * kDim, 0);
  for (std::size_t r = 0; r < kDim; ++r) {
    const std::vector<std::int64_t> y = coords_of(from.points[s.base[r + 1]]);
    for (std::size_t c = 0; c < kDim; ++c) {
      s.dmat[r * kDim + c] = y[c] - b0[c];
      d(r, c) = y[c] - b0[c];
    }
  }
  const RatMat inv = inverse(d);
  s.dinv.resize(kDim * kDim);
  for (std::size_t r = 0; r < kDim; ++r)
    for (std::size_t c = 0; c < kDim; ++c) s.dinv[r * kDim + c] = static_cast<long double>(inv(r, c).get_d());
  s.c_from = coords_of(from.center.num);
  s.c_to = coords_of(to.center.num);
  s.image.assign(s.base.size(), 0);
  s.assigned.assign(s.base.size(), false);
  return s;
}

IsometrySearch run(Search& s, const std::vector<std::uint64_t>& lf, const std::vector<std::uint64_t>& lt) {
  s.nodes = 0;
  s.max_depth = 0;
  s.out_of_budget = false;
  s.found.reset();
  s.descend(0, lf, lt);
  IsometrySearch out;
  out.map = std::move(s.found);
  out.complete = !s.out_of_budget;
  out.nodes = s.nodes;
  out.max_depth = s.max_depth;
  out.base_size = s.base.size();
  return out;
}

}  // namespace

IsometrySearch find_isometry(const MarkedSet& from, const MarkedSet& to, const SearchOptions& opts) {
  std::vector<std::uint64_t> lf, lt;
  std::optional<Search> s = prepare(from, to, opts, lf, lt);
  if (!s) return {};
  return run(*s, lf, lt);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::no: return "no";
    case Verdict::yes: return "yes";
    default: return "undecided";
  }
}

Equivalence equivalent(const LorentzVec& u, const LorentzVec& u2, int k_max) {
  Equivalence e;
  if (norm(u) != norm(u2) || u.a != u2.a) {
    e.verdict = Verdict::no;
    return e;
  }
  if (u.a < 1) throw MathError("equivalent: height must be >= 1");
  if (u == u2) {
    e.verdict = Verdict::yes;
    e.map = LeechIsometry::identity();
    return e;
  }
  for (int k = 2; k <= k_max; ++k) {
    const MarkedSet p = marked_set(u, k);
    const MarkedSet q = marked_set(u2, k);
    e.k_used = k;
    if (p.points.size() != q.points.size()) {
      e.verdict = Verdict::no;
      return e;
    }
    const int rp = affine_rank(p.points), rq = affine_rank(q.points);
    if (rp != rq) {
      e.verdict = Verdict::no;
      return e;
    }
    if (rp < static_cast<int>(kDim)) continue;
    const IsometrySearch r = find_isometry(p, q);
    if (r.map) {
      e.verdict = Verdict::yes;
      e.map = r.map;
    } else {
      e.verdict = r.complete ? Verdict::no : Verdict::undecided;
    }
    return e;
  }
  e.verdict = Verdict::undecided;
  return e;
}

MarkedSet spanning_marked_set(const LorentzVec& u, int k_max) {
  for (int k = 2; k <= k_max; ++k) {
    MarkedSet p = marked_set(u, k);
    if (affine_rank(p.points) == static_cast<int>(kDim)) return p;
  }
  return {};
}

std::vector<LeechIsometry> random_stabilizer(const LorentzVec& u, std::size_t count, std::mt19937_64& rng) {
  const MarkedSet p = spanning_marked_set(u);
  if (p.points.empty()) return {};
  return random_stabilizer(p, count, rng);
}

std::vector<LeechIsometry> random_stabilizer(const MarkedSet& p, std::size_t count, std::mt19937_64& rng) {
  std::vector<LeechIsometry> out;
  SearchOptions opts;
  opts.rng = &rng;
  opts.random_depth = kDim + 1;
  opts.skip_identity = true;
  opts.node_budget = 20'000;
  std::vector<std::uint64_t> lf, lt;
  std::optional<Search> s = prepare(p, p, opts, lf, lt);
  for (std::size_t tries = 0; s && out.size() < count && tries < 4 * count; ++tries) {
    IsometrySearch r = run(*s, lf, lt);
    if (r.map) out.push_back(std::move(*r.map));
    else if (r.complete) break;  // the stabilizer is trivial
  }
  return out;
}

std::string norm0_label(const LorentzVec& x) {
  const Norm0Class c = classify_norm0(x);
  return c.multiplicity == 1 ? c.type : std::to_string(c.multiplicity) + "*" + c.type;
}

std::string Fingerprint::serialize() const {
  std::ostringstream os;
  auto list = [&](const std::vector<std::string>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
  };
  os << "n=" << norm << ";h=" << height << ";R0=" << roots << ";R1=" << r1 << ";R2=" << r2 << ";T=";
  list(targets);
  os << ";z1=";
  list(z1);
  os << ";z2=";
  list(z2);
  return os.str();
}

Fingerprint fingerprint(const LorentzVec& u, const OrbitResolver& resolver) {
  if (!in_domain(u)) throw MathError("fingerprint: vector not in D");
  Fingerprint f;
  f.norm = norm(u);
  f.height = u.a;
  const std::vector<LeechVec> r0 = roots_at(u, 0);
  const RootSystem rs = classify_points(r0);
  f.roots = rs.signature();
  f.r1 = static_cast<std::int64_t>(roots_at(u, 1).size());
  f.r2 = static_cast<std::int64_t>(roots_at(u, 2).size());
  std::vector<LorentzVec> roots;
  for (const LeechVec& m : r0) roots.push_back(simple_root(m));
  for (const ADEComponent& c : rs.components) {
    const LorentzVec x = u - highest_root(c, roots);
    std::string label;
    if (norm(x) == 0) {
      label = norm0_label(x);
    } else {
      if (!resolver) throw MathError("fingerprint: no resolver for a norm " + std::to_string(norm(x)) + " target");
      label = resolver(reduce_to_domain(x).vec);
    }
    f.targets.push_back(c.name() + ">" + label);
  }
  std::sort(f.targets.begin(), f.targets.end());
  for (const LorentzVec& x : norm0_at(u, 1)) f.z1.push_back(norm0_label(x));
  for (const LorentzVec& x : norm0_at(u, 2)) f.z2.push_back(norm0_label(x));
  std::sort(f.z1.begin(), f.z1.end());
  std::sort(f.z2.begin(), f.z2.end());
  return f;
}

std::optional<std::size_t> OrbitStore::match(const LorentzVec& u, const std::string& fp_text) {
  auto [lo, hi] = buckets_.equal_range(fp_text);
  for (auto it = lo; it != hi; ++it) {
    const OrbitRecord& r = records_[it->second];
    if (r.rep == u) return it->second;
    ++exact_tests_;
    const Equivalence e = equivalent(u, r.rep);
    max_k_ = std::max(max_k_, e.k_used);
    if (e.verdict == Verdict::yes) return it->second;
    if (e.verdict == Verdict::undecided) {
      ++undecided_;
      throw MathError("orbit store: undecided equivalence for " + to_string(u) + " vs " + to_string(r.rep));
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> OrbitStore::find(const LorentzVec& u, const Fingerprint& fp) {
  return match(u, fp.serialize());
}

OrbitStore::Insert OrbitStore::insert_or_find(const LorentzVec& u, const Fingerprint& fp, const ParentLink& link) {
  if (::lorentz::norm(u) != norm_) throw MathError("orbit store: wrong norm");
  const std::string text = fp.serialize();
  if (auto idx = match(u, text)) {
    OrbitRecord& r = records_[*idx];
    if (u < r.rep) r.rep = u;
    const bool known = std::any_of(r.parents.begin(), r.parents.end(), [&](const ParentLink& p) {
      return p.orbit == link.orbit && p.component == link.component;
    });
    if (!known) r.parents.push_back(link);
    return {*idx, false};
  }
  OrbitRecord r;
  r.key = "n" + std::to_string(norm_) + ":p" + std::to_string(records_.size() + 1);
  r.norm = norm_;
  r.rep = u;
  r.fp = fp;
  r.parents.push_back(link);
  add_record(std::move(r));
  return {records_.size() - 1, true};
}

void OrbitStore::add_record(OrbitRecord r) {
  buckets_.insert({r.fp.serialize(), records_.size()});
  records_.push_back(std::move(r));
}

void OrbitStore::finalize() {
  std::sort(records_.begin(), records_.end(), [](const OrbitRecord& x, const OrbitRecord& y) {
    if (x.rep.a != y.rep.a) return x.rep.a < y.rep.a;
    if (x.fp.roots != y.fp.roots) return x.fp.roots < y.fp.roots;
    const std::string fx = x.fp.serialize(), fy = y.fp.serialize();
    if (fx != fy) return fx < fy;
    return x.rep < y.rep;
  });
  buckets_.clear();
  for (std::size_t i = 0; i < records_.size(); ++i) {
    records_[i].key = "n" + std::to_string(norm_) + ":" + std::to_string(i + 1);
    std::sort(records_[i].parents.begin(), records_[i].parents.end(),
              [](const ParentLink& a, const ParentLink& b) {
                return std::tie(a.orbit, a.component) < std::tie(b.orbit, b.component);
              });
    buckets_.insert({records_[i].fp.serialize(), i});
  }
}

std::string record_to_json(const OrbitRecord& r) {
  nlohmann::json j;
  j["id"] = r.key;
  j["norm"] = r.norm;
  j["height"] = r.rep.a;
  std::vector<std::int64_t> rep(r.rep.lam.begin(), r.rep.lam.end());
  rep.push_back(r.rep.a);
  rep.push_back(r.rep.b);
  j["rep"] = rep;
  j["fingerprint"] = {{"norm", r.fp.norm}, {"height", r.fp.height}, {"roots", r.fp.roots},
                      {"r1", r.fp.r1},     {"r2", r.fp.r2},         {"targets", r.fp.targets},
                      {"z1", r.fp.z1},     {"z2", r.fp.z2}};
  nlohmann::json parents = nlohmann::json::array();
  for (const auto& p : r.parents) parents.push_back({{"orbit", p.orbit}, {"component", p.component}});
  j["parents"] = parents;
  return j.dump();
}

OrbitRecord record_from_json(const std::string& line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  OrbitRecord r;
  r.key = j.at("id");
  r.norm = j.at("norm");
  const std::vector<std::int64_t> rep = j.at("rep");
  if (rep.size() != kDim + 2) throw MathError("orbit record: representative needs 26 integers");
  std::copy(rep.begin(), rep.begin() + kDim, r.rep.lam.begin());
  r.rep.a = rep[kDim];
  r.rep.b = rep[kDim + 1];
  const auto& f = j.at("fingerprint");
  r.fp.norm = f.at("norm");
  r.fp.height = f.at("height");
  r.fp.roots = f.at("roots");
  r.fp.r1 = f.at("r1");
  r.fp.r2 = f.at("r2");
  r.fp.targets = f.at("targets").get<std::vector<std::string>>();
  r.fp.z1 = f.at("z1").get<std::vector<std::string>>();
  r.fp.z2 = f.at("z2").get<std::vector<std::string>>();
  for (const auto& p : j.at("parents")) r.parents.push_back({p.at("orbit"), p.at("component")});
  if (j.at("height") != r.rep.a) throw MathError("orbit record " + r.key + ": height field disagrees");
  return r;
}

void OrbitStore::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << nlohmann::json{{"format", kDbFormat}, {"norm", norm_}, {"count", records_.size()}}.dump() << '\n';
  for (const auto& r : records_) out << record_to_json(r) << '\n';
}

void OrbitStore::append_record(const std::string& path, const OrbitRecord& r) {
  std::ofstream out(path, std::ios::app);
  out << record_to_json(r) << '\n';
}

OrbitStore OrbitStore::load(const std::string& path, std::int64_t norm) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open orbit database " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": empty orbit database");
  const nlohmann::json head = nlohmann::json::parse(line);
  if (head.value("format", "") != kDbFormat) throw std::runtime_error(path + ": unknown database format");
  if (head.at("norm") != norm) throw std::runtime_error(path + ": database holds another norm");
  OrbitStore store(norm);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    OrbitRecord r = record_from_json(line);
    if (r.norm != norm || ::lorentz::norm(r.rep) != norm) throw MathError("orbit record " + r.key + ": wrong norm");
    if (!in_domain(r.rep)) throw MathError("orbit record " + r.key + ": representative not in D");
    store.add_record(std::move(r));
  }
  if (head.contains("count") && head.at("count") != store.size())
    throw std::runtime_error(path + ": record count does not match the header");
  return store;
}

}  // namespace lorentz
