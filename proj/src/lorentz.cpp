#include "lorentz/lorentz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lorentz {

LorentzVec operator+(const LorentzVec& x, const LorentzVec& y) { return {x.lam + y.lam, x.a + y.a, x.b + y.b}; }
LorentzVec operator-(const LorentzVec& x, const LorentzVec& y) { return {x.lam - y.lam, x.a - y.a, x.b - y.b}; }
LorentzVec operator*(std::int64_t k, const LorentzVec& x) { return {k * x.lam, k * x.a, k * x.b}; }

std::int64_t leech_inner(const LeechVec& x, const LeechVec& y) {
  const std::int64_t s = scaled_dot(x, y);
  if (s % 8 != 0) throw MathError("Leech inner product is not integral");
  return s / 8;
}

std::int64_t inner(const LorentzVec& x, const LorentzVec& y) {
  return x.a * y.b + x.b * y.a - leech_inner(x.lam, y.lam);
}

LorentzVec weyl_vector() { return {LeechVec{}, 0, 1}; }
LorentzVec weyl_partner() { return {LeechVec{}, 1, 0}; }

LorentzVec simple_root(const LeechVec& mu) { return {mu, 1, leech_inner(mu, mu) / 2 - 1}; }

bool in_positive_cone(const LorentzVec& u) {
  if (norm(u) < 0) return false;
  if (u.a > 0) return true;
  return u.a == 0 && u.lam == LeechVec{} && u.b >= 0;
}

bool is_weyl_multiple(const LorentzVec& u) { return u.a == 0 && u.lam == LeechVec{}; }

std::int64_t content(const LorentzVec& u) {
  std::int64_t g = std::gcd(u.a, u.b);
  for (std::int64_t x : u.lam) g = std::gcd(g, x);
  if (g == 0) return 0;
  const Leech& leech = Leech::instance();
  for (std::int64_t k = g; k > 1; --k) {
    if (g % k != 0) continue;
    LeechVec q;
    for (std::size_t i = 0; i < kLeechDim; ++i) q[i] = u.lam[i] / k;
    if (leech.contains(q)) return k;
  }
  return 1;
}

LorentzVec divide(const LorentzVec& u, std::int64_t k) {
  if (k <= 0) throw MathError("divide: non-positive divisor");
  LorentzVec out;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    if (u.lam[i] % k != 0) throw MathError("divide: not divisible");
    out.lam[i] = u.lam[i] / k;
  }
  if (u.a % k != 0 || u.b % k != 0) throw MathError("divide: not divisible");
  out.a = u.a / k;
  out.b = u.b / k;
  if (!Leech::instance().contains(out.lam)) throw MathError("divide: quotient leaves the lattice");
  return out;
}

Rat root_radius2(const LorentzVec& u, std::int64_t i) {
  if (u.a < 1) throw MathError("root queries need height >= 1");
  Rat r(2 * i * u.a - norm(u), u.a * u.a);
  r.canonicalize();
  return r + 2;
}

ScaledCenter root_center(const LorentzVec& u) {
  ScaledCenter c;
  c.num = u.lam;
  c.den = u.a;
  return c;
}

std::vector<LeechVec> roots_at(const LorentzVec& u, std::int64_t i) {
  if (u.a < 1) throw MathError("roots_at: height must be >= 1");
  if (i < 0) {
    // R_i for i < 0 is empty exactly when u is in D; report what is there.
    const Rat r2 = root_radius2(u, i);
    std::vector<LeechVec> out;
    if (r2 >= 0) out = Leech::instance().points_at(root_center(u), r2, SphereMode::exact);
    return out;
  }
  const Rat r2 = root_radius2(u, i);
  if (r2 < 0) return {};
  return Leech::instance().points_at(root_center(u), r2, SphereMode::exact);
}

std::optional<LeechVec> negative_root(const LorentzVec& u) {
  if (!in_positive_cone(u)) throw MathError("negative_root: vector outside the positive cone");
  if (u.a == 0) return std::nullopt;
  // (u, r_mu) < 0  <=>  |mu - lam/a|^2 < 2 - norm/a^2.
  return Leech::instance().closest_below(root_center(u), root_radius2(u, 0));
}

bool in_domain(const LorentzVec& u) { return !negative_root(u); }

Reduction reduce_to_domain(const LorentzVec& u) {
  if (!in_positive_cone(u)) throw MathError("reduce_to_domain: vector outside the positive cone");
  Reduction red{u, 0};
  while (auto mu = negative_root(red.vec)) {
    const LorentzVec r = simple_root(*mu);
    const std::int64_t k = inner(red.vec, r);
    red.vec = red.vec + k * r;
    ++red.reflections;
  }
  return red;
}

std::vector<LorentzVec> norm0_at(const LorentzVec& u, std::int64_t c, std::int64_t max_alpha_extra) {
  if (c <= 0) throw MathError("norm0_at: c must be positive");
  const std::int64_t n = norm(u);
  if (n <= 0 || u.a < 1) throw MathError("norm0_at: needs a positive-norm vector of positive height");
  std::vector<LorentzVec> out;
  if (c % u.a == 0) out.push_back({LeechVec{}, 0, c / u.a});
  const std::int64_t alpha_max = 2 * c * u.a / n + max_alpha_extra;
  const Leech& leech = Leech::instance();
  for (std::int64_t alpha = 1; alpha <= alpha_max; ++alpha) {
    Rat r2(alpha * (2 * u.a * c - alpha * n), u.a * u.a);
    r2.canonicalize();
    if (r2 < 0) continue;
    ScaledCenter center;
    center.num = alpha * u.lam;
    center.den = u.a;
    leech.visit(center, r2, SphereMode::exact, [&](const LeechVec& mu) {
      const std::int64_t s = scaled_norm(mu);
      if (s % (16 * alpha) != 0) return true;
      LorentzVec x{mu, alpha, s / (16 * alpha)};
      if (inner(x, u) == c && norm(x) == 0) out.push_back(x);
      return true;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> ii_coords(const LorentzVec& u) {
  auto y = Leech::instance().coords(u.lam);
  if (!y) throw MathError("ii_coords: Leech part not in the lattice");
  y->push_back(u.a);
  y->push_back(u.b);
  return *y;
}

LorentzVec from_ii_coords(const std::vector<Int>& y) {
  if (y.size() != kLeechDim + 2) throw MathError("from_ii_coords: need 26 coordinates");
  std::vector<std::int64_t> c(kLeechDim);
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    if (!y[i].fits_slong_p()) throw MathError("from_ii_coords: coordinate overflow");
    c[i] = y[i].get_si();
  }
  return {Leech::instance().from_coords(c), y[kLeechDim].get_si(), y[kLeechDim + 1].get_si()};
}

const IntMat& ii_gram() {
  static const IntMat g = [] {
    const IntMat& lg = Leech::instance().gram();
    IntMat m(kLeechDim + 2, kLeechDim + 2);
    for (std::size_t i = 0; i < kLeechDim; ++i)
      for (std::size_t j = 0; j < kLeechDim; ++j) m(i, j) = -lg(i, j);
    m(kLeechDim, kLeechDim + 1) = 1;
    m(kLeechDim + 1, kLeechDim) = 1;
    return m;
  }();
  return g;
}

std::string to_string(const LorentzVec& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < kLeechDim; ++i) os << (i ? " " : "") << u.lam[i];
  os << "; " << u.a << ", " << u.b << ')';
  return os.str();
}

}  // namespace lorentz
