#include "lorentz/leech.hpp"

#include <algorithm>
#include <bit>

#include "lorentz/data.hpp"

namespace lorentz {

namespace {

IntMat generating_set(const GolayCode& code) {
  std::vector<LeechVec> gens;
  for (std::uint32_t row : code.generator()) {
    LeechVec v{};
    for (std::size_t i = 0; i < kLeechDim; ++i) v[i] = (row >> i & 1u) ? 2 : 0;
    gens.push_back(v);
  }
  for (std::size_t j = 1; j < kLeechDim; ++j) {
    LeechVec p{}, m{};
    p[0] = 4;
    p[j] = 4;
    m[0] = 4;
    m[j] = -4;
    gens.push_back(p);
    gens.push_back(m);
  }
  LeechVec odd;
  odd.fill(1);
  odd[0] = -3;
  gens.push_back(odd);
  IntMat out(gens.size(), kLeechDim);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < kLeechDim; ++c) out(r, c) = static_cast<long>(gens[r][c]);
  return out;
}

IntMat scaled_gram(const IntMat& b) {
  IntMat g = b * b.transpose();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g(i, j) % 8 != 0) throw MathError("Leech generators are not integral");
      g(i, j) /= 8;
    }
  return g;
}

IntMat reduced_basis(const GolayCode& code) {
  HermiteResult h = hnf(generating_set(code));
  if (h.rank != kLeechDim) throw MathError("Leech generators do not span");
  IntMat b(kLeechDim, kLeechDim);
  for (std::size_t r = 0; r < kLeechDim; ++r)
    for (std::size_t c = 0; c < kLeechDim; ++c) b(r, c) = h.form(r, c);
  LllResult red = lll_gram(scaled_gram(b));
  return red.transform * b;
}

}  // namespace

std::int64_t scaled_dot(const LeechVec& x, const LeechVec& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < kLeechDim; ++i) s += x[i] * y[i];
  return s;
}

LeechVec operator+(const LeechVec& x, const LeechVec& y) {
  LeechVec r;
  for (std::size_t i = 0; i < kLeechDim; ++i) r[i] = x[i] + y[i];
  return r;
}

LeechVec operator-(const LeechVec& x, const LeechVec& y) {
  LeechVec r;
  for (std::size_t i = 0; i < kLeechDim; ++i) r[i] = x[i] - y[i];
  return r;
}

LeechVec operator*(std::int64_t k, const LeechVec& x) {
  LeechVec r;
  for (std::size_t i = 0; i < kLeechDim; ++i) r[i] = k * x[i];
  return r;
}

Rat distance2(const LeechVec& p, const ScaledCenter& c) {
  Int s = 0;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    Int d = Int(static_cast<long>(c.den)) * static_cast<long>(p[i]) - static_cast<long>(c.num[i]);
    s += d * d;
  }
  Rat r(s, Int(8) * static_cast<long>(c.den) * static_cast<long>(c.den));
  r.canonicalize();
  return r;
}

const Leech& Leech::instance() {
  static const Leech leech(GolayCode::from_file(data_path("golay12x24.txt")));
  return leech;
}

Leech::Leech(GolayCode code)
    : golay_(std::move(code)),
      basis_(reduced_basis(golay_)),
      gram_(scaled_gram(basis_)),
      enumerator_(gram_) {
  if (det(gram_) != 1) throw MathError("Leech Gram is not unimodular");
  for (std::size_t i = 0; i < kLeechDim; ++i)
    if (gram_(i, i) % 2 != 0) throw MathError("Leech Gram is not even");
  basis64_.resize(kLeechDim * kLeechDim);
  for (std::size_t r = 0; r < kLeechDim; ++r) {
    LeechVec row;
    for (std::size_t c = 0; c < kLeechDim; ++c) {
      basis64_[r * kLeechDim + c] = basis_(r, c).get_si();
      row[c] = basis_(r, c).get_si();
    }
    if (!contains(row)) throw MathError("Leech basis row fails the membership test");
  }
  // x = y B  =>  y = x B^T G^{-1} / 8.
  RatMat ginv = inverse(gram_);
  RatMat m = to_rational(basis_.transpose()) * ginv;
  to_coords_.resize(kLeechDim * kLeechDim);
  for (std::size_t r = 0; r < kLeechDim; ++r)
    for (std::size_t c = 0; c < kLeechDim; ++c) {
      if (m(r, c).get_den() != 1) throw MathError("Leech coordinate map is not integral");
      to_coords_[r * kLeechDim + c] = m(r, c).get_num().get_si();
    }
}

bool Leech::contains(const LeechVec& x) const {
  const std::int64_t m = x[0] & 1;
  std::int64_t sum = 0;
  std::uint32_t mask = 0;
  const std::int64_t marker = m == 0 ? 2 : 1;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    if ((x[i] & 1) != m) return false;
    if ((x[i] & 3) == marker) mask |= 1u << i;
    sum += x[i];
  }
  if ((sum - 4 * m) % 8 != 0) return false;
  return golay_.contains(mask);
}

LeechVec Leech::from_coords(const std::vector<std::int64_t>& y) const { return combine(y); }

std::optional<std::vector<std::int64_t>> Leech::coords(const LeechVec& x) const {
  if (!contains(x)) return std::nullopt;
  std::vector<std::int64_t> y(kLeechDim);
  for (std::size_t j = 0; j < kLeechDim; ++j) {
    __int128 s = 0;
    for (std::size_t i = 0; i < kLeechDim; ++i)
      s += static_cast<__int128>(x[i]) * to_coords_[i * kLeechDim + j];
    if (s % 8 != 0) return std::nullopt;
    y[j] = static_cast<std::int64_t>(s / 8);
  }
  if (combine(y) != x) return std::nullopt;
  return y;
}

std::vector<double> Leech::basis_coords(const ScaledCenter& c) const {
  std::vector<double> t(kLeechDim);
  const double scale = 8.0 * static_cast<double>(c.den);
  for (std::size_t j = 0; j < kLeechDim; ++j) {
    __int128 s = 0;
    for (std::size_t i = 0; i < kLeechDim; ++i)
      s += static_cast<__int128>(c.num[i]) * to_coords_[i * kLeechDim + j];
    t[j] = static_cast<double>(s) / scale;
  }
  return t;
}

LeechVec Leech::combine(const std::vector<std::int64_t>& y) const {
  LeechVec p{};
  for (std::size_t r = 0; r < kLeechDim; ++r) {
    const std::int64_t k = y[r];
    if (k == 0) continue;
    const std::int64_t* row = &basis64_[r * kLeechDim];
    for (std::size_t c = 0; c < kLeechDim; ++c) p[c] += k * row[c];
  }
  return p;
}

__int128 Leech::dist_num(const LeechVec& p, const ScaledCenter& c) {
  __int128 s = 0;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    const __int128 d = static_cast<__int128>(c.den) * p[i] - c.num[i];
    s += d * d;
  }
  return s;
}

std::vector<LeechVec> Leech::points_at(const ScaledCenter& c, const Rat& r2, SphereMode mode) const {
  std::vector<LeechVec> out;
  visit(c, r2, mode, [&](const LeechVec& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

Leech::Nearest Leech::nearest(const ScaledCenter& c) const {
  // The covering radius is sqrt(2), so some point lies within distance^2 2.
  std::vector<LeechVec> pts = points_at(c, Rat(2), SphereMode::at_most);
  if (pts.empty()) throw MathError("no Leech point within the covering radius");
  __int128 best = -1;
  for (const LeechVec& p : pts) {
    const __int128 d = dist_num(p, c);
    if (best < 0 || d < best) best = d;
  }
  Nearest out;
  for (const LeechVec& p : pts)
    if (dist_num(p, c) == best) out.points.push_back(p);
  out.dist2 = distance2(out.points.front(), c);
  return out;
}

std::optional<LeechVec> Leech::closest_below(const ScaledCenter& c, const Rat& bound) const {
  if (bound <= 0) return std::nullopt;
  std::optional<LeechVec> best;
  __int128 best_d = -1;
  const __int128 p = bound.get_num().get_si();
  const __int128 q = bound.get_den().get_si();
  const __int128 scale = static_cast<__int128>(8) * c.den * c.den;
  visit(c, bound, SphereMode::at_most, [&](const LeechVec& pt) {
    const __int128 d = dist_num(pt, c);
    if (d * q >= scale * p) return true;
    if (!best || d < best_d || (d == best_d && pt < *best)) {
      best = pt;
      best_d = d;
    }
    return true;
  });
  return best;
}

}  // namespace lorentz
