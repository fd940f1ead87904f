#include "lorentz/enumerate.hpp"

#include <algorithm>

namespace lorentz {

SphereEnumerator::SphereEnumerator(const IntMat& gram) : n_(gram.rows()) {
  if (!is_positive_definite(gram)) throw MathError("sphere enumeration needs a positive definite form");
  LdlResult f = ldl(gram);
  lower_.assign(n_ * n_, 0.0);
  diag_.assign(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    diag_[i] = f.diag[i].get_d();
    for (std::size_t j = 0; j < n_; ++j) lower_[i * n_ + j] = f.lower(i, j).get_d();
  }
}

std::vector<IntVec> enumerate_sphere(const QuadForm& q, const RatVec& center, const Rat& radius2,
                                     SphereMode mode) {
  if (q.signature() != Signature::positive_definite)
    throw MathError("enumerate_sphere: lorentzian form rejected");
  if (radius2 < 0) throw MathError("enumerate_sphere: negative radius");
  if (center.size() != q.dim()) throw MathError("enumerate_sphere: center dimension mismatch");
  SphereEnumerator en(q.gram());
  std::vector<double> t(center.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = center[i].get_d();
  const double bound = radius2.get_d() + SphereEnumerator::margin(radius2.get_d());
  std::vector<IntVec> out;
  RatVec diff(q.dim());
  en.visit(t, bound, [&](const std::vector<std::int64_t>& y) {
    for (std::size_t i = 0; i < y.size(); ++i) diff[i] = Rat(static_cast<long>(y[i])) - center[i];
    Rat n = q.norm(diff);
    bool keep = mode == SphereMode::exact ? n == radius2 : n <= radius2;
    if (keep) {
      IntVec v(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) v[i] = static_cast<long>(y[i]);
      out.push_back(std::move(v));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lorentz
