#pragma once

// Fincke-Pohst enumeration of lattice points in an ellipsoid.
//
// Pruning uses a double-precision copy of the exact L D L^T factorization
// with a safety margin; every reported point is re-checked exactly by the
// caller (enumerate_sphere does this with rationals).

#include <cmath>
#include <cstdint>
#include <vector>

#include "lorentz/exact.hpp"

namespace lorentz {

enum class SphereMode { exact, at_most };

class SphereEnumerator {
public:
  explicit SphereEnumerator(const IntMat& gram);

  std::size_t dim() const { return n_; }

  /// Calls visit(y) for every integer vector y with
  /// (y - center)^T G (y - center) <= bound (in floating point).
  /// visit may return false to stop the enumeration early.
  template <class Visit>
  void visit(const std::vector<double>& center, double bound, Visit&& visit) const {
    if (bound < 0) return;
    std::vector<std::int64_t> y(n_, 0);
    std::vector<double> partial(n_ + 1, 0.0);
    std::vector<double> dev(n_, 0.0);  // y_j - t_j for levels already fixed
    bool stop = false;
    descend(static_cast<std::ptrdiff_t>(n_) - 1, center, bound, y, partial, dev, visit, stop);
  }

  /// Safety margin added to float bounds.
  static double margin(double bound) { return 1e-7 * (1.0 + std::fabs(bound)); }

private:
  template <class Visit>
  void descend(std::ptrdiff_t i, const std::vector<double>& t, double bound, std::vector<std::int64_t>& y,
               std::vector<double>& partial, std::vector<double>& dev, Visit& visit, bool& stop) const {
    const std::size_t ui = static_cast<std::size_t>(i);
    double c = t[ui];
    const double* lrow = &lower_[0];
    for (std::size_t j = ui + 1; j < n_; ++j) c -= lrow[j * n_ + ui] * dev[j];
    const double room = bound - partial[ui + 1];
    if (room < 0) return;
    const double r = std::sqrt(room / diag_[ui]);
    const auto lo = static_cast<std::int64_t>(std::ceil(c - r - 1e-9));
    const auto hi = static_cast<std::int64_t>(std::floor(c + r + 1e-9));
    for (std::int64_t v = lo; v <= hi && !stop; ++v) {
      const double d = static_cast<double>(v) - c;
      const double p = partial[ui + 1] + diag_[ui] * d * d;
      if (p > bound) continue;
      y[ui] = v;
      dev[ui] = static_cast<double>(v) - t[ui];
      partial[ui] = p;
      if (i == 0) {
        if (!visit(static_cast<const std::vector<std::int64_t>&>(y))) stop = true;
      } else {
        descend(i - 1, t, bound, y, partial, dev, visit, stop);
      }
    }
  }

  std::size_t n_ = 0;
  std::vector<double> lower_;  // n x n, unit lower triangular
  std::vector<double> diag_;
};

/// All integer x with (x - center)^T G (x - center) == radius2 (exact mode)
/// or <= radius2 (at_most mode), sorted lexicographically. Rejects forms
/// that are not positive definite.
std::vector<IntVec> enumerate_sphere(const QuadForm& q, const RatVec& center, const Rat& radius2,
                                     SphereMode mode);

}  // namespace lorentz
