#pragma once

// The Leech lattice in the scaled Golay frame.
//
// A vector is stored as x in Z^24 and stands for x / sqrt(8), so the true
// inner product is (x . y) / 8 and minimal vectors have x . x == 32.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lorentz/enumerate.hpp"
#include "lorentz/exact.hpp"
#include "lorentz/golay.hpp"

namespace lorentz {

inline constexpr std::size_t kLeechDim = 24;

using LeechVec = std::array<std::int64_t, kLeechDim>;

/// A rational point num / den in scaled coordinates (den > 0).
struct ScaledCenter {
  LeechVec num{};
  std::int64_t den = 1;
};

std::int64_t scaled_dot(const LeechVec& x, const LeechVec& y);
inline std::int64_t scaled_norm(const LeechVec& x) { return scaled_dot(x, x); }
LeechVec operator+(const LeechVec& x, const LeechVec& y);
LeechVec operator-(const LeechVec& x, const LeechVec& y);
LeechVec operator*(std::int64_t k, const LeechVec& x);

/// Exact true squared distance from p to c.
Rat distance2(const LeechVec& p, const ScaledCenter& c);

class Leech {
public:
  /// Built once from the bundled Golay generator.
  static const Leech& instance();
  explicit Leech(GolayCode code);

  const GolayCode& golay() const { return golay_; }
  /// Rows are scaled coordinates of an LLL-reduced basis.
  const IntMat& basis() const { return basis_; }
  /// True Gram matrix of basis(); even unimodular.
  const IntMat& gram() const { return gram_; }

  bool contains(const LeechVec& x) const;
  LeechVec from_coords(const std::vector<std::int64_t>& y) const;
  /// Basis coordinates of x, or nothing if x is not in the lattice.
  std::optional<std::vector<std::int64_t>> coords(const LeechVec& x) const;

  /// Calls f(p) for each lattice point p with true |p - c|^2 == r2
  /// (exact mode) or <= r2 (at_most mode). f returns false to stop.
  template <class F>
  void visit(const ScaledCenter& c, const Rat& r2, SphereMode mode, F&& f) const {
    if (r2 < 0) return;
    const std::vector<double> t = basis_coords(c);
    const double bound = r2.get_d() + SphereEnumerator::margin(r2.get_d());
    const __int128 p = r2.get_num().get_si();
    const __int128 q = r2.get_den().get_si();
    const __int128 scale = static_cast<__int128>(8) * c.den * c.den;
    LeechVec point;
    enumerator_.visit(t, bound, [&](const std::vector<std::int64_t>& y) {
      point = combine(y);
      const __int128 d = dist_num(point, c);
      const bool keep = mode == SphereMode::exact ? d * q == scale * p : d * q <= scale * p;
      return keep ? f(static_cast<const LeechVec&>(point)) : true;
    });
  }

  std::vector<LeechVec> points_at(const ScaledCenter& c, const Rat& r2, SphereMode mode) const;

  struct Nearest {
    Rat dist2;
    std::vector<LeechVec> points;  // sorted
  };
  /// All lattice points closest to c. Never farther than sqrt(2).
  Nearest nearest(const ScaledCenter& c) const;

  /// The closest lattice point with true |p - c|^2 < bound, if any
  /// (ties broken lexicographically).
  std::optional<LeechVec> closest_below(const ScaledCenter& c, const Rat& bound) const;

private:
  std::vector<double> basis_coords(const ScaledCenter& c) const;
  LeechVec combine(const std::vector<std::int64_t>& y) const;
  /// |den * p - num|^2, i.e. 8 den^2 times the true squared distance.
  static __int128 dist_num(const LeechVec& p, const ScaledCenter& c);

  GolayCode golay_;
  IntMat basis_;
  IntMat gram_;
  std::vector<std::int64_t> basis64_;    // 24 x 24
  std::vector<std::int64_t> to_coords_;  // B^T G^{-1}, divide by 8 after use
  SphereEnumerator enumerator_;
};

}  // namespace lorentz
