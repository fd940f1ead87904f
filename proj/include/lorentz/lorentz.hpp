#pragma once

// II(1,25) = Leech + hyperbolic plane.
//
// u = (lam; a, b) with (u1, u2) = a1 b2 + b1 a2 - <lam1, lam2>. The Weyl
// vector is w = (0; 0, 1), so height(u) = (u, w) = a. Simple roots are
// r_mu = (mu; 1, |mu|^2/2 - 1) for mu in the Leech lattice.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/leech.hpp"

namespace lorentz {

struct LorentzVec {
  LeechVec lam{};  // scaled frame
  std::int64_t a = 0;
  std::int64_t b = 0;

  auto operator<=>(const LorentzVec&) const = default;
  bool operator==(const LorentzVec&) const = default;
};

LorentzVec operator+(const LorentzVec& x, const LorentzVec& y);
LorentzVec operator-(const LorentzVec& x, const LorentzVec& y);
LorentzVec operator*(std::int64_t k, const LorentzVec& x);

std::int64_t inner(const LorentzVec& x, const LorentzVec& y);
inline std::int64_t norm(const LorentzVec& x) { return inner(x, x); }
inline std::int64_t height(const LorentzVec& x) { return x.a; }

/// True inner product of two Leech vectors in the scaled frame.
std::int64_t leech_inner(const LeechVec& x, const LeechVec& y);

LorentzVec weyl_vector();
/// (0; 1, 0), the isotropic partner of w.
LorentzVec weyl_partner();
LorentzVec simple_root(const LeechVec& mu);

/// norm >= 0 and (a > 0, or a == 0 with lam == 0 and b >= 0).
bool in_positive_cone(const LorentzVec& u);
bool is_weyl_multiple(const LorentzVec& u);

/// Largest k with u / k in II(1,25).
std::int64_t content(const LorentzVec& u);
LorentzVec divide(const LorentzVec& u, std::int64_t k);

/// The sphere |mu - lam/a|^2 = radius2 carrying R_i(u).
Rat root_radius2(const LorentzVec& u, std::int64_t i);
ScaledCenter root_center(const LorentzVec& u);

/// Leech points mu with (u, r_mu) == i, sorted. Requires a >= 1.
std::vector<LeechVec> roots_at(const LorentzVec& u, std::int64_t i);

/// A simple root with negative inner product, the most negative one,
/// or nothing if u lies in D.
std::optional<LeechVec> negative_root(const LorentzVec& u);
bool in_domain(const LorentzVec& u);

struct Reduction {
  LorentzVec vec;
  std::size_t reflections = 0;
};
/// Reflects u into D through simple roots with negative inner product.
Reduction reduce_to_domain(const LorentzVec& u);

/// Norm-0 vectors x in the closed positive cone with (x, u) == c, sorted.
/// Requires norm(u) > 0 and c >= 1. max_alpha_extra widens the alpha range
/// past the Gram bound (for completeness testing).
std::vector<LorentzVec> norm0_at(const LorentzVec& u, std::int64_t c, std::int64_t max_alpha_extra = 0);

/// Coordinates in the basis (Leech basis; e = (0;1,0); f = (0;0,1)).
std::vector<std::int64_t> ii_coords(const LorentzVec& u);
LorentzVec from_ii_coords(const std::vector<Int>& y);
/// Gram matrix of II(1,25) in that basis.
const IntMat& ii_gram();

std::string to_string(const LorentzVec& u);

}  // namespace lorentz
