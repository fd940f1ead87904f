#pragma once

// Identity checks over the classified orbits.

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "lorentz/lattices.hpp"
#include "lorentz/orbit.hpp"

namespace lorentz {

struct Check {
  std::string name;
  std::size_t passed = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what);
  bool ok() const { return failures.empty() && passed > 0; }
};

struct Report {
  std::deque<Check> checks;  // check() hands out references
  std::vector<std::string> notes;

  Check& check(const std::string& name);
  bool ok() const;
  std::string text() const;
};

/// Golay code weights, and the Leech Gram: even, determinant 1, minimum 4,
/// 196560 minimal vectors.
Report verify_leech();

/// The 24 norm-0 representatives: letters, heights, Coxeter numbers, and
/// A_4^6 as the only type of height 5.
Report verify_table0();

/// Per norm-2 orbit: height^2 = -2 rho^2, 12 height = 18 - 4 z1 + r,
/// r = 2 mod 4, height = 1 + 2h with diagram B + a_1 when some norm-0
/// vector has inner product 1, the height drop h - 1 on every component and
/// every recorded parent link, and the stored fingerprint.
Report verify_norm2(OrbitStore& norm2);

/// Per norm-4 orbit, with profiles parallel to the records:
/// 8 height = 20 - 2 z2 - 8 z1 + r, the kind-2 relations height = 2(h+n-1)
/// and -rho^2 = (h+n-1)^2, the kind-3 relations u = z1 + z2,
/// height = h1 + h2, -rho^2 = h1 h2 and 8(h1+h2-2) roots, 24 orbits of kind
/// 1 with height 1 + 3h, the I^25 orbit (rho^2 = -(0^2+...+24^2) = -70^2),
/// and height drops on components and parent links.
Report verify_norm4(const OrbitStore& norm4, const OrbitStore& norm2, const std::vector<Norm4Profile>& profiles);

/// u = w + z for z of type A_4^6: norm 10, no roots, no norm-0 vector at
/// inner product 1..4; the glued 26-dimensional lattice is unimodular with
/// minimum 3. Also the height-5 uniqueness and the lower bounds for
/// (x, u) by the type of x.
struct Rootless26 {
  LorentzVec u;
  QuadForm gram;
};
Report verify_rootless26(Rootless26* out = nullptr);

}  // namespace lorentz
