#pragma once

// Positive definite lattices cut out of II(1,25).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorentz/exact.hpp"
#include "lorentz/lorentz.hpp"

namespace lorentz {

struct DefiniteLattice {
  QuadForm form;  // positive definite, LLL-reduced
  IntMat basis;   // rows in II(1,25) coordinates (see ii_coords); may be empty
};

/// The sublattice of II(1,25) orthogonal to all of vs, with the sign of the
/// form flipped. Requires the complement to be negative definite.
DefiniteLattice orthogonal_complement(const std::vector<LorentzVec>& vs);

/// u-perp with flipped sign; u primitive of norm 2 or 4.
DefiniteLattice perp_gram(const LorentzVec& u);

/// Number of vectors of the given norm (both signs counted).
std::int64_t count_norm(const QuadForm& q, std::int64_t n);
/// Vectors of norm <= n up to sign, as coordinate rows.
std::vector<IntVec> short_vectors(const QuadForm& q, std::int64_t n);
std::int64_t minimum(const QuadForm& q);

struct UnimodularData {
  DefiniteLattice lattice;           // A, 25-dim odd unimodular
  std::int64_t norm1_count = 0;      // number of norm-1 vectors of A
  int a1_dim = 0;                    // 25 - norm1_count / 2
  bool a1_even = false;              // A_1 is even
  std::int64_t a1_roots = 0;         // norm-2 vectors of A_1
  std::int64_t norm2_count = 0;      // norm-2 vectors of A
};

/// The odd unimodular overlattice A of u-perp(-1) for norm(u) == 4.
UnimodularData unimodular_from(const LorentzVec& u);

/// How a norm-4 vector of D behaves: 1 when some norm-0 vector has inner
/// product 1 with it (A_1 is a Niemeier lattice), 2 when A has at least 4
/// norm-1 vectors, 3 when A_1 is 24-dimensional and odd, 4 when A has no
/// norm-1 vectors.
struct Norm4Profile {
  UnimodularData lattice;
  int kind = 0;
  std::vector<LorentzVec> z1, z2;      // norm-0 vectors at inner product 1, 2
  std::vector<std::string> neighbors;  // even neighbor types, "2*" when imprimitive; "2*T" for kind 1
};
Norm4Profile neighbors(const LorentzVec& u);

/// Glues q with a rank-one lattice <k> along a cyclic discriminant group of
/// order k, when the glue exists; the result is unimodular.
std::optional<QuadForm> glue_with_rank_one(const QuadForm& q, std::int64_t k);

/// The 26-dimensional unimodular lattice glued from u-perp(-1) and <10>
/// for a norm-10 vector u. Throws when the glue does not exist.
QuadForm rootless26_gram(const LorentzVec& u);

/// Overlattice generated by q and the given dual vectors (rational
/// coordinates in the basis of q); checks integrality.
QuadForm overlattice(const QuadForm& q, const std::vector<RatVec>& glue);

/// Dual quotient: generators in rational coordinates with their orders.
struct DiscriminantGroup {
  std::vector<RatVec> generators;
  std::vector<Int> orders;
};
DiscriminantGroup discriminant_group(const QuadForm& q);

std::string gram_text(const QuadForm& q);

}  // namespace lorentz
