#pragma once

// Dynkin diagrams of finite sets of norm -2 roots.
//
// Input is the matrix of inner products between simple roots (diagonal -2,
// off-diagonal 0, 1, or 2 for the two nodes of an affine A_1).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lorentz/exact.hpp"
#include "lorentz/lorentz.hpp"

namespace lorentz {

enum class RootKind { a, d, e };

struct ADEComponent {
  RootKind kind = RootKind::a;
  int rank = 0;  // for affine diagrams, the rank of the spherical type
  bool affine = false;
  std::vector<std::size_t> nodes;   // indices into the input
  std::vector<std::int64_t> marks;  // parallel to nodes
  int coxeter = 0;

  std::string name() const;  // "a_3", "D_4", "e_8"
  /// Roots of the finite root system (rank * coxeter).
  std::int64_t root_count() const { return static_cast<std::int64_t>(rank) * coxeter; }
};

struct RootSystem {
  std::vector<ADEComponent> components;  // canonical order

  /// "a_5^2 d_4 a_3^2"; "None" when empty.
  std::string signature() const;
  int rank() const;
  std::int64_t root_count() const;
  bool empty() const { return components.empty(); }
};

using IpMatrix = std::vector<std::vector<std::int64_t>>;

/// Throws MathError on anything that is not a disjoint union of
/// spherical and affine ADE diagrams.
RootSystem classify_gram(const IpMatrix& ip);
RootSystem classify_roots(const std::vector<LorentzVec>& roots);
/// Simple roots r_mu given by their Leech points.
RootSystem classify_points(const std::vector<LeechVec>& mus);
IpMatrix point_gram(const std::vector<LeechVec>& mus);

/// Sum of marks times nodes. Spherical components only.
LorentzVec highest_root(const ADEComponent& c, const std::vector<LorentzVec>& roots);

/// Highest-root marks for a connected spherical Cartan matrix (positive
/// definite convention, diagonal 2).
std::vector<std::int64_t> highest_root_marks(const IntMat& cartan);
/// Positive integral null vector of a connected affine Cartan matrix.
std::vector<std::int64_t> affine_marks(const IntMat& cartan);
/// All positive roots in simple-root coordinates, spherical only.
std::vector<std::vector<std::int64_t>> positive_roots(const IntMat& cartan);

/// Standard Cartan matrix of a spherical type (node order: a path for a_n;
/// d_n branches at node n-3; e_n branches at node 2 with the short arm last).
IntMat cartan_matrix(RootKind kind, int rank);

/// rho^2 for the Weyl vector rho with (rho, c) = 1 on every simple root c.
Rat weyl_vector_norm(const RootSystem& rs);
Rat weyl_vector_norm(const ADEComponent& c);

int max_orthogonal(const ADEComponent& c);
int max_orthogonal(const RootSystem& rs);

int coxeter_number(RootKind kind, int rank);

/// Component counts of a signature such as "a_5^2 d_4" or "A_11 D_7 E_6";
/// "None" gives no components. Throws on malformed text.
std::map<std::string, int> signature_counts(const std::string& sig);
/// Coxeter number of a component name such as "e_7" or "D_4".
int coxeter_number(const std::string& component);

}  // namespace lorentz
