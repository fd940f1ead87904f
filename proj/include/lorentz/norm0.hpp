#pragma once

// Norm-0 vectors of II(1,25): Niemeier types and the 24 orbit
// representatives in D.

#include <map>
#include <string>
#include <vector>

#include "lorentz/lorentz.hpp"
#include "lorentz/rootsys.hpp"

namespace lorentz {

inline const std::string kLeechType = "Leech";

struct NormZeroRep {
  std::string type;  // affine signature such as "A_5^4 D_4", or "Leech"
  char letter = 'x';
  int coxeter_h = 0;
  LorentzVec z;  // primitive, in D, height coxeter_h
};

struct Norm0Class {
  std::string type;
  char letter = 'x';
  std::int64_t multiplicity = 1;  // x = multiplicity * primitive
  LorentzVec reduced;             // primitive representative in D
};

/// Letter used in table ancestry columns: the first of a, d, e present in
/// the affine diagram, or x for the Leech type.
char type_letter(const RootSystem& affine);

/// Reduces a norm-0 vector of the positive cone and names its type.
Norm0Class classify_norm0(const LorentzVec& x);

/// Type of a primitive norm-0 vector already in D.
RootSystem norm0_diagram(const LorentzVec& z);

/// Builds the representative from a hole center num/den (scaled frame)
/// of denominator dividing h, checking every invariant. Throws on failure.
NormZeroRep rep_from_center(const std::string& type, int coxeter_h, const ScaledCenter& center);

/// The 24 representatives: w plus the bundled deep holes, verified on load.
const std::vector<NormZeroRep>& norm0_orbits();
std::vector<NormZeroRep> load_norm0_orbits(const std::string& path);

/// Looks up a representative by type label; throws if unknown.
const NormZeroRep& norm0_rep(const std::string& type);

}  // namespace lorentz
