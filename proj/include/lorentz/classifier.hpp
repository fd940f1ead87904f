#pragma once

// Orbits of norm 2 and norm 4 vectors of D.
//
// A norm 2n vector u of D with roots is v + theta for a norm 2n-2 vector v
// of D and the highest root theta of a connected spherical set C of simple
// roots near v: an a_1 in R_2(v), an a_n with both ends in R_1(v) and the
// rest in R_0(v), or a d_n / e_n whose node next to the extending node is
// in R_1(v) and the rest in R_0(v). A rootless u is w + v with v in D.
// When u - theta leaves D for every component (the norm-4 vectors whose
// A_1 is an even Niemeier lattice with roots), u is v + z instead, with
// v of norm 2 and z of norm 0, (v, z) = 1.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lorentz/norm0.hpp"
#include "lorentz/orbit.hpp"

namespace lorentz {

struct Candidate {
  LorentzVec u;
  std::string component;  // the diagram of C, "a_3"
  int coxeter = 0;        // of C; height(u) = height(v) + coxeter - 1
};

struct SuccessorStats {
  std::size_t raw = 0;         // candidates enumerated
  std::size_t emitted = 0;     // after merging under sampled symmetries
  std::size_t generators = 0;  // stabilizer elements used for v
  std::size_t r1_reps = 0;     // R_1(v) orbit representatives handled
};

/// Successors of v with the pattern check done on every candidate. With an
/// rng, candidates are merged under sampled stabilizer elements and only
/// R_1 nodes up to symmetry start a diagram, so the result holds every
/// orbit at least once but may hold an orbit more than once.
std::vector<Candidate> successors(const LorentzVec& v, std::mt19937_64* rng = nullptr,
                                  SuccessorStats* stats = nullptr);

/// Whether C (Leech points of simple roots near v) satisfies the successor
/// pattern; on success gives the highest root.
std::optional<LorentzVec> successor_root(const LorentzVec& v, const std::vector<LeechVec>& c);

struct Parent {
  std::string key;  // "n0:A_1^24", "n0:2*Leech", "n2:17"
  LorentzVec v;
};

/// The norm-0 vectors that have norm-2 successors: w, 2w, z and 2z.
std::vector<Parent> norm0_parents();

/// u = w + v over the given lower vectors with norm(v) + 2 height(v) == n.
/// The key of each result is that of its v.
std::vector<Parent> rootless_successors(std::int64_t n, const std::vector<Parent>& lower);

/// reduce(v + z) for each lower v of norm n - 2 > 0 and each norm-0 z with
/// (v, z) = 1. The key of each result is that of its v.
std::vector<Parent> norm0_sums(std::int64_t n, const std::vector<Parent>& lower);

/// Resolves norm-2 vectors of D to orbit keys of a finished (complete)
/// store. When (height, roots, |R_1|, |R_2|) names a single orbit that
/// orbit is returned; otherwise the full fingerprint and exact test decide.
class Norm2Resolver {
public:
  explicit Norm2Resolver(OrbitStore& store);
  std::string operator()(const LorentzVec& v);

private:
  OrbitStore& store_;
  std::map<LorentzVec, std::string> cache_;
  std::map<std::string, std::vector<std::size_t>> by_key_;
};

struct ClassifyOptions {
  std::string journal;  // resumable log; empty for none
  std::uint64_t seed = 1;
  std::function<void(const std::string&)> log;
};

/// Runs the successor construction from the norm-0 orbits.
OrbitStore classify_norm2(const ClassifyOptions& opts = {});
/// Runs it from a finished norm-2 store (keys as assigned by finalize).
OrbitStore classify_norm4(OrbitStore& norm2, const ClassifyOptions& opts = {});

/// Orbit databases under dir ("norm2.jsonl", "norm4.jsonl"), built and
/// saved when missing. Throws when the result has an unexpected count and
/// check_counts is set. norm2 is required for norm 4.
OrbitStore load_or_classify(std::int64_t norm, const std::string& dir, OrbitStore* norm2,
                            const ClassifyOptions& opts, bool check_counts = true);

inline constexpr std::size_t kNorm2Orbits = 121;
inline constexpr std::size_t kNorm4Orbits = 665;

}  // namespace lorentz
