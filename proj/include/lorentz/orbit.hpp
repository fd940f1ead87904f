#pragma once

// Aut(D)-orbits of vectors in D.
//
// An automorphism of D fixing u acts on the Leech lattice as an affine
// isometry fixing lam/a, so equivalence of u and u' is decided by matching
// the marked point sets {mu : (u, r_mu) <= k}.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lorentz/lorentz.hpp"

namespace lorentz {

/// Leech points of simple roots with (u, r) <= k, labelled by (u, r).
struct MarkedSet {
  std::vector<LeechVec> points;
  std::vector<int> level;
  ScaledCenter center;
};
MarkedSet marked_set(const LorentzVec& u, int k);

/// x -> x M + t in Leech basis coordinates.
struct LeechIsometry {
  std::vector<std::int64_t> m;  // 24 x 24, row-major
  std::vector<std::int64_t> t;  // 24

  LeechVec apply(const LeechVec& x) const;
  /// The automorphism of D fixing w with this action on centers; a >= 1.
  LorentzVec apply(const LorentzVec& u) const;
  static LeechIsometry identity();
};

struct IsometrySearch {
  std::optional<LeechIsometry> map;
  bool complete = true;  // false when the node budget ran out
  std::uint64_t nodes = 0;
  std::size_t max_depth = 0;
  std::size_t base_size = 0;
};

struct SearchOptions {
  std::uint64_t node_budget = 20'000'000;
  std::mt19937_64* rng = nullptr;  // random candidate order when set
  std::size_t random_depth = 1;    // ... at this many top levels
  bool skip_identity = false;      // reject the identity map (from == to)
};

/// Affine isometry of the Leech lattice carrying `from` onto `to` with
/// levels and centers matched. Requires `from` to span affinely.
IsometrySearch find_isometry(const MarkedSet& from, const MarkedSet& to, const SearchOptions& opts = {});

/// Dimension of the affine span of the points.
int affine_rank(const std::vector<LeechVec>& pts);

enum class Verdict { no, yes, undecided };
std::string to_string(Verdict v);

struct Equivalence {
  Verdict verdict = Verdict::undecided;
  int k_used = 0;
  std::optional<LeechIsometry> map;
};

/// Whether some automorphism of D maps u to u2; both in D of height >= 1.
Equivalence equivalent(const LorentzVec& u, const LorentzVec& u2, int k_max = 6);

/// Random automorphisms of D fixing u (identity excluded), for orbit
/// splitting of candidate sets. May return fewer than asked.
std::vector<LeechIsometry> random_stabilizer(const LorentzVec& u, std::size_t count, std::mt19937_64& rng);
/// Same for a marked set; individualized points get levels of their own.
std::vector<LeechIsometry> random_stabilizer(const MarkedSet& p, std::size_t count, std::mt19937_64& rng);

/// marked_set(u, k) for the least k >= 2 whose points span affinely, or an
/// empty set when no k <= k_max does.
MarkedSet spanning_marked_set(const LorentzVec& u, int k_max = 6);

/// Label of an orbit of a lower norm, used inside fingerprints.
using OrbitResolver = std::function<std::string(const LorentzVec& reduced)>;

/// Orbit label of a norm-0 vector: its type, prefixed "2*" etc. when
/// imprimitive.
std::string norm0_label(const LorentzVec& x);

struct Fingerprint {
  std::int64_t norm = 0;
  std::int64_t height = 0;
  std::string roots;  // signature of R_0
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::vector<std::string> targets;  // per R_0 component: "h:orbit", sorted
  std::vector<std::string> z1;       // norm0 labels at inner product 1, sorted
  std::vector<std::string> z2;       // ... at inner product 2

  std::string serialize() const;
  bool operator==(const Fingerprint&) const = default;
};

/// resolver is consulted for reduction targets of norm >= 2.
Fingerprint fingerprint(const LorentzVec& u, const OrbitResolver& resolver = {});

struct ParentLink {
  std::string orbit;      // parent orbit key
  std::string component;  // e.g. "a_3", or "w" for rootless successors
};

struct OrbitRecord {
  std::string key;  // "n2:17"
  std::int64_t norm = 0;
  LorentzVec rep;
  Fingerprint fp;
  std::vector<ParentLink> parents;
};

/// Orbits of one norm, deduplicated by fingerprint and then by exact test.
class OrbitStore {
public:
  explicit OrbitStore(std::int64_t norm) : norm_(norm) {}

  struct Insert {
    std::size_t index = 0;
    bool fresh = false;
  };
  /// Throws MathError when an exact test is undecided.
  Insert insert_or_find(const LorentzVec& u, const Fingerprint& fp, const ParentLink& link);
  /// Index of the orbit of u (fingerprint computed by the caller), or
  /// nothing. Throws on undecided.
  std::optional<std::size_t> find(const LorentzVec& u, const Fingerprint& fp);

  std::int64_t norm() const { return norm_; }
  std::size_t size() const { return records_.size(); }
  const OrbitRecord& at(std::size_t i) const { return records_.at(i); }
  const std::vector<OrbitRecord>& records() const { return records_; }

  /// Sorts by (height, roots, fingerprint) and renumbers the keys.
  void finalize();

  std::size_t exact_tests() const { return exact_tests_; }
  int max_k_used() const { return max_k_; }
  std::size_t undecided() const { return undecided_; }

  /// JSON-lines file with a format header. load() verifies every record.
  void save(const std::string& path) const;
  static OrbitStore load(const std::string& path, std::int64_t norm);

  /// Appends one record line (used while a run is in progress).
  static void append_record(const std::string& path, const OrbitRecord& r);

  void add_record(OrbitRecord r);

private:
  std::optional<std::size_t> match(const LorentzVec& u, const std::string& fp_text);

  std::int64_t norm_;
  std::vector<OrbitRecord> records_;
  std::multimap<std::string, std::size_t> buckets_;
  std::size_t exact_tests_ = 0;
  std::size_t undecided_ = 0;
  int max_k_ = 0;
};

inline constexpr const char* kDbFormat = "lorentz-orbits/1";

std::string record_to_json(const OrbitRecord& r);
OrbitRecord record_from_json(const std::string& line);

}  // namespace lorentz
