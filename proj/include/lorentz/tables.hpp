#pragma once

// Rows of the orbit tables, and their text forms.

#include <cstdint>
#include <string>
#include <vector>

#include "lorentz/lattices.hpp"
#include "lorentz/orbit.hpp"

namespace lorentz {

struct Norm0Row {
  std::int64_t height = 0;
  char letter = 'x';
  std::string type;
};
std::vector<Norm0Row> norm0_rows();

struct Norm2Row {
  std::string key;
  std::int64_t height = 0;
  bool type1 = false;  // some norm-0 vector has inner product 1 with u
  std::string roots;
  int s = 0;  // maximal number of pairwise orthogonal roots
  std::vector<std::string> ancestry;  // per component "a_1>a", sorted
  LorentzVec rep;
};
Norm2Row norm2_row(const OrbitRecord& r);

struct Norm4Row {
  std::string key;
  std::int64_t height = 0;
  int dim = 0;  // of A_1
  bool even = false;
  std::string roots;
  std::vector<std::string> neighbors;
  int kind = 0;
  std::vector<std::string> ancestry;  // per component "a_1>n2:5", sorted
  LorentzVec rep;
};
Norm4Row norm4_row(const OrbitRecord& r, const Norm4Profile& p);

/// Table letter of a norm-0 label: the type's letter, upper case when the
/// label is "2*..." (twice a primitive vector).
char ancestry_letter(const std::string& norm0_label);

std::string tsv(const std::vector<Norm0Row>& rows);
std::string tsv(const std::vector<Norm2Row>& rows);
std::string tsv(const std::vector<Norm4Row>& rows);
std::string json(const std::vector<Norm0Row>& rows);
std::string json(const std::vector<Norm2Row>& rows);
std::string json(const std::vector<Norm4Row>& rows);

}  // namespace lorentz
