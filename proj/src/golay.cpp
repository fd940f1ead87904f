#include "lorentz/golay.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lorentz {

GolayCode GolayCode::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Golay generator file: " + path);
  std::vector<std::uint32_t> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::uint32_t mask = 0;
    int bit = 0;
    int count = 0;
    while (ls >> bit) {
      if (bit != 0 && bit != 1) throw std::runtime_error("Golay file: entries must be 0/1");
      if (count >= 24) throw std::runtime_error("Golay file: row longer than 24");
      if (bit) mask |= 1u << count;
      ++count;
    }
    if (count == 0) continue;
    if (count != 24) throw std::runtime_error("Golay file: row shorter than 24");
    rows.push_back(mask);
  }
  return from_rows(rows);
}

GolayCode GolayCode::from_rows(const std::vector<std::uint32_t>& rows) {
  if (rows.size() != 12) throw std::runtime_error("Golay code needs 12 generator rows");
  GolayCode code;
  code.rows_ = rows;
  code.words_.reserve(4096);
  for (std::uint32_t k = 0; k < 4096; ++k) {
    std::uint32_t w = 0;
    for (int i = 0; i < 12; ++i)
      if (k >> i & 1u) w ^= rows[static_cast<std::size_t>(i)];
    code.words_.push_back(w);
  }
  std::sort(code.words_.begin(), code.words_.end());
  if (std::adjacent_find(code.words_.begin(), code.words_.end()) != code.words_.end())
    throw std::runtime_error("Golay generator rows are dependent");
  const auto dist = code.weight_distribution();
  for (std::size_t w = 0; w <= 24; ++w) {
    std::size_t expect = 0;
    if (w == 0 || w == 24) expect = 1;
    if (w == 8 || w == 16) expect = 759;
    if (w == 12) expect = 2576;
    if (dist[w] != expect) throw std::runtime_error("Golay code has the wrong weight enumerator");
  }
  return code;
}

bool GolayCode::contains(std::uint32_t word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

std::array<std::size_t, 25> GolayCode::weight_distribution() const {
  std::array<std::size_t, 25> dist{};
  for (std::uint32_t w : words_) ++dist[static_cast<std::size_t>(std::popcount(w))];
  return dist;
}

int GolayCode::min_weight() const {
  int best = 24;
  for (std::uint32_t w : words_)
    if (w != 0) best = std::min(best, std::popcount(w));
  return best;
}

}  // namespace lorentz
