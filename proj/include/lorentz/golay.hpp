#pragma once

// The extended binary Golay code, loaded from a 12x24 generator matrix.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace lorentz {

/// Codewords are 24-bit masks; bit i is coordinate i.
class GolayCode {
public:
  /// Reads 12 rows of 24 whitespace-separated bits and verifies the code.
  static GolayCode from_file(const std::string& path);
  static GolayCode from_rows(const std::vector<std::uint32_t>& rows);

  const std::vector<std::uint32_t>& generator() const { return rows_; }
  const std::vector<std::uint32_t>& words() const { return words_; }
  bool contains(std::uint32_t word) const;
  std::array<std::size_t, 25> weight_distribution() const;
  int min_weight() const;

private:
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> words_;  // sorted
};

}  // namespace lorentz
