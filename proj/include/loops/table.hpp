#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "loops/error.hpp"

namespace loops {

// Latin square over an arbitrary ascending integer symbol set.
struct RawTable {
  std::vector<int> symbols;             // x_1 < ... < x_n
  std::vector<std::vector<int>> rows;   // n rows of n symbols

  int order() const { return static_cast<int>(symbols.size()); }
};

// Latin square over {1..n}. Positions and entries are 1-based throughout.
class CanonicalTable {
public:
  CanonicalTable() = default;
  CanonicalTable(int n, std::vector<int> cells);
  static CanonicalTable fromRows(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  int at(int row, int col) const { return cells_[(row - 1) * n_ + (col - 1)]; }
  void set(int row, int col, int value) { cells_[(row - 1) * n_ + (col - 1)] = value; }
  const std::vector<int>& cells() const { return cells_; }

  bool isLatin() const;
  // Row 1 and column 1 both read 1..n.
  bool isNormalized() const;
  bool hasNeutralAt(int pos) const;
  // Position of a two-sided neutral element, or 0 if none.
  int neutralPosition() const;

  std::vector<std::vector<int>> toRows() const;
  std::string toText() const;

  bool operator==(const CanonicalTable&) const = default;
  // Row-major lexicographic order; used for canonical forms and catalogs.
  bool operator<(const CanonicalTable& other) const { return cells_ < other.cells_; }

private:
  int n_ = 0;
  std::vector<int> cells_;
};

// Relaxed parsing: whitespace/comma separated integers, '#' starts a comment line,
// row-major fill regardless of line breaks.
RawTable parseRawTable(std::string_view text);

// Relabel symbols x_i -> i.
CanonicalTable canonicalize(const RawTable& raw);

struct Normalization {
  CanonicalTable table;
  std::vector<int> rowMap;  // new row i came from old row rowMap[i-1]
  std::vector<int> colMap;  // new column j came from old column colMap[j-1]
};

// Column-permute so row 1 reads 1..n, then row-permute so column 1 reads 1..n.
Normalization normalizeTableFull(const CanonicalTable& t);
CanonicalTable normalizeTable(const CanonicalTable& t);

}  // namespace loops
