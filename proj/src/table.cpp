#include "loops/table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace loops {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NotLatin: return "NotLatin";
    case Errc::SymbolMismatch: return "SymbolMismatch";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::ForeignElement: return "ForeignElement";
    case Errc::LoopRequired: return "LoopRequired";
    case Errc::NotPowerAssociative: return "NotPowerAssociative";
    case Errc::EmptyGeneratingSet: return "EmptyGeneratingSet";
    case Errc::NotASubloop: return "NotASubloop";
    case Errc::NotClosedUnderTranslations: return "NotClosedUnderTranslations";
    case Errc::CosetsDoNotPartition: return "CosetsDoNotPartition";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::IdentityMoved: return "IdentityMoved";
    case Errc::NotNormal: return "NotNormal";
    case Errc::EmptyList: return "EmptyList";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidSpace: return "InvalidSpace";
    case Errc::ClassNotClosed: return "ClassNotClosed";
    case Errc::NotSmallFrattini: return "NotSmallFrattini";
    case Errc::NotCentral: return "NotCentral";
    case Errc::NotPowerOfTwo: return "NotPowerOfTwo";
    case Errc::EqualBlocks: return "EqualBlocks";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::MixedOrders: return "MixedOrders";
    case Errc::BadMagic: return "BadMagic";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    case Errc::UnknownCatalog: return "UnknownCatalog";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Error";
}

CanonicalTable::CanonicalTable(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  if (static_cast<int>(cells_.size()) != n_ * n_)
    fail(Errc::NonSquare, "cell count does not match order " + std::to_string(n_));
}

CanonicalTable CanonicalTable::fromRows(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<int> cells;
  cells.reserve(n * n);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) fail(Errc::NonSquare, "ragged rows");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return CanonicalTable(n, std::move(cells));
}

bool CanonicalTable::isLatin() const {
  std::vector<char> seen(n_ + 1);
  for (int i = 1; i <= n_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 1; j <= n_; ++j) {
      int v = at(i, j);
      if (v < 1 || v > n_ || seen[v]) return false;
      seen[v] = 1;
    }
  }
  for (int j = 1; j <= n_; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 1; i <= n_; ++i) {
      int v = at(i, j);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool CanonicalTable::isNormalized() const {
  for (int k = 1; k <= n_; ++k)
    if (at(1, k) != k || at(k, 1) != k) return false;
  return true;
}

bool CanonicalTable::hasNeutralAt(int pos) const {
  for (int k = 1; k <= n_; ++k)
    if (at(pos, k) != k || at(k, pos) != k) return false;
  return true;
}

int CanonicalTable::neutralPosition() const {
  for (int e = 1; e <= n_; ++e)
    if (hasNeutralAt(e)) return e;
  return 0;
}

std::vector<std::vector<int>> CanonicalTable::toRows() const {
  std::vector<std::vector<int>> rows(n_);
  for (int i = 1; i <= n_; ++i) {
    rows[i - 1].resize(n_);
    for (int j = 1; j <= n_; ++j) rows[i - 1][j - 1] = at(i, j);
  }
  return rows;
}

std::string CanonicalTable::toText() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

RawTable parseRawTable(std::string_view text) {
  std::vector<int> tokens;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream ls(line);
    int v;
    while (ls >> v) tokens.push_back(v);
    if (!ls.eof()) {
      ls.clear();
      std::string junk;
      if (ls >> junk) fail(Errc::NonSquare, "non-integer token '" + junk + "'");
    }
  }
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(tokens.size()))));
  if (tokens.empty() || n * n != static_cast<int>(tokens.size()))
    fail(Errc::NonSquare, std::to_string(tokens.size()) + " tokens is not a perfect square");

  RawTable t;
  t.rows.resize(n);
  for (int i = 0; i < n; ++i)
    t.rows[i].assign(tokens.begin() + i * n, tokens.begin() + (i + 1) * n);

  // symbol set from row 1; every other row and column must use the same set
  std::vector<int> symbols = t.rows[0];
  std::sort(symbols.begin(), symbols.end());
  if (std::adjacent_find(symbols.begin(), symbols.end()) != symbols.end())
    fail(Errc::NotLatin, "repeated symbol in row 1");
  for (int i = 0; i < n; ++i) {
    std::vector<int> row = t.rows[i];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      fail(Errc::NotLatin, "repeated symbol in row " + std::to_string(i + 1));
    if (row != symbols) fail(Errc::SymbolMismatch, "row " + std::to_string(i + 1) + " uses a different symbol set");
  }
  for (int j = 0; j < n; ++j) {
    std::vector<int> col(n);
    for (int i = 0; i < n; ++i) col[i] = t.rows[i][j];
    std::sort(col.begin(), col.end());
    if (col != symbols) fail(Errc::NotLatin, "column " + std::to_string(j + 1) + " is not a permutation of the symbols");
  }
  t.symbols = std::move(symbols);
  return t;
}

CanonicalTable canonicalize(const RawTable& raw) {
  int n = raw.order();
  std::map<int, int> index;
  for (int i = 0; i < n; ++i) index[raw.symbols[i]] = i + 1;
  std::vector<int> cells(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cells[i * n + j] = index.at(raw.rows[i][j]);
  return CanonicalTable(n, std::move(cells));
}

Normalization normalizeTableFull(const CanonicalTable& t) {
  if (!t.isLatin()) fail(Errc::NotLatin, "normalizeTable requires a Latin table");
  int n = t.order();
  // columns so that row 1 reads 1..n: new column k is the old column with t(1,col)=k
  std::vector<int> colMap(n);
  for (int j = 1; j <= n; ++j) colMap[t.at(1, j) - 1] = j;
  // rows so that column 1 (after the column move) reads 1..n
  std::vector<int> rowMap(n);
  for (int i = 1; i <= n; ++i) rowMap[t.at(i, colMap[0]) - 1] = i;
  std::vector<int> cells(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cells[(i - 1) * n + (j - 1)] = t.at(rowMap[i - 1], colMap[j - 1]);
  Normalization out{CanonicalTable(n, std::move(cells)), std::move(rowMap), std::move(colMap)};
  return out;
}

CanonicalTable normalizeTable(const CanonicalTable& t) { return normalizeTableFull(t).table; }

}  // namespace loops
