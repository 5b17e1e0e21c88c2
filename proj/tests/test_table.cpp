#include "doctest.h"
#include "loops/table.hpp"

using namespace loops;

TEST_CASE("parseRawTable accepts whitespace, commas and comments") {
  RawTable t = parseRawTable("# cyclic group of order 3\n1, 2, 3\n2 3 1\n3 1 2\n");
  CHECK(t.order() == 3);
  CHECK(t.symbols == std::vector<int>{1, 2, 3});
  CHECK(t.rows[1] == std::vector<int>{2, 3, 1});
}

TEST_CASE("parseRawTable ignores line breaks and fills row-major") {
  RawTable t = parseRawTable("5 7\n7\n5");
  CHECK(t.order() == 2);
  CHECK(t.symbols == std::vector<int>{5, 7});
  CHECK(t.rows[0] == std::vector<int>{5, 7});
  CHECK(t.rows[1] == std::vector<int>{7, 5});
}

TEST_CASE("parseRawTable rejects bad input") {
  try {
    parseRawTable("1 2 3");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonSquare);
  }
  // in-row duplicate: NotLatin
  try {
    parseRawTable("1 1\n2 2");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatin);
  }
  // rows over different symbol sets
  try {
    parseRawTable("1 2\n3 4");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SymbolMismatch);
  }
  // column duplicate
  try {
    parseRawTable("1 2\n1 2");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatin);
  }
}

TEST_CASE("canonicalize relabels arbitrary ascending symbols to 1..n") {
  RawTable raw = parseRawTable("10 20 30\n20 30 10\n30 10 20");
  CanonicalTable t = canonicalize(raw);
  CHECK(t.order() == 3);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.at(2, 2) == 3);
  CHECK(t.isLatin());
  CHECK(t.isNormalized());
}

TEST_CASE("neutral detection") {
  CanonicalTable z3 = CanonicalTable::fromRows({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  CHECK(z3.hasNeutralAt(1));
  CHECK(z3.neutralPosition() == 1);
  // neutral in the middle
  CanonicalTable t = CanonicalTable::fromRows({{3, 1, 2}, {1, 2, 3}, {2, 3, 1}});
  CHECK(t.neutralPosition() == 2);
  CHECK_FALSE(t.isNormalized());
  // no neutral at all
  CanonicalTable s = CanonicalTable::fromRows({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}});
  CHECK(s.neutralPosition() == 0);
}

TEST_CASE("normalizeTableFull produces a normalized isotope and records the maps") {
  CanonicalTable t = CanonicalTable::fromRows({{2, 3, 1}, {3, 1, 2}, {1, 2, 3}});
  Normalization n = normalizeTableFull(t);
  CHECK(n.table.isNormalized());
  CHECK(n.table.isLatin());
  // the new table reads old cells through the row/column maps
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) CHECK(n.table.at(i, j) == t.at(n.rowMap[i - 1], n.colMap[j - 1]));
}

TEST_CASE("toText round-trips through the parser") {
  CanonicalTable t = CanonicalTable::fromRows({{1, 2}, {2, 1}});
  RawTable back = parseRawTable(t.toText());
  CHECK(canonicalize(back) == t);
}
