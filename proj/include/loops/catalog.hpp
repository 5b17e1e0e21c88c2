#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loops/quasigroup.hpp"

namespace loops {

// All normalized Latin squares of order n (first row and column in natural
// order), generated by backtracking in lexicographic order.
std::vector<CanonicalTable> allNormalizedTables(int n);

// Lexicographically least table among all identity-fixing relabelings.
CanonicalTable canonicalFormOf(const CanonicalTable& t);

// Loops of order n up to isomorphism, sorted by canonical form. n <= 6.
std::vector<Quasigroup> enumerateLoops(int n);

struct Catalog {
  std::string name;
  int order = 0;
  std::vector<CanonicalTable> tables;
};

std::vector<std::uint8_t> encodeCatalog(const std::string& name,
                                        const std::vector<CanonicalTable>& tables);
Catalog decodeCatalog(const std::vector<std::uint8_t>& bytes);

// m is 1-based. Known names: "all-loops".
Quasigroup catalogGet(const std::string& name, int n, int m);
int catalogSize(const std::string& name, int n);

}  // namespace loops
