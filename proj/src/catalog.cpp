#include "loops/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "loops/error.hpp"

namespace loops {

namespace {

constexpr char kMagic[] = "LOOPCAT1";  // 8 bytes, no terminator stored

void generateRows(int n, std::vector<std::vector<int>>& rows, std::vector<CanonicalTable>& out) {
  int r = static_cast<int>(rows.size());
  if (r == n) {
    CanonicalTable t(n, [&] {
      std::vector<int> cells(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells[i * n + j] = rows[i][j];
      return cells;
    }());
    out.push_back(std::move(t));
    return;
  }
  // next row starts with r+1 (normalized first column)
  std::vector<int> row(n, 0);
  row[0] = r + 1;
  auto fill = [&](auto&& self, int c) -> void {
    if (c == n) {
      rows.push_back(row);
      generateRows(n, rows, out);
      rows.pop_back();
      return;
    }
    for (int v = 1; v <= n; ++v) {
      bool ok = std::find(row.begin(), row.begin() + c, v) == row.begin() + c;
      for (int i = 0; ok && i < r; ++i)
        if (rows[i][c] == v) ok = false;
      if (!ok) continue;
      row[c] = v;
      self(self, c + 1);
      row[c] = 0;
    }
  };
  fill(fill, 1);
}

}  // namespace

std::vector<CanonicalTable> allNormalizedTables(int n) {
  if (n < 1) fail(Errc::OrderTooLarge, "order must be positive");
  std::vector<std::vector<int>> rows;
  std::vector<int> first(n);
  for (int j = 0; j < n; ++j) first[j] = j + 1;
  rows.push_back(std::move(first));
  std::vector<CanonicalTable> out;
  generateRows(n, rows, out);
  return out;
}

CanonicalTable canonicalFormOf(const CanonicalTable& t) {
  int n = t.order();
  std::vector<int> perm(n + 1);  // perm[i] = image of i, perm[1] = 1
  for (int i = 0; i <= n; ++i) perm[i] = i;
  CanonicalTable best = t;
  bool first = true;
  do {
    CanonicalTable cand(n, std::vector<int>(n * n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) cand.set(perm[i], perm[j], perm[t.at(i, j)]);
    if (first || cand < best) best = std::move(cand);
    first = false;
  } while (std::next_permutation(perm.begin() + 2, perm.end()));
  return best;
}

std::vector<Quasigroup> enumerateLoops(int n) {
  if (n > 6) fail(Errc::OrderTooLarge, "enumeration is supported through order 6");
  static std::mutex mu;
  static std::map<int, std::vector<CanonicalTable>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::set<CanonicalTable> reps;
    for (const CanonicalTable& t : allNormalizedTables(n)) reps.insert(canonicalFormOf(t));
    it = cache.emplace(n, std::vector<CanonicalTable>(reps.begin(), reps.end())).first;
  }
  std::vector<Quasigroup> out;
  for (const CanonicalTable& t : it->second) out.push_back(makeQuasigroup(t, Kind::loop));
  return out;
}

std::vector<std::uint8_t> encodeCatalog(const std::string& name,
                                        const std::vector<CanonicalTable>& tables) {
  if (tables.empty()) fail(Errc::EmptyList, "cannot encode an empty catalog");
  int order = tables.front().order();
  for (const auto& t : tables)
    if (t.order() != order) fail(Errc::MixedOrders, "catalog tables must share one order");
  if (order > 255) fail(Errc::OrderTooLarge, "catalog orders are limited to 255");
  if (name.size() > 255) fail(Errc::OrderTooLarge, "catalog name too long");

  std::vector<std::uint8_t> out(kMagic, kMagic + 8);
  out.push_back(static_cast<std::uint8_t>(name.size()));
  out.insert(out.end(), name.begin(), name.end());
  out.push_back(static_cast<std::uint8_t>(order));
  std::uint32_t count = static_cast<std::uint32_t>(tables.size());
  for (int sh = 24; sh >= 0; sh -= 8) out.push_back((count >> sh) & 0xff);

  int cellCount = order * order;
  std::vector<int> prev;
  for (const auto& t : tables) {
    std::vector<int> cells(cellCount);
    for (int i = 1; i <= order; ++i)
      for (int j = 1; j <= order; ++j) cells[(i - 1) * order + (j - 1)] = t.at(i, j);
    int shared = 0;
    if (!prev.empty())
      while (shared < cellCount && cells[shared] == prev[shared]) ++shared;
    out.push_back((shared >> 8) & 0xff);
    out.push_back(shared & 0xff);
    for (int k = shared; k < cellCount; ++k) out.push_back(static_cast<std::uint8_t>(cells[k]));
    prev = std::move(cells);
  }
  return out;
}

Catalog decodeCatalog(const std::vector<std::uint8_t>& bytes) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > bytes.size()) fail(Errc::TruncatedPayload, "catalog payload ends early");
  };
  need(8);
  if (!std::equal(kMagic, kMagic + 8, bytes.begin())) fail(Errc::BadMagic, "bad catalog magic");
  pos = 8;
  need(1);
  std::size_t nameLen = bytes[pos++];
  need(nameLen);
  Catalog cat;
  cat.name.assign(bytes.begin() + pos, bytes.begin() + pos + nameLen);
  pos += nameLen;
  need(1);
  cat.order = bytes[pos++];
  if (cat.order < 1) fail(Errc::TruncatedPayload, "catalog order must be positive");
  need(4);
  std::uint32_t count = 0;
  for (int t = 0; t < 4; ++t) count = (count << 8) | bytes[pos++];

  int cellCount = cat.order * cat.order;
  std::vector<int> prev;
  for (std::uint32_t idx = 0; idx < count; ++idx) {
    need(2);
    int shared = (bytes[pos] << 8) | bytes[pos + 1];
    pos += 2;
    if (shared > cellCount || (prev.empty() && shared != 0))
      fail(Errc::TruncatedPayload, "invalid shared prefix length");
    std::vector<int> cells(cellCount);
    std::copy(prev.begin(), prev.begin() + shared, cells.begin());
    need(cellCount - shared);
    for (int k = shared; k < cellCount; ++k) {
      int v = bytes[pos++];
      if (v < 1 || v > cat.order) fail(Errc::TruncatedPayload, "cell value out of range");
      cells[k] = v;
    }
    cat.tables.emplace_back(cat.order, cells);
    prev = std::move(cells);
  }
  if (pos != bytes.size()) fail(Errc::TruncatedPayload, "trailing bytes after catalog payload");
  return cat;
}

int catalogSize(const std::string& name, int n) {
  if (name != "all-loops") fail(Errc::UnknownCatalog, name);
  return static_cast<int>(enumerateLoops(n).size());
}

Quasigroup catalogGet(const std::string& name, int n, int m) {
  if (name != "all-loops") fail(Errc::UnknownCatalog, name);
  std::vector<Quasigroup> loops = enumerateLoops(n);
  if (m < 1 || m > static_cast<int>(loops.size()))
    fail(Errc::IndexOutOfRange, "catalog index " + std::to_string(m));
  return loops[m - 1];
}

}  // namespace loops
