#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loops/catalog.hpp"
#include "loops/codeloops.hpp"
#include "loops/error.hpp"
#include "loops/identities.hpp"
#include "loops/isomorphism.hpp"
#include "loops/properties.hpp"
#include "loops/quasigroup.hpp"
#include "loops/structure.hpp"
#include "loops/symmetrize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInputError = 2;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

loops::Quasigroup loadTable(const std::string& path) {
  loops::RawTable raw = loops::parseRawTable(readFile(path));
  loops::CanonicalTable t = loops::canonicalize(raw);
  bool loop = t.hasNeutralAt(1);
  return loops::makeQuasigroup(std::move(t), loop ? loops::Kind::loop : loops::Kind::quasigroup);
}

int runInspect(const std::string& path) {
  loops::Quasigroup q = loadTable(path);
  int n = q.order();
  std::cout << "file: " << path << "\n";
  std::cout << "order: " << n << "\n";
  std::cout << "loop: " << (q.isLoop() ? "yes" : "no") << "\n";

  std::vector<std::string> battery;
  for (const auto& id : loops::identityCatalogue()) {
    if (id.loopOnly && !q.isLoop()) continue;
    if (id.arity >= 4 && n > 64) continue;
    battery.push_back(id.id);
  }
  if (n <= 64)
    for (const char* c : {"powerAssociative", "diassociative"}) battery.push_back(c);
  if (q.isLoop() && n <= 64)
    for (const char* c : {"lcc", "rcc", "leftPowerAlternative", "rightPowerAlternative"})
      battery.push_back(c);
  for (const auto& name : battery) loops::propertyPredicate(q, name);
  loops::deduceProperties(q);
  std::cout << "properties:";
  for (const auto& name : loops::propertyNames())
    if (auto v = loops::knownFlag(q, name); v && *v) std::cout << " " << name;
  std::cout << "\n";

  std::cout << "mu: " << loops::muOf(q) << "\n";
  loops::PermGroup mlt = loops::multiplicationGroup(q);
  std::cout << "multiplication group order: " << mlt.order() << "\n";
  if (q.isLoop()) {
    loops::PermGroup inn = loops::innerMappingGroup(q);
    std::cout << "inner mapping group order: " << inn.order()
              << (inn.isAbelian() ? " (abelian)" : " (nonabelian)") << "\n";
    auto sizeOf = [&](loops::CentralKind k) {
      return loops::centralParts(q, k).size();
    };
    std::cout << "left nucleus order: " << sizeOf(loops::CentralKind::leftNucleus) << "\n";
    std::cout << "middle nucleus order: " << sizeOf(loops::CentralKind::middleNucleus) << "\n";
    std::cout << "right nucleus order: " << sizeOf(loops::CentralKind::rightNucleus) << "\n";
    std::cout << "nucleus order: " << sizeOf(loops::CentralKind::nucleus) << "\n";
    std::cout << "center order: " << sizeOf(loops::CentralKind::center) << "\n";
    std::cout << "associator subloop order: "
              << loops::verbalSubloop(q, loops::VerbalKind::associator).order() << "\n";
    std::cout << "derived subloop order: "
              << loops::verbalSubloop(q, loops::VerbalKind::derived).order() << "\n";
    std::cout << "Frattini subloop order: "
              << loops::verbalSubloop(q, loops::VerbalKind::frattini).order() << "\n";
    auto cls = loops::nilpotencyClassOf(q);
    std::cout << "nilpotency class: " << (cls ? std::to_string(*cls) : std::string("none"))
              << "\n";
    loops::Solvability sol = loops::solvabilityOf(q);
    std::cout << "solvable: " << (sol.solvable ? "yes" : "no") << "\n";
    std::cout << "simple: " << (loops::isSimpleLoop(q) ? "yes" : "no") << "\n";
  }

  int exitCode = kExitOk;
  if (q.isLoop() && n == 128) {
    std::cout << "order-128 battery:\n";
    auto report = [&](const std::string& what, bool ok) {
      std::cout << "  " << what << ": " << (ok ? "pass" : "fail") << "\n";
      if (!ok) exitCode = kExitMathFail;
    };
    auto cls = loops::nilpotencyClassOf(q);
    report("nilpotency class 3", cls && *cls == 3);
    report("inner mapping group abelian", loops::innerMappingGroup(q).isAbelian());
    loops::Quasigroup nuc = loops::centralPartSubloop(q, loops::CentralKind::nucleus);
    bool elem2 = true;
    for (int x = 1; x <= nuc.order(); ++x) {
      if (nuc.mul(x, x) != 1) elem2 = false;
      for (int y = 1; y <= nuc.order(); ++y)
        if (nuc.mul(x, y) != nuc.mul(y, x)) elem2 = false;
    }
    report("nucleus elementary abelian of order 16", nuc.order() == 16 && elem2);
    report("left nucleus order 32",
           loops::centralParts(q, loops::CentralKind::leftNucleus).size() == 32);
    report("middle nucleus order 32",
           loops::centralParts(q, loops::CentralKind::middleNucleus).size() == 32);
    report("right nucleus order 16",
           loops::centralParts(q, loops::CentralKind::rightNucleus).size() == 16);
    std::vector<int> center = loops::centralParts(q, loops::CentralKind::center);
    loops::Quasigroup assoc = loops::verbalSubloop(q, loops::VerbalKind::associator);
    std::vector<int> assocRel;
    for (int p : assoc.posInParent()) assocRel.push_back(q.relativePosOf(p));
    std::sort(assocRel.begin(), assocRel.end());
    report("center of order 2 equal to associator subloop",
           center.size() == 2 && center == assocRel);
  }
  return exitCode;
}

int runIso(const std::string& a, const std::string& b) {
  loops::Quasigroup qa = loadTable(a), qb = loadTable(b);
  auto p = loops::isomorphismBetween(qa, qb);
  if (!p) {
    std::cout << "fail: not isomorphic\n";
    return kExitMathFail;
  }
  std::cout << "isomorphic: " << p->cycleString() << "\n";
  return kExitOk;
}

int runIsotopy(const std::string& a, const std::string& b) {
  loops::Quasigroup qa = loadTable(a), qb = loadTable(b);
  auto iso = loops::isotopismBetween(qa, qb);
  if (!iso) {
    std::cout << "fail: not isotopic\n";
    return kExitMathFail;
  }
  std::cout << "isotopic:\n";
  std::cout << "  alpha: " << iso->alpha.cycleString() << "\n";
  std::cout << "  beta:  " << iso->beta.cycleString() << "\n";
  std::cout << "  gamma: " << iso->gamma.cycleString() << "\n";
  return kExitOk;
}

int runEnumerate(int n, const std::string& outPath) {
  std::vector<loops::Quasigroup> all = loops::enumerateLoops(n);
  int nonassoc = 0;
  for (const auto& l : all)
    if (!loops::satisfiesIdentity(l, "associative")) ++nonassoc;
  std::cout << all.size() << " loops (" << nonassoc << " nonassociative)\n";
  if (!outPath.empty()) {
    std::vector<loops::CanonicalTable> tables;
    for (const auto& l : all) tables.push_back(l.table());
    std::vector<std::uint8_t> bytes = loops::encodeCatalog("all-loops", tables);
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + outPath);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    std::cout << "wrote " << bytes.size() << " bytes to " << outPath << "\n";
  }
  return kExitOk;
}

int runCodeloop(const std::string& path, const std::string& outPath) {
  loops::SymplecticCubicSpace space = loops::parseSpace(readFile(path));
  loops::Quasigroup l = loops::codeLoopFromSpace(space);
  std::cout << "order: " << l.order() << "\n";
  std::cout << "moufang: " << (loops::satisfiesIdentity(l, "moufang") ? "yes" : "no") << "\n";
  auto cls = loops::nilpotencyClassOf(l);
  std::cout << "nilpotency class: " << (cls ? std::to_string(*cls) : std::string("none")) << "\n";
  std::cout << "Frattini subloop order: "
            << loops::verbalSubloop(l, loops::VerbalKind::frattini).order() << "\n";
  std::string text = l.table().toText();
  if (outPath.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(outPath);
    if (!out) throw std::runtime_error("cannot write file: " + outPath);
    out << text;
  }
  return kExitOk;
}

int runSymmetrize(const std::string& path, const std::string& subloopSpec, int h) {
  loops::Quasigroup l = loadTable(path);
  std::vector<int> positions;
  std::stringstream ss(subloopSpec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    positions.push_back(std::stoi(tok));
  }
  loops::Quasigroup s = loops::subquasigroup(l, positions, loops::Kind::loop);
  std::set<int> given(positions.begin(), positions.end());
  given.insert(1);
  std::set<int> closed;
  for (int p : s.posInParent()) closed.insert(l.relativePosOf(p));
  if (closed != given)
    throw loops::Error(loops::Errc::NotASubloop, "given positions are not division-closed");
  loops::GreedyResult r = loops::greedySymmetrize(l, s, h);
  std::cout << "initial mu: " << loops::muOf(l) << "\n";
  std::cout << loops::traceToText(r);
  std::cout << "final mu: " << r.mu << "\n";
  std::cout << r.loop.table().toText();
  return kExitOk;
}

int runConvert(const std::string& path, const std::string& as) {
  loops::RawTable raw = loops::parseRawTable(readFile(path));
  loops::CanonicalTable t = loops::canonicalize(raw);
  loops::Quasigroup q = loops::makeQuasigroup(std::move(t), loops::Kind::quasigroup);
  if (as == "loop") {
    loops::Quasigroup l = loops::asLoop(q);
    std::cout << l.table().toText();
  } else if (as == "quasigroup") {
    std::cout << q.table().toText();
  } else {
    throw CLI::ValidationError("--as must be loop or quasigroup");
  }
  return kExitOk;
}

int runCatalog(const std::string& name, int n, int m) {
  loops::Quasigroup l = loops::catalogGet(name, n, m);
  std::cout << l.table().toText();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loopctl: finite quasigroups and loops from Cayley tables"};
  app.require_subcommand(1);

  std::string fileA, fileB, outPath, subloopSpec, asKind = "loop", catName;
  int order = 0, catN = 0, catM = 0, hPos = 0;

  auto* inspect = app.add_subcommand("inspect", "full attribute report for a table file");
  inspect->add_option("file", fileA, "Cayley table file")->required();

  auto* iso = app.add_subcommand("iso", "search for an isomorphism between two tables");
  iso->add_option("a", fileA, "first table")->required();
  iso->add_option("b", fileB, "second table")->required();

  auto* isotopy = app.add_subcommand("isotopy", "search for an isotopism between two loops");
  isotopy->add_option("a", fileA, "first table")->required();
  isotopy->add_option("b", fileB, "second table")->required();

  auto* enumerate = app.add_subcommand("enumerate", "loops of a given order up to isomorphism");
  enumerate->add_option("order", order, "order (at most 6)")->required();
  enumerate->add_option("--out", outPath, "write a catalog file");

  auto* codeloop = app.add_subcommand("codeloop", "build a code loop from a space file");
  codeloop->add_option("space", fileA, "symplectic cubic space file")->required();
  codeloop->add_option("--out", outPath, "write the Cayley table to a file");

  auto* symmetrize = app.add_subcommand("symmetrize", "greedy mu-minimization by block flips");
  symmetrize->add_option("file", fileA, "Cayley table file")->required();
  symmetrize->add_option("--subloop", subloopSpec, "comma-separated subloop positions")
      ->required();
  symmetrize->add_option("--involution", hPos, "central involution position")->required();

  auto* convert = app.add_subcommand("convert", "renumber a quasigroup table");
  convert->add_option("file", fileA, "Cayley table file")->required();
  convert->add_option("--as", asKind, "target kind: loop or quasigroup");

  auto* catalog = app.add_subcommand("catalog", "fetch a stored loop");
  catalog->add_option("name", catName, "catalog name, e.g. all-loops")->required();
  catalog->add_option("order", catN, "loop order")->required();
  catalog->add_option("index", catM, "1-based index")->required();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(inspect)) return runInspect(fileA);
    if (app.got_subcommand(iso)) return runIso(fileA, fileB);
    if (app.got_subcommand(isotopy)) return runIsotopy(fileA, fileB);
    if (app.got_subcommand(enumerate)) return runEnumerate(order, outPath);
    if (app.got_subcommand(codeloop)) return runCodeloop(fileA, outPath);
    if (app.got_subcommand(symmetrize)) return runSymmetrize(fileA, subloopSpec, hPos);
    if (app.got_subcommand(convert)) return runConvert(fileA, asKind);
    if (app.got_subcommand(catalog)) return runCatalog(catName, catN, catM);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  } catch (const loops::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
