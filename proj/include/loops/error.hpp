#pragma once

#include <stdexcept>
#include <string>

namespace loops {

enum class Errc {
  // tables and parsing
  NonSquare,
  NotLatin,
  SymbolMismatch,
  NotNormalized,
  // elements and subobjects
  ForeignElement,
  LoopRequired,
  NotPowerAssociative,
  EmptyGeneratingSet,
  NotASubloop,
  NotClosedUnderTranslations,
  CosetsDoNotPartition,
  DegreeMismatch,
  IdentityMoved,
  NotNormal,
  EmptyList,
  // permutation groups
  PointOutOfRange,
  NotTransitive,
  // properties
  UnknownIdentity,
  UnknownProperty,
  // code loops
  DimensionMismatch,
  InvalidSpace,
  ClassNotClosed,
  NotSmallFrattini,
  NotCentral,
  NotPowerOfTwo,
  // symmetrize
  EqualBlocks,
  PreconditionFailed,
  // catalogs
  OrderTooLarge,
  MixedOrders,
  BadMagic,
  TruncatedPayload,
  UnknownCatalog,
  IndexOutOfRange,
};

const char* errcName(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace loops
