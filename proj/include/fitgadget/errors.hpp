#pragma once

#include <stdexcept>
#include <string>

namespace fitgadget {

enum class ErrorKind {
  // group ingestion / arithmetic
  NonAssociativeTable,
  NoIdentity,
  MissingInverse,
  ClosureCapExceeded,
  UnknownBuiltin,
  IndexOutOfRange,
  InvalidInput,
  // structure
  NotNormal,
  NotNested,
  NotSolvable,
  LatticeCapExceeded,
  BaerSetNotSubgroup,
  // polynomials
  ArityMismatch,
  GroupMismatch,
  CapExceeded,
  // gadget construction
  FittingLengthTooSmall,
  NoCandidate,
  NonUniqueMaximal,
  CentralizerIsWholeGroup,
  NoWitness,
  LevelOutOfRange,
  ContextNotPrepared,
  // reduction / solving
  WitnessInvalid,
  BudgetExceeded,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociativeTable: return "NonAssociativeTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorKind::BaerSetNotSubgroup: return "BaerSetNotSubgroup";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::FittingLengthTooSmall: return "FittingLengthTooSmall";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::NonUniqueMaximal: return "NonUniqueMaximal";
    case ErrorKind::CentralizerIsWholeGroup: return "CentralizerIsWholeGroup";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::ContextNotPrepared: return "ContextNotPrepared";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace fitgadget
