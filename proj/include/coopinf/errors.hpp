#pragma once

#include <stdexcept>
#include <string>

namespace coopinf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct NegativeEntry : Error {
  using Error::Error;
};
struct ZeroRow : Error {
  using Error::Error;
};
struct ZeroColumn : Error {
  using Error::Error;
};
struct NotSquare : Error {
  using Error::Error;
};
struct NoPositiveDiagonal : Error {
  using Error::Error;
};
struct LimitExceeded : Error {
  LimitExceeded(const std::string& what, std::size_t found_so_far)
      : Error(what), found(found_so_far) {}
  std::size_t found;
};
struct NotDoublyStochastic : Error {
  using Error::Error;
};
struct NoPerfectMatching : Error {
  using Error::Error;
};
struct NoTotalSupport : Error {
  using Error::Error;
};
struct InconsistentFactors : Error {
  using Error::Error;
};
struct MassImbalance : Error {
  using Error::Error;
};
struct AllForbiddenRow : Error {
  using Error::Error;
};
struct AllForbiddenColumn : Error {
  using Error::Error;
};
struct NegativeResult : Error {
  using Error::Error;
};
struct DegenerateResult : Error {
  using Error::Error;
};
struct WrongPattern : Error {
  using Error::Error;
};
struct LimitMismatch : Error {
  using Error::Error;
};

}  // namespace coopinf
