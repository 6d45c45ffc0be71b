#ifndef POSMAP_ERROR_HPP
#define POSMAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace posmap {

enum class Errc {
  NonSquare,
  NonFinite,
  DimensionMismatch,
  NotPSD,
  NotProjection,
  NotUnit,
  BadSchmidtRank,
  EmptyGrid,
  ZeroMap,
  InvalidSeed,
  MethodUnavailable,
  NotInFace,
  IdentityViolated,
  BadParams,
  ParseError,
  IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace posmap

#endif
