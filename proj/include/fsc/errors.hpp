#ifndef FSC_ERRORS_HPP
#define FSC_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace fsc {

enum class Errc {
  KindMismatch,
  DimensionMismatch,
  ParseError,
  RangeError,
  DualUndefined,
  ThetaOutOfRange,
  CoefficientsNotHolder,
  EmptyRegion,
  TargetNotInS,
  SetEmpty,
  PlanInfeasible,
  DimsMismatch,
  SupportTooLarge,
  AliasingRisk,
  NotElliptic,
  NotHolder,
  EmptyBand,
  IoError,
  UsageError,
};

const char* errc_name(Errc code);

/// Exception carrying a machine-readable code; ParseError additionally
/// carries the byte offset of the offending input position.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::optional<std::size_t> offset_;
};

[[noreturn]] inline void raise(Errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace fsc

#endif
