#pragma once

#include <stdexcept>
#include <string>

namespace reshard {

enum class Errc {
  // tensor / range algebra
  RangeOutOfBounds,
  RankMismatch,
  ShapeMismatch,
  TilingGap,
  TilingOverlap,
  DtypeMismatch,
  InvalidSplitPoint,
  InvalidTensor,
  // strategy / config
  IndivisibleLayerCount,
  IndivisibleSliceDim,
  DeviceCountMismatch,
  InvalidJobConfig,
  MalformedConfig,
  InconsistentBaseShape,
  CoverageGap,
  UnknownDevice,
  // planning
  CatalogMismatch,
  UnsatisfiableFragment,
  NoSource,
  // store / dataset
  NotFound,
  IndivisibleBatch,
  StepBeyondEpoch,
  IndexOutOfRange,
  InvalidReplicaCount,
  // transport
  MalformedFrame,
  UnknownVerb,
  BadRange,
  ConnectionFailed,
  // executor / recovery
  CheckpointRequired,
  LayoutMismatch,
  IoError,
  // scenario harness
  ScriptError,
};

const char* errc_name(Errc c);

/// Exception carrying a stable error code next to the human message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace reshard
