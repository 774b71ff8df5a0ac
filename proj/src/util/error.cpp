#include "reshard/error.hpp"

namespace reshard {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::RangeOutOfBounds: return "RangeOutOfBounds";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::TilingGap: return "TilingGap";
    case Errc::TilingOverlap: return "TilingOverlap";
    case Errc::DtypeMismatch: return "DtypeMismatch";
    case Errc::InvalidSplitPoint: return "InvalidSplitPoint";
    case Errc::InvalidTensor: return "InvalidTensor";
    case Errc::IndivisibleLayerCount: return "IndivisibleLayerCount";
    case Errc::IndivisibleSliceDim: return "IndivisibleSliceDim";
    case Errc::DeviceCountMismatch: return "DeviceCountMismatch";
    case Errc::InvalidJobConfig: return "InvalidJobConfig";
    case Errc::MalformedConfig: return "MalformedConfig";
    case Errc::InconsistentBaseShape: return "InconsistentBaseShape";
    case Errc::CoverageGap: return "CoverageGap";
    case Errc::UnknownDevice: return "UnknownDevice";
    case Errc::CatalogMismatch: return "CatalogMismatch";
    case Errc::UnsatisfiableFragment: return "UnsatisfiableFragment";
    case Errc::NoSource: return "NoSource";
    case Errc::NotFound: return "NotFound";
    case Errc::IndivisibleBatch: return "IndivisibleBatch";
    case Errc::StepBeyondEpoch: return "StepBeyondEpoch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InvalidReplicaCount: return "InvalidReplicaCount";
    case Errc::MalformedFrame: return "MalformedFrame";
    case Errc::UnknownVerb: return "UnknownVerb";
    case Errc::BadRange: return "BadRange";
    case Errc::ConnectionFailed: return "ConnectionFailed";
    case Errc::CheckpointRequired: return "CheckpointRequired";
    case Errc::LayoutMismatch: return "LayoutMismatch";
    case Errc::IoError: return "IoError";
    case Errc::ScriptError: return "ScriptError";
  }
  return "UnknownError";
}

}  // namespace reshard
