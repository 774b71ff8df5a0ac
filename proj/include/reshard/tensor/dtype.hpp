#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace reshard {

/// Element types with fixed on-disk/wire codes. Payloads are opaque bytes;
/// only the width matters to the engine.
enum class Dtype : uint8_t {
  F32 = 0,
  F16 = 1,
  I64 = 2,
  U8 = 3,
};

constexpr size_t dtype_width(Dtype d) {
  switch (d) {
    case Dtype::F32: return 4;
    case Dtype::F16: return 2;
    case Dtype::I64: return 8;
    case Dtype::U8: return 1;
  }
  return 0;
}

const char* dtype_name(Dtype d);
Dtype dtype_from_name(std::string_view name);   // throws MalformedConfig
Dtype dtype_from_code(uint8_t code);            // throws InvalidTensor

}  // namespace reshard
