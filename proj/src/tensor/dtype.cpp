#include "reshard/tensor/dtype.hpp"

#include "reshard/error.hpp"

namespace reshard {

const char* dtype_name(Dtype d) {
  switch (d) {
    case Dtype::F32: return "f32";
    case Dtype::F16: return "f16";
    case Dtype::I64: return "i64";
    case Dtype::U8: return "u8";
  }
  return "?";
}

Dtype dtype_from_name(std::string_view name) {
  if (name == "f32" || name == "F32") return Dtype::F32;
  if (name == "f16" || name == "F16") return Dtype::F16;
  if (name == "i64" || name == "I64") return Dtype::I64;
  if (name == "u8" || name == "U8") return Dtype::U8;
  raise(Errc::MalformedConfig, "unknown dtype '" + std::string(name) + "'");
}

Dtype dtype_from_code(uint8_t code) {
  if (code > 3) raise(Errc::InvalidTensor, "unknown dtype code " + std::to_string(code));
  return static_cast<Dtype>(code);
}

}  // namespace reshard
