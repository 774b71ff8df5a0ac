#pragma once

#include <filesystem>
#include <vector>

#include "reshard/tensor/tensor.hpp"

namespace reshard {

/// "PTX1" tensor container: magic `50 54 58 31`, u8 dtype code, u8 rank,
/// rank x u64-LE extents, then the raw little-endian payload. No padding,
/// no checksum.
std::vector<uint8_t> ptx_encode(const Tensor& t);
Tensor ptx_decode(std::span<const uint8_t> bytes);  // throws InvalidTensor

void ptx_write_file(const std::filesystem::path& path, const Tensor& t);
Tensor ptx_read_file(const std::filesystem::path& path);

/// Encoded size without materializing the encoding.
size_t ptx_encoded_size(const Tensor& t);

}  // namespace reshard
