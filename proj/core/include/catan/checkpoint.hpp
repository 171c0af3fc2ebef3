#pragma once

#include <string>

#include "catan/network.hpp"

namespace catanrl {

// Checkpoint file layout (all integers little-endian):
//   magic "XDIMCKPT", u32 format version,
//   config: u8 arch, i32 layers, i32 channels, i32 scalars,
//           i32 baseline_channels, f64 leaky_slope, u8 compat117,
//   u32 tensor count, then per tensor:
//     u32 name length, UTF-8 name bytes, u32 rank, u32 dims[rank],
//     f32 values row-major.
// Round-trips are bit-exact.
void save_checkpoint(const NetworkParams& params, const std::string& path);
NetworkParams load_checkpoint(const std::string& path);

} // namespace catanrl
