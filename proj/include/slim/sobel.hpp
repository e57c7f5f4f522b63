//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include "slim/array.hpp"
#include "slim/image.hpp"
#include "slim/perf.hpp"

namespace slim {

struct SobelSlimResult {
  Image image;
  EdpReport report;
};

/// Edge detection executed inside the array: per pixel and kernel tap, the
/// compiled carry-save multiplier forms |coefficient| x pixel and a compiled
/// ripple-carry adder accumulates the positive and negative tap groups; the
/// host takes the magnitude of their difference and rescales. Pixels are
/// processed in batches of the array's parallel capacity with a refresh
/// policy tick between batches. Results are bit-exact against
/// sobel_reference on the same input, and the memory plane of the array is
/// left unchanged.
SobelSlimResult sobel_slim(const Image& img4, KernelVariant variant, SlimArray& array,
                           const SlimPerfParams& params, const BusParams& bus);

}  // namespace slim
