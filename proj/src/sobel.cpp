//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/sobel.hpp"

#include <algorithm>
#include <cstdlib>

#include "slim/errors.hpp"
#include "slim/schedule.hpp"

namespace slim {

namespace {

constexpr int kOperandBits = 4;
// Tap products reach 2 x 15 and group sums 4 x 15; eight bits cover the
// accumulation exactly.
constexpr int kAccumBits = 8;

std::vector<int> to_bits(unsigned value, int width) {
  std::vector<int> bits(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) bits[static_cast<std::size_t>(i)] = (value >> i) & 1u;
  return bits;
}

unsigned from_bits(std::span<const int> bits, int width) {
  unsigned value = 0;
  for (int i = 0; i < width; ++i) value |= static_cast<unsigned>(bits[static_cast<std::size_t>(i)] & 1) << i;
  return value;
}

class TapEngine {
 public:
  TapEngine(SlimArray& array, const ArrayGeometry& geom)
      : array_(array),
        mul_(make_schedule(build_csa_multiplier(kOperandBits), geom)),
        add_(make_schedule(build_ripple_adder(kAccumBits), geom)) {}

  unsigned multiply(unsigned a, unsigned b) {
    std::vector<int> in = to_bits(a, kOperandBits);
    const std::vector<int> bb = to_bits(b, kOperandBits);
    in.insert(in.end(), bb.begin(), bb.end());
    return from_bits(execute(mul_, array_, in), 2 * kOperandBits);
  }

  unsigned add(unsigned a, unsigned b) {
    std::vector<int> in = to_bits(a, kAccumBits);
    const std::vector<int> bb = to_bits(b, kAccumBits);
    in.insert(in.end(), bb.begin(), bb.end());
    // The carry-out stays 0 for in-range accumulations.
    return from_bits(execute(add_, array_, in), kAccumBits);
  }

 private:
  SlimArray& array_;
  Schedule mul_;
  Schedule add_;
};

// Convolves one pixel: every tap costs one multiply and one accumulate into
// its sign group, all executed on the array.
int tap_response(TapEngine& engine, const Image& img, const std::array<int, 9>& coeff, int x,
                 int y) {
  unsigned pos = 0;
  unsigned neg = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const int k = coeff[static_cast<std::size_t>((dy + 1) * 3 + (dx + 1))];
      const unsigned p = static_cast<unsigned>(img.padded(x + dx, y + dy));
      const unsigned prod = engine.multiply(static_cast<unsigned>(std::abs(k)), p);
      if (k < 0) {
        neg = engine.add(neg, prod);
      } else {
        pos = engine.add(pos, prod);
      }
    }
  }
  return std::abs(static_cast<int>(pos) - static_cast<int>(neg));
}

}  // namespace

SobelSlimResult sobel_slim(const Image& img4, KernelVariant variant, SlimArray& array,
                           const SlimPerfParams& params, const BusParams& bus) {
  img4.validate();
  params.validate();
  if (img4.maxval != 15) throw IoError("sobel_slim: expected a 4-bit quantized image");
  if (img4.width < 3 || img4.height < 3) throw IoError("sobel_slim: image must be at least 3x3");

  TapEngine engine(array, params.geometry);
  const SobelKernel gx = SobelKernel::make(KernelVariant::Gx);
  const SobelKernel gy = SobelKernel::make(KernelVariant::Gy);
  const bool both = variant == KernelVariant::Both;
  const SobelKernel& single = variant == KernelVariant::Gy ? gy : gx;
  const int divisor = both ? gx.positive_sum() + gy.positive_sum() : single.positive_sum();

  const auto batch = static_cast<std::int64_t>(
      parallel_capacity(params.geometry, kOperandBits, params.pipeline_depth));

  Image out = Image::filled(img4.width, img4.height, 0, img4.maxval);
  std::int64_t in_batch = 0;
  for (int y = 0; y < img4.height; ++y) {
    for (int x = 0; x < img4.width; ++x) {
      int raw = 0;
      if (both) {
        raw = tap_response(engine, img4, gx.coeff, x, y) +
              tap_response(engine, img4, gy.coeff, x, y);
      } else {
        raw = tap_response(engine, img4, single.coeff, x, y);
      }
      out.at(x, y) = std::min(raw / divisor, img4.maxval);
      if (++in_batch == batch) {
        in_batch = 0;
        array.refresh_policy_tick();
      }
    }
  }
  array.refresh_policy_tick();

  SobelWorkload workload;
  workload.op_count = static_cast<std::uint64_t>(img4.width) * static_cast<std::uint64_t>(img4.height);
  workload.muls_per_op = both ? 18 : 9;
  workload.adds_per_op = both ? 18 : 9;
  workload.operand_bits = kOperandBits;

  SobelSlimResult result;
  result.image = std::move(out);
  result.report = slim_workload_edp(workload, params, bus);
  return result;
}

}  // namespace slim
