//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slim {

/// Grayscale raster. maxval 255 for 8-bit input, 15 for quantized data.
struct Image {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<int> pixels;  // row-major

  int at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  int& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

  /// Zero outside the raster.
  int padded(int x, int y) const {
    if (x < 0 || y < 0 || x >= width || y >= height) return 0;
    return at(x, y);
  }

  static Image filled(int width, int height, int value, int maxval = 255);
  void validate() const;
  friend bool operator==(const Image&, const Image&) = default;
};

Image load_pgm(const std::string& path);
void save_pgm(const Image& img, const std::string& path, bool binary = true);
Image pgm_from_text(const std::string& text);
std::string to_pgm_text(const Image& img);  // P2

/// pixel4 = pixel8 / 16.
Image quantize_4bit(const Image& img8);

enum class KernelVariant : std::uint8_t { Gx, Gy, Both };

std::string_view name(KernelVariant v);
std::optional<KernelVariant> parse_kernel(std::string_view text);

/// 3x3 stencil with signed coefficients summing to zero. `Both` combines the
/// responses of the two canonical kernels.
struct SobelKernel {
  std::array<int, 9> coeff{};  // row-major
  KernelVariant variant = KernelVariant::Gx;

  void validate() const;  // zero-sum
  /// Sum of positive coefficients; the rescale divisor of the kernel.
  int positive_sum() const;
  static SobelKernel make(KernelVariant v);
};

/// Integer convolution with zero-padded borders. The response magnitude is
/// rescaled back into the input bit depth (divide by the kernel's positive
/// coefficient sum, saturate at maxval); `Both` sums both magnitudes and
/// divides by the combined positive sum.
Image sobel_reference(const Image& img, const SobelKernel& kernel);
Image sobel_reference(const Image& img, KernelVariant variant);

}  // namespace slim
