//
// Copyright 2026 slimsim contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "slim/image.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "slim/errors.hpp"

namespace slim {

Image Image::filled(int width, int height, int value, int maxval) {
  Image img;
  img.width = width;
  img.height = height;
  img.maxval = maxval;
  img.pixels.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), value);
  img.validate();
  return img;
}

void Image::validate() const {
  if (width <= 0 || height <= 0) throw IoError("image: dimensions must be positive");
  if (maxval <= 0 || maxval > 65535) throw IoError("image: bad maxval");
  if (pixels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw IoError("image: pixel count does not match dimensions");
  }
  for (const int p : pixels) {
    if (p < 0 || p > maxval) throw IoError("image: pixel out of range");
  }
}

namespace {

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c)) {
    tok.push_back(static_cast<char>(c));
    c = in.get();
  }
  return tok;
}

Image parse_pgm_stream(std::istream& in) {
  const std::string magic = next_token(in);
  if (magic != "P2" && magic != "P5") throw IoError("pgm: expected P2 or P5, got '" + magic + "'");
  Image img;
  try {
    img.width = std::stoi(next_token(in));
    img.height = std::stoi(next_token(in));
    img.maxval = std::stoi(next_token(in));
  } catch (const std::exception&) {
    throw IoError("pgm: malformed header");
  }
  if (img.width <= 0 || img.height <= 0) throw IoError("pgm: bad dimensions");
  if (img.maxval <= 0 || img.maxval > 255) throw IoError("pgm: maxval must be in 1..255");
  const std::size_t count = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
  img.pixels.reserve(count);
  if (magic == "P2") {
    for (std::size_t i = 0; i < count; ++i) {
      const std::string tok = next_token(in);
      if (tok.empty()) throw IoError("pgm: truncated pixel data");
      img.pixels.push_back(std::stoi(tok));
    }
  } else {
    // P5: single whitespace after maxval already consumed by next_token.
    for (std::size_t i = 0; i < count; ++i) {
      const int c = in.get();
      if (c == EOF) throw IoError("pgm: truncated pixel data");
      img.pixels.push_back(c);
    }
  }
  img.validate();
  return img;
}

}  // namespace

Image load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image: " + path);
  return parse_pgm_stream(in);
}

Image pgm_from_text(const std::string& text) {
  std::istringstream in(text);
  return parse_pgm_stream(in);
}

std::string to_pgm_text(const Image& img) {
  img.validate();
  std::ostringstream out;
  out << "P2\n" << img.width << " " << img.height << "\n" << img.maxval << "\n";
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      out << img.at(x, y) << (x + 1 == img.width ? '\n' : ' ');
    }
  }
  return out.str();
}

void save_pgm(const Image& img, const std::string& path, bool binary) {
  img.validate();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write image: " + path);
  if (binary) {
    out << "P5\n" << img.width << " " << img.height << "\n" << img.maxval << "\n";
    for (const int p : img.pixels) out.put(static_cast<char>(p));
  } else {
    out << to_pgm_text(img);
  }
  if (!out) throw IoError("short write: " + path);
}

Image quantize_4bit(const Image& img8) {
  img8.validate();
  if (img8.maxval != 255) throw IoError("quantize: expected an 8-bit image");
  Image out = img8;
  out.maxval = 15;
  for (int& p : out.pixels) p /= 16;
  return out;
}

std::string_view name(KernelVariant v) {
  switch (v) {
    case KernelVariant::Gx: return "gx";
    case KernelVariant::Gy: return "gy";
    case KernelVariant::Both: return "both";
  }
  return "??";
}

std::optional<KernelVariant> parse_kernel(std::string_view text) {
  if (text == "gx") return KernelVariant::Gx;
  if (text == "gy") return KernelVariant::Gy;
  if (text == "both") return KernelVariant::Both;
  return std::nullopt;
}

void SobelKernel::validate() const {
  int sum = 0;
  for (const int c : coeff) sum += c;
  if (sum != 0) throw ConfigError("kernel coefficients must sum to zero");
}

int SobelKernel::positive_sum() const {
  int sum = 0;
  for (const int c : coeff) sum += std::max(c, 0);
  return sum;
}

SobelKernel SobelKernel::make(KernelVariant v) {
  SobelKernel k;
  k.variant = v;
  if (v == KernelVariant::Gy) {
    k.coeff = {-1, -2, -1, 0, 0, 0, 1, 2, 1};
  } else {
    k.coeff = {-1, 0, 1, -2, 0, 2, -1, 0, 1};
  }
  return k;
}

namespace {

int convolve_abs(const Image& img, const std::array<int, 9>& coeff, int x, int y) {
  int acc = 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      acc += coeff[static_cast<std::size_t>((dy + 1) * 3 + (dx + 1))] * img.padded(x + dx, y + dy);
    }
  }
  return std::abs(acc);
}

}  // namespace

Image sobel_reference(const Image& img, const SobelKernel& kernel) {
  img.validate();
  kernel.validate();
  if (img.width < 3 || img.height < 3) throw IoError("sobel: image must be at least 3x3");

  const SobelKernel gx = SobelKernel::make(KernelVariant::Gx);
  const SobelKernel gy = SobelKernel::make(KernelVariant::Gy);
  const bool both = kernel.variant == KernelVariant::Both;
  const int divisor = both ? gx.positive_sum() + gy.positive_sum()
                           : std::max(kernel.positive_sum(), 1);

  Image out = Image::filled(img.width, img.height, 0, img.maxval);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const int raw = both
                          ? convolve_abs(img, gx.coeff, x, y) + convolve_abs(img, gy.coeff, x, y)
                          : convolve_abs(img, kernel.coeff, x, y);
      out.at(x, y) = std::min(raw / divisor, img.maxval);
    }
  }
  return out;
}

Image sobel_reference(const Image& img, KernelVariant variant) {
  return sobel_reference(img, SobelKernel::make(variant));
}

}  // namespace slim
