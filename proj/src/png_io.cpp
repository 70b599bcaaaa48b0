// Copyright 2026 The iipad Authors
// SPDX-License-Identifier: Apache-2.0

#include "iipad/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

namespace iipad::pngio {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// libpng reports errors through longjmp; we convert to exceptions only after
// control returns to our frame, never across libpng's C frames.
void quiet_warning(png_structp, png_const_charp) {}

}  // namespace

Frame read(const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) throw DataError("png: cannot open " + path.string());

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, quiet_warning);
  if (!png) throw DataError("png: allocation failure");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw DataError("png: allocation failure");
  }

  std::vector<png_byte> raw;
  std::vector<png_bytep> row_ptrs;
  int width = 0, height = 0, depth = 0;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw DataError("png: malformed file " + path.string());
  }

  png_init_io(png, fp.get());
  png_read_info(png, info);

  width = static_cast<int>(png_get_image_width(png, info));
  height = static_cast<int>(png_get_image_height(png, info));
  depth = png_get_bit_depth(png, info);
  int color_type = png_get_color_type(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  if (depth == 16) png_set_swap(png);  // PNG stores 16-bit big-endian

  png_read_update_info(png, info);
  depth = png_get_bit_depth(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);

  raw.resize(stride * static_cast<std::size_t>(height));
  row_ptrs.resize(height);
  for (int r = 0; r < height; ++r) row_ptrs[r] = raw.data() + stride * r;
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  Frame out(height, width, ColorSpace::kRGB);
  if (depth == 16) {
    for (int r = 0; r < height; ++r) {
      const auto* px = reinterpret_cast<const std::uint16_t*>(raw.data() + stride * r);
      for (int c = 0; c < width; ++c)
        for (int k = 0; k < 3; ++k) out.ch[k].at(r, c) = px[3 * c + k] / 65535.0;
    }
  } else {
    for (int r = 0; r < height; ++r) {
      const png_byte* px = raw.data() + stride * r;
      for (int c = 0; c < width; ++c)
        for (int k = 0; k < 3; ++k) out.ch[k].at(r, c) = px[3 * c + k] / 255.0;
    }
  }
  return out;
}

void write8(const std::filesystem::path& path, const Frame& rgb) {
  require(rgb.space == ColorSpace::kRGB, "png: write expects an RGB frame");
  require(rgb.rows() > 0 && rgb.cols() > 0, "png: write expects a non-empty frame");

  const int h = rgb.rows(), w = rgb.cols();
  std::vector<png_byte> raw(static_cast<std::size_t>(h) * w * 3);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      for (int k = 0; k < 3; ++k) {
        double v = rgb.ch[k].at(r, c);
        v = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        raw[(static_cast<std::size_t>(r) * w + c) * 3 + k] =
            static_cast<png_byte>(std::lround(v * 255.0));
      }

  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw DataError("png: cannot create " + path.string());

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, quiet_warning);
  if (!png) throw DataError("png: allocation failure");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw DataError("png: allocation failure");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw DataError("png: write failure " + path.string());
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, w, h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int r = 0; r < h; ++r)
    png_write_row(png, const_cast<png_bytep>(raw.data() + static_cast<std::size_t>(r) * w * 3));
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
}

}  // namespace iipad::pngio
