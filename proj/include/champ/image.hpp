#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "champ/base.hpp"

namespace champ {

struct Rgb {
  std::uint8_t r, g, b;
};

// One color per digit: b hues evenly spaced around the wheel at full
// saturation, digit 0 at hue 0. Computed in exact rationals so the palette
// is identical on every platform.
std::vector<Rgb> digit_palette(Base base);

// Binary P6 "P6\n<w> <h>\n255\n" + rows; written to a temp file in the same
// directory and renamed into place.
void write_ppm(const std::string& path, int width, int height,
               const std::vector<Rgb>& pixels);

// Raster of the first digits in row-major order, one pixel per digit; the
// digit count is truncated to whole rows. Returns the rows written.
int render_digit_raster(Base base, std::uint64_t digit_count, int width,
                        const std::string& path);

}  // namespace champ
