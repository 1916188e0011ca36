#include "champ/image.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "champ/core.hpp"

namespace champ {

static_assert(sizeof(Rgb) == 3, "pixel rows are written as packed bytes");

namespace {

std::uint8_t rounded_byte(const Rat& x) {
  // round(255 x), half up; x in [0, 1]
  Rat scaled = x * 510 + 1;  // 2*(255x) + 1
  Int v = scaled.get_num() / (2 * scaled.get_den());
  return static_cast<std::uint8_t>(v.get_ui());
}

}  // namespace

std::vector<Rgb> digit_palette(Base base) {
  const int b = base.value();
  std::vector<Rgb> palette;
  palette.reserve(static_cast<std::size_t>(b));
  for (int d = 0; d < b; ++d) {
    // hue in sixths of the wheel: h6 = 6 d / b
    const Rat h6 = make_rat(6 * d, b);
    const long sector = static_cast<long>(Int(h6.get_num() / h6.get_den()).get_si()) % 6;
    const Rat frac = h6 - Rat(sector);
    const std::uint8_t t = rounded_byte(frac);
    const std::uint8_t q = rounded_byte(1 - frac);
    switch (sector) {
      case 0: palette.push_back({255, t, 0}); break;
      case 1: palette.push_back({q, 255, 0}); break;
      case 2: palette.push_back({0, 255, t}); break;
      case 3: palette.push_back({0, q, 255}); break;
      case 4: palette.push_back({t, 0, 255}); break;
      default: palette.push_back({255, 0, q}); break;
    }
  }
  return palette;
}

void write_ppm(const std::string& path, int width, int height,
               const std::vector<Rgb>& pixels) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("write_ppm: empty image");
  if (pixels.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("write_ppm: pixel count does not match dimensions");

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_ppm: cannot open " + tmp);
    out << "P6\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size() * sizeof(Rgb)));
    if (!out) throw std::runtime_error("write_ppm: write failed on " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("write_ppm: cannot rename into " + path);
  }
}

int render_digit_raster(Base base, std::uint64_t digit_count, int width,
                        const std::string& path) {
  if (width < 1) throw std::invalid_argument("render_digit_raster: width must be >= 1");
  const std::uint64_t rows = digit_count / static_cast<std::uint64_t>(width);
  if (rows < 1)
    throw std::invalid_argument("render_digit_raster: fewer digits than one row");
  if (rows * static_cast<std::uint64_t>(width) > kMaterializeLimit)
    throw infeasible_error("raster larger than the digit materialization guard");
  const int height = static_cast<int>(rows);

  const std::size_t used = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const auto digits = first_digits(base, used);
  const auto palette = digit_palette(base);

  std::vector<Rgb> pixels(used);
  for (std::size_t i = 0; i < used; ++i) pixels[i] = palette[digits[i]];
  write_ppm(path, width, height, pixels);
  return height;
}

}  // namespace champ
