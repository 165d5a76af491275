#pragma once

#include <cstdint>
#include <fstream>
#include <string>

#include "scatk/image.hpp"

namespace scatk {

namespace detail {

inline int ppm_next_token(std::istream& in, std::string& tok) {
  tok.clear();
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {  // comment runs to end of line
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      if (!tok.empty()) return 0;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  return tok.empty() ? -1 : 0;
}

}  // namespace detail

/// Reads a binary PPM (P6, 3 channels) or PGM (P5, 1 channel), maxval 255.
inline Image load_ppm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("load_ppm: cannot open " + path);
  std::string magic, ws, hs, ms;
  if (detail::ppm_next_token(in, magic) < 0) throw Error("load_ppm: empty file " + path);
  int channels;
  if (magic == "P6")
    channels = 3;
  else if (magic == "P5")
    channels = 1;
  else
    throw Error("load_ppm: unsupported format '" + magic + "' (binary P5/P6 only) in " + path);
  if (detail::ppm_next_token(in, ws) < 0 || detail::ppm_next_token(in, hs) < 0 ||
      detail::ppm_next_token(in, ms) < 0)
    throw Error("load_ppm: malformed header in " + path);
  const int w = std::stoi(ws), h = std::stoi(hs), maxval = std::stoi(ms);
  if (w <= 0 || h <= 0) throw Error("load_ppm: bad dimensions in " + path);
  if (maxval != 255) throw Error("load_ppm: unsupported depth (maxval must be 255) in " + path);

  Image img(h, w, channels);
  std::vector<unsigned char> raw(img.size());
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size())
    throw Error("load_ppm: truncated payload in " + path);
  for (std::size_t i = 0; i < raw.size(); ++i) img.data[i] = raw[i] / 255.0;
  return img;
}

/// Writes P6 for 3-channel and P5 for 1-channel images; values are clamped to
/// [0,1] and quantized round-half-up to 8 bits.
inline void save_ppm(const Image& img, const std::string& path) {
  if (img.shape.c != 1 && img.shape.c != 3)
    throw Error("save_ppm: channel count must be 1 or 3");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("save_ppm: cannot open " + path);
  out << (img.shape.c == 3 ? "P6" : "P5") << "\n"
      << img.shape.w << " " << img.shape.h << "\n255\n";
  std::vector<unsigned char> raw(img.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const double v = std::clamp(img.data[i], 0.0, 1.0);
    raw[i] = static_cast<unsigned char>(std::floor(v * 255.0 + 0.5));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw Error("save_ppm: write failed for " + path);
}

}  // namespace scatk
