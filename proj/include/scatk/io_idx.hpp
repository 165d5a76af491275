#pragma once

#include <cstdint>
#include <fstream>
#include <string>

#include "scatk/dataset.hpp"
#include "scatk/image.hpp"

namespace scatk {

namespace detail {

inline std::uint32_t read_be32(std::istream& in, const std::string& path) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (in.gcount() != 4) throw Error("load_idx: truncated header in " + path);
  return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) | (std::uint32_t(b[2]) << 8) |
         std::uint32_t(b[3]);
}

}  // namespace detail

/// IDX3 image file + IDX1 label file (big-endian, byte pixels scaled to [0,1]).
inline Dataset load_idx(const std::string& images_path, const std::string& labels_path) {
  std::ifstream imgs(images_path, std::ios::binary);
  if (!imgs) throw Error("load_idx: cannot open " + images_path);
  std::ifstream labs(labels_path, std::ios::binary);
  if (!labs) throw Error("load_idx: cannot open " + labels_path);

  const std::uint32_t magic_i = detail::read_be32(imgs, images_path);
  if (magic_i != 0x00000803u)
    throw Error("load_idx: bad image magic in " + images_path + " (want 0x00000803)");
  const std::uint32_t n_img = detail::read_be32(imgs, images_path);
  const std::uint32_t rows = detail::read_be32(imgs, images_path);
  const std::uint32_t cols = detail::read_be32(imgs, images_path);

  const std::uint32_t magic_l = detail::read_be32(labs, labels_path);
  if (magic_l != 0x00000801u)
    throw Error("load_idx: bad label magic in " + labels_path + " (want 0x00000801)");
  const std::uint32_t n_lab = detail::read_be32(labs, labels_path);
  if (n_img != n_lab)
    throw Error("load_idx: count mismatch (" + std::to_string(n_img) + " images vs " +
                std::to_string(n_lab) + " labels)");

  Dataset ds;
  int max_label = 0;
  std::vector<unsigned char> buf(static_cast<std::size_t>(rows) * cols);
  for (std::uint32_t s = 0; s < n_img; ++s) {
    imgs.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (static_cast<std::size_t>(imgs.gcount()) != buf.size())
      throw Error("load_idx: truncated image payload in " + images_path);
    const int label = labs.get();
    if (label == EOF) throw Error("load_idx: truncated label payload in " + labels_path);
    Image img(static_cast<int>(rows), static_cast<int>(cols), 1);
    for (std::size_t i = 0; i < buf.size(); ++i) img.data[i] = buf[i] / 255.0;
    ds.samples.push_back({std::move(img), label});
    max_label = std::max(max_label, label);
  }
  ds.class_count = max_label + 1;
  return ds;
}

}  // namespace scatk
