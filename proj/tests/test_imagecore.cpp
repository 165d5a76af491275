#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "scatk/dataset.hpp"
#include "scatk/image.hpp"
#include "scatk/io_idx.hpp"
#include "scatk/io_ppm.hpp"
#include "scatk/norms.hpp"
#include "scatk/rng.hpp"

using namespace scatk;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("scatk_test_" + name)).string();
}

DiffImage make_diff(std::initializer_list<double> vals, int h, int w, int c = 1) {
  DiffImage d(h, w, c);
  std::size_t i = 0;
  for (double v : vals) d.data[i++] = v;
  return d;
}

void write_be32(std::ofstream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v >> 24), static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 8), static_cast<unsigned char>(v)};
  out.write(reinterpret_cast<char*>(b), 4);
}

void write_idx_pair(const std::string& imgs, const std::string& labs, int n, int rows, int cols,
                    int label_count_override = -1) {
  std::ofstream fi(imgs, std::ios::binary);
  write_be32(fi, 0x00000803u);
  write_be32(fi, static_cast<std::uint32_t>(n));
  write_be32(fi, static_cast<std::uint32_t>(rows));
  write_be32(fi, static_cast<std::uint32_t>(cols));
  for (int s = 0; s < n; ++s)
    for (int i = 0; i < rows * cols; ++i) fi.put(static_cast<char>((s * 37 + i) % 256));
  std::ofstream fl(labs, std::ios::binary);
  const int nl = label_count_override < 0 ? n : label_count_override;
  write_be32(fl, 0x00000801u);
  write_be32(fl, static_cast<std::uint32_t>(nl));
  for (int s = 0; s < nl; ++s) fl.put(static_cast<char>(s % 4));
}

}  // namespace

TEST_CASE("l2 norm basics") {
  CHECK(l2_norm(DiffImage(2, 2, 1)) == 0.0);
  DiffImage unit(3, 1, 1);
  unit.data[1] = 1.0;
  CHECK(l2_norm(unit) == 1.0);
  CHECK(l2_norm(make_diff({0.3, 0.4, 0.0, 0.0}, 2, 2)) == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("scaled l2") {
  DiffImage d(2, 2, 1);
  d.data = {6.0, 0.0, 0.0, 0.0};
  CHECK(scaled_l2(d, 3.0) == Catch::Approx(2.0));
  CHECK(scaled_l2(DiffImage(4, 4, 1), 7.0) == 0.0);
  d.data = {5.0, 0.0, 0.0, 0.0};
  CHECK(scaled_l2(d, 1.0) == 5.0);
  CHECK_THROWS_AS(scaled_l2(d, 0.5), Error);
}

TEST_CASE("linf norm") {
  CHECK(linf_norm(DiffImage(2, 2, 1)) == 0.0);
  CHECK(linf_norm(make_diff({-0.2, 0.1}, 2, 1)) == Catch::Approx(0.2));
  CHECK(linf_norm(make_diff({0.05, -0.30, 0.10}, 3, 1)) == Catch::Approx(0.30));
}

TEST_CASE("norm axioms on random fields") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    DiffImage a(5, 4, 3), b(5, 4, 3);
    for (auto& v : a.data) v = rng.normal();
    for (auto& v : b.data) v = rng.normal();
    CHECK(l2_norm(a) >= 0.0);
    CHECK(linf_norm(a) >= 0.0);
    CHECK(l2_norm(add(a, b)) <= l2_norm(a) + l2_norm(b) + 1e-12);
    CHECK(linf_norm(add(a, b)) <= linf_norm(a) + linf_norm(b) + 1e-12);
    const double beta = 1.0 + 4.0 * rng.uniform();
    CHECK(scaled_l2(a, beta) * beta == Catch::Approx(l2_norm(a)).epsilon(1e-12));
  }
  DiffImage z(5, 4, 3);
  CHECK(l2_norm(z) == 0.0);
  z.data[7] = 1e-300;
  CHECK(l2_norm(z) > 0.0);
}

TEST_CASE("ppm round trip within quantization") {
  Rng rng(5);
  Image img(2, 2, 3);
  for (auto& v : img.data) v = rng.uniform();
  const auto path = temp_path("rt.ppm");
  save_ppm(img, path);
  const Image back = load_ppm(path);
  REQUIRE(back.shape == img.shape);
  double worst = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    worst = std::max(worst, std::fabs(img.data[i] - back.data[i]));
  CHECK(worst <= 1.0 / 255.0 + 1e-12);
  std::remove(path.c_str());
}

TEST_CASE("ppm rejects unsupported inputs") {
  const auto p3 = temp_path("ascii.ppm");
  {
    std::ofstream f(p3);
    f << "P3\n2 2\n255\n0 0 0 0 0 0 0 0 0 0 0 0\n";
  }
  CHECK_THROWS_WITH(load_ppm(p3), Catch::Matchers::ContainsSubstring("unsupported format"));

  const auto deep = temp_path("deep.ppm");
  {
    std::ofstream f(deep, std::ios::binary);
    f << "P6\n2 2\n65535\n";
    for (int i = 0; i < 24; ++i) f.put(0);
  }
  CHECK_THROWS_WITH(load_ppm(deep), Catch::Matchers::ContainsSubstring("unsupported depth"));

  const auto trunc = temp_path("trunc.ppm");
  {
    std::ofstream f(trunc, std::ios::binary);
    f << "P6\n4 4\n255\n";
    f.put(0);  // far fewer than 48 payload bytes
  }
  CHECK_THROWS_WITH(load_ppm(trunc), Catch::Matchers::ContainsSubstring("truncated"));
  std::remove(p3.c_str());
  std::remove(deep.c_str());
  std::remove(trunc.c_str());
}

TEST_CASE("idx loader") {
  const auto imgs = temp_path("imgs.idx3");
  const auto labs = temp_path("labs.idx1");
  write_idx_pair(imgs, labs, 4, 5, 6);
  const Dataset ds = load_idx(imgs, labs);
  REQUIRE(ds.samples.size() == 4);
  CHECK(ds.samples[0].image.shape.h == 5);
  CHECK(ds.samples[0].image.shape.w == 6);
  CHECK(ds.samples[1].label == 1);
  // byte 255 -> intensity 1.0: sample 1 pixel index i where (37 + i) % 256 == 255
  CHECK(ds.samples[1].image.data[218] == 1.0);

  write_idx_pair(imgs, labs, 4, 5, 6, 3);
  CHECK_THROWS_WITH(load_idx(imgs, labs), Catch::Matchers::ContainsSubstring("count mismatch"));
  std::remove(imgs.c_str());
  std::remove(labs.c_str());
}

TEST_CASE("synth dataset determinism and coverage") {
  Rng a(7), b(7);
  const Dataset da = synth_dataset(a, 10, 32, 3);
  const Dataset db = synth_dataset(b, 10, 32, 3);
  REQUIRE(da.samples.size() == 10);
  for (std::size_t i = 0; i < da.samples.size(); ++i) {
    CHECK(da.samples[i].label == db.samples[i].label);
    CHECK(da.samples[i].image.data == db.samples[i].image.data);
  }

  Rng c(9);
  CHECK(synth_dataset(c, 0, 32, 3).samples.empty());

  Rng d(1);
  const Dataset big = synth_dataset(d, 300, 16, 3);
  int hist[3] = {0, 0, 0};
  for (const auto& s : big.samples) ++hist[s.label];
  for (int k = 0; k < 3; ++k) CHECK(hist[k] >= 60);

  Rng e(2);
  CHECK_THROWS_AS(synth_dataset(e, 4, 7, 3), Error);
  CHECK_THROWS_AS(synth_dataset(e, 4, 16, 1), Error);
  CHECK_THROWS_AS(synth_dataset(e, 4, 16, 11), Error);
}

TEST_CASE("rng reproducibility and splitting") {
  Rng a(123), b(123);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.next() == b.next());
  CHECK(a.position() == 1000);

  Rng base(50);
  Rng w1 = base.split(1), w1b = base.split(1), w2 = base.split(2);
  CHECK(w1.next() == w1b.next());
  CHECK(w1.next() != w2.next());

  // uniform_int stays in range, normal stays finite
  Rng r(99);
  for (int i = 0; i < 200; ++i) {
    const int v = r.uniform_int(9);
    CHECK(v >= 0);
    CHECK(v < 9);
    CHECK(std::isfinite(r.normal()));
  }
}
