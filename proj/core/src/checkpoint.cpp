#include "tsym/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace tsym {
namespace {

static_assert(sizeof(double) == 8, "checkpoint format requires 64-bit doubles");

void write_u64(std::ostream& os, std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
  os.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t read_u64(std::istream& is) {
  unsigned char buf[8];
  is.read(reinterpret_cast<char*>(buf), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return v;
}

void write_f64(std::ostream& os, double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, 8);
  write_u64(os, bits);
}

double read_f64(std::istream& is) {
  const std::uint64_t bits = read_u64(is);
  double d;
  std::memcpy(&d, &bits, 8);
  return d;
}

}  // namespace

void save_mlp(const Mlp& net, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot open checkpoint for writing: " + path);
  const auto& sizes = net.layer_sizes();
  write_u64(os, sizes.size());
  for (int s : sizes) write_u64(os, static_cast<std::uint64_t>(s));
  for (const auto& layer : net.layers()) {
    for (Eigen::Index i = 0; i < layer.W.rows(); ++i)
      for (Eigen::Index j = 0; j < layer.W.cols(); ++j) write_f64(os, layer.W(i, j));
    for (Eigen::Index i = 0; i < layer.b.size(); ++i) write_f64(os, layer.b(i));
  }
  if (!os) throw ConfigError("failed writing checkpoint: " + path);
}

Mlp load_mlp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("cannot open checkpoint: " + path);
  const std::uint64_t k = read_u64(is);
  if (!is || k < 2 || k > 64) throw ConfigError("checkpoint header corrupt: " + path);
  std::vector<int> sizes(k);
  for (auto& s : sizes) {
    const std::uint64_t v = read_u64(is);
    if (!is || v == 0 || v > (1u << 20)) throw ConfigError("checkpoint header corrupt: " + path);
    s = static_cast<int>(v);
  }
  Mlp net(sizes);
  for (auto& layer : net.layers()) {
    for (Eigen::Index i = 0; i < layer.W.rows(); ++i)
      for (Eigen::Index j = 0; j < layer.W.cols(); ++j) layer.W(i, j) = read_f64(is);
    for (Eigen::Index i = 0; i < layer.b.size(); ++i) layer.b(i) = read_f64(is);
  }
  if (!is) throw ConfigError("checkpoint payload truncated: " + path);
  return net;
}

}  // namespace tsym
