#include "pksearch/kernel_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pksearch {

Kernel parse_kernel_text(std::string_view text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                          : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw std::runtime_error("kernel file: empty");
  const size_t l = lines[0].size();
  if (lines.size() != l)
    throw std::runtime_error("kernel file: expected " + std::to_string(l) + " lines, got " +
                             std::to_string(lines.size()));
  Kernel k;
  k.size = static_cast<int>(l);
  for (size_t i = 0; i < l; ++i) {
    if (lines[i].size() != l)
      throw std::runtime_error("kernel file: line " + std::to_string(i + 1) +
                               " has wrong length");
    uint64_t bits = 0;
    for (size_t j = 0; j < l; ++j) {
      const char c = lines[i][j];
      if (c == '1')
        bits |= uint64_t{1} << j;
      else if (c != '0')
        throw std::runtime_error("kernel file: line " + std::to_string(i + 1) +
                                 " has characters other than 0/1");
    }
    k.rows.push_back(bits);
  }
  return k;
}

Kernel load_kernel_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("kernel file: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_kernel_text(buf.str());
}

std::string kernel_to_text(const Kernel& k) {
  std::string out;
  out.reserve(static_cast<size_t>(k.size) * (static_cast<size_t>(k.size) + 1));
  for (int i = 0; i < k.size; ++i) {
    out += k.row(i).to_string();
    out += '\n';
  }
  return out;
}

void write_kernel_file(const Kernel& k, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("kernel file: cannot write " + path);
  out << kernel_to_text(k);
  if (!out.good()) throw std::runtime_error("kernel file: write failed for " + path);
}

uint64_t fnv1a64(std::string_view data) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("checksum: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return fnv1a64(buf.str());
}

}  // namespace pksearch
