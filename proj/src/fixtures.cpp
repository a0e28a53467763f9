#include "pksearch/fixtures.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pksearch/kernel_io.hpp"

#ifndef PKSEARCH_DATA_DIR
#define PKSEARCH_DATA_DIR ""
#endif

namespace pksearch {

namespace {

Fixture make(const char* name, const char* file, int size, const char* pdp, double rate,
             bool monotonic) {
  Fixture f;
  f.name = name;
  f.file = file;
  f.size = size;
  f.expected_pdp = Pdp::parse(pdp);
  f.expected_rate = rate;
  f.monotonic = monotonic;
  if (f.expected_pdp.size() != size)
    throw std::logic_error("fixture registry: profile length mismatch");
  return f;
}

std::vector<Fixture> build_registry() {
  std::vector<Fixture> r;
  // best-rate kernels
  r.push_back(make("K17*", "k17s.txt", 17, "1,1,2,2,2,3,4,4,4,5,6,7,8,8,8,8,16", 0.49361, true));
  r.push_back(make("K18*", "k18s.txt", 18, "1,2,2,2,2,2,4,4,4,6,6,6,6,8,8,10,10,12", 0.50052, true));
  r.push_back(make("K19*", "k19s.txt", 19, "1,2,2,2,2,2,4,4,4,4,6,6,6,8,8,8,10,10,16", 0.50054, true));
  r.push_back(make("K20*", "k20s.txt", 20, "1,2,2,2,2,2,4,4,4,4,6,6,8,8,8,8,8,8,12,16", 0.50617, true));
  r.push_back(make("K21*", "k21s.txt", 21, "1,2,2,2,2,2,4,4,4,4,6,6,6,6,8,8,10,10,10,14,14", 0.50868, true));
  r.push_back(make("K22*", "k22s.txt", 22, "1,2,2,2,2,2,4,4,4,4,6,6,6,6,8,8,8,10,10,10,12,20", 0.51181, true));
  r.push_back(make("K23*", "k23s.txt", 23, "1,2,2,2,2,2,4,4,4,4,6,6,6,6,6,8,8,10,10,10,12,14,16", 0.51213, true));
  r.push_back(make("K24*", "k24s.txt", 24, "1,2,2,2,2,2,4,4,4,4,4,4,8,8,8,8,8,8,8,12,12,12,16,16", 0.51577, true));
  r.push_back(make("K25*", "k25s.txt", 25, "1,2,2,2,2,2,4,4,4,4,4,6,6,6,8,8,8,8,8,10,12,12,12,16,18", 0.51683, true));
  r.push_back(make("K26*", "k26s.txt", 26, "1,2,2,2,2,2,4,4,4,4,4,6,6,6,6,8,8,8,10,10,10,12,12,12,14,24", 0.51921, true));
  r.push_back(make("K27*", "k27s.txt", 27, "1,2,2,2,2,2,4,4,4,4,4,6,6,6,6,8,8,8,8,10,10,10,12,12,14,14,24", 0.51935, true));
  // low-complexity kernels (non-monotonic profiles)
  r.push_back(make("K18", "k18.txt", 18, "1,2,2,4,2,2,2,4,4,6,4,6,8,8,8,8,8,16", 0.49521, false));
  r.push_back(make("K20", "k20.txt", 20, "1,2,2,4,2,4,2,2,4,4,6,8,8,8,4,8,12,8,8,16", 0.49943, false));
  r.push_back(make("K24", "k24.txt", 24, "1,2,2,4,2,4,2,4,6,2,4,4,8,8,12,4,4,8,8,12,12,8,16,16", 0.50291, false));
  r.push_back(make("K27", "k27.txt", 27, "1,2,2,4,2,2,4,4,6,2,4,4,6,6,8,8,10,12,4,4,8,8,12,12,8,16,16", 0.49720, false));
  r.push_back(make("K32r", "k32r.txt", 32,
                   "1,2,2,4,2,4,2,4,6,8,2,4,6,8,4,6,8,12,4,8,12,16,4,8,12,16,8,16,8,16,16,32",
                   0.52194, false));
  return r;
}

std::map<std::string, uint64_t> load_manifest(const std::string& dir) {
  const std::string path = dir + "/MANIFEST";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixtures: cannot open " + path);
  std::map<std::string, uint64_t> sums;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string hex, file;
    if (!(row >> hex >> file))
      throw std::runtime_error("fixtures: malformed manifest line '" + line + "'");
    sums[file] = std::stoull(hex, nullptr, 16);
  }
  return sums;
}

}  // namespace

const std::vector<Fixture>& fixture_registry() {
  static const std::vector<Fixture> registry = build_registry();
  return registry;
}

const Fixture& find_fixture(const std::string& name) {
  for (const Fixture& f : fixture_registry())
    if (f.name == name) return f;
  throw std::invalid_argument("fixtures: unknown fixture " + name);
}

std::string default_fixture_dir() { return PKSEARCH_DATA_DIR; }

Kernel load_fixture(const Fixture& f, const std::string& dir) {
  const auto sums = load_manifest(dir);
  const std::string path = dir + "/" + f.file;
  auto sum = sums.find(f.file);
  if (sum == sums.end())
    throw std::runtime_error("fixtures: " + f.file + " missing from manifest");
  if (fnv1a64_file(path) != sum->second)
    throw std::runtime_error("fixtures: checksum mismatch for " + path);

  Kernel k = load_kernel_file(path);
  if (k.size != f.size)
    throw std::runtime_error("fixtures: size mismatch for " + path);
  return k;
}

}  // namespace pksearch
