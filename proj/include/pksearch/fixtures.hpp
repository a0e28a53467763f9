#pragma once

#include <string>
#include <vector>

#include "pksearch/kernel_codes.hpp"

// Reference kernels shipped with the repository, together with their expected
// partial distance profiles and polarization rates. The files live under
// data/fixtures and are guarded by an FNV-1a manifest.

namespace pksearch {

struct Fixture {
  std::string name;  // display name, e.g. "K17*"
  std::string file;  // file name inside the fixture directory
  int size = 0;
  Pdp expected_pdp;
  double expected_rate = 0.0;
  bool monotonic = true;  // profile sorted nondecreasing?
};

const std::vector<Fixture>& fixture_registry();
const Fixture& find_fixture(const std::string& name);

// compiled-in repository data directory; override per call where needed
std::string default_fixture_dir();

// Loads and checksum-verifies one fixture kernel.
Kernel load_fixture(const Fixture& f, const std::string& dir = default_fixture_dir());

}  // namespace pksearch
