#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pksearch/kernel_codes.hpp"

// Plain-text kernel files: l lines of l characters from {0,1}, line i is
// row i, character j is column j.

namespace pksearch {

Kernel parse_kernel_text(std::string_view text);
Kernel load_kernel_file(const std::string& path);

std::string kernel_to_text(const Kernel& k);
void write_kernel_file(const Kernel& k, const std::string& path);

// FNV-1a over the raw file bytes; used by the fixture manifest.
uint64_t fnv1a64(std::string_view data);
uint64_t fnv1a64_file(const std::string& path);

}  // namespace pksearch
