#pragma once

#include <string>
#include <vector>

namespace gkt {

struct GalleryEntry {
  std::string name;
  bool pass = false;
  std::string detail;  // expected vs got on failure
};

/// Runs the worked examples the library is built around and reports one
/// pass/fail entry each. Deterministic; no inputs.
std::vector<GalleryEntry> run_gallery();

}  // namespace gkt
