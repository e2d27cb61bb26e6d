#pragma once
#include <string>
#include <vector>

namespace syzygy {

struct VerifyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Cross-checks between independent routes through the library.
std::vector<VerifyResult> run_verification(bool quick, unsigned threads);

}  // namespace syzygy
