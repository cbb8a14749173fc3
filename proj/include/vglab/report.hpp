#pragma once

#include <cstddef>
#include <string>

namespace vglab {

/// Outcome of one law-checking pass: how many instances were tried, how many
/// held, and the first failing witness in deterministic iteration order.
struct LawReport {
  std::string id;
  std::string claim;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::string witness;  // empty unless some instance failed
  double duration_ms = 0.0;

  bool ok() const { return passed == attempted; }

  void record(bool held, const std::string& failing_witness) {
    ++attempted;
    if (held) {
      ++passed;
    } else if (witness.empty()) {
      witness = failing_witness;
    }
  }
};

}  // namespace vglab
