#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tubelat/io.hpp"

namespace tubelat {

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> report;
  Json counterexample;  // null when ok
};

// Selector names accepted by run_verify, "all" first.
const std::vector<std::string>& verify_selectors();

// Largest n a selector runs at without force.
int verify_cap(std::string_view selector);

// Runs one suite on the cycle graph with n vertices. Throws InvalidInput for an
// unknown selector or n < 3, and CapExceeded above the cap unless forced.
VerifyResult run_verify(std::string_view selector, int n, bool force = false);

}  // namespace tubelat
