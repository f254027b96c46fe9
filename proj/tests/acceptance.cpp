// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "criteria.hpp"

int main() {
  bool all = true;
  for (const auto& res : mcg::run_all_criteria(mcg::default_seed())) {
    std::printf("criterion %2d (%s): %s%s%s\n", res.number, res.name.c_str(),
                res.pass ? "PASS" : "FAIL", res.detail.empty() ? "" : " — ",
                res.detail.c_str());
    std::fflush(stdout);
    if (!res.pass) all = false;
  }
  return all ? 0 : 1;
}
