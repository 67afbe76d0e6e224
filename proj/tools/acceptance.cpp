// Acceptance gate: runs the whole verification suite and prints one
// pass/fail line per criterion.  Exits 0 only if everything passes.

#include <cstring>
#include <iostream>

#include "qlin/verify.hpp"

int main(int argc, char** argv) {
  qlin::VerifyOptions opt;
  for (int i = 1; i < argc - 1; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0) opt.seed = std::strtoull(argv[i + 1], nullptr, 10);
    if (std::strcmp(argv[i], "--threads") == 0) opt.threads = std::atoi(argv[i + 1]);
  }
  qlin::ReportDocument doc = qlin::run_verification(opt);
  bool ok = true;
  for (const auto& c : doc.criteria) {
    if (c.number == 0) continue;  // constants cross-checks are folded into the gate
    std::cout << "criterion " << c.number << " [" << (c.pass() ? "PASS" : "FAIL")
              << "] " << c.title << "\n";
    ok = ok && c.pass();
  }
  for (const auto& c : doc.criteria)
    for (const auto& r : c.checks)
      if (!r.pass) {
        std::cout << "  failed: " << r.id << " (" << r.paper_location
                  << ") expected " << r.expected << ", computed " << r.computed
                  << "\n";
        ok = false;
      }
  return ok ? 0 : 1;
}
