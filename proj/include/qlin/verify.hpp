// The full reproduction suite: every quantitative claim about the groups
// H_24 c H_120 c H_720 c H_1440 and their line systems, organised into
// twelve numbered criteria plus cross-checks of the transcribed constants.

#ifndef QLIN_VERIFY_HPP
#define QLIN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qlin {

struct CheckRecord {
  std::string id;              // e.g. "group.h720.order"
  std::string paper_location;  // section / equation the value comes from
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CriterionReport {
  int number = 0;  // 0 = constants cross-checks, 1..12 = acceptance criteria
  std::string title;
  std::vector<CheckRecord> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int cap = 4000;       // group closure cap
  std::string only;     // check-id prefix filter; empty = everything
  int threads = 0;      // 0 = library default
};

struct ReportDocument {
  std::uint64_t seed = 1;
  std::vector<CriterionReport> criteria;
  bool all_pass() const {
    for (const auto& c : criteria)
      if (!c.pass()) return false;
    return true;
  }
  const CheckRecord* first_failure() const {
    for (const auto& c : criteria)
      for (const auto& r : c.checks)
        if (!r.pass) return &r;
    return nullptr;
  }
};

ReportDocument run_verification(const VerifyOptions& opt = {});

}  // namespace qlin

#endif
