#ifndef TRACEALG_VERIFY_HPP
#define TRACEALG_VERIFY_HPP

#include <iosfwd>

namespace tracealg {

struct VerifyResult {
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

/// Runs every verification suite, printing one PASS/FAIL line per
/// criterion. All checks are exact; the final criterion is the wall
/// clock budget of the run itself.
VerifyResult run_verification(std::ostream& out);

}  // namespace tracealg

#endif
