#ifndef RENCOX_VERIFY_HPP_
#define RENCOX_VERIFY_HPP_

#include <string>
#include <vector>

#include "rencox/greens.hpp"

namespace rencox {

struct PropertyResult {
  std::string name;
  bool pass;
  std::string detail;  // failure witness, or the reason a check was skipped
};

// Exhaustive property suites over one finite group / one system. Suites that
// scale with the square or cube of the size skip themselves (pass = true,
// detail notes it) above a few hundred elements.
std::vector<PropertyResult> verify_group_properties(const CoxeterGroup& g,
                                                    const std::string& tag);
std::vector<PropertyResult> verify_system_properties(const RennerSystem& sys);

// The whole battery: the fixed small groups (S3, S4, B2), the system's own
// group, the system suites, and the degree-3 rook counterexample when the
// system is that monoid.
std::vector<PropertyResult> run_full_verification(const RennerSystem& sys);

inline bool all_pass(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace rencox

#endif  // RENCOX_VERIFY_HPP_
