#ifndef RENCOX_GREENS_HPP_
#define RENCOX_GREENS_HPP_

#include <string>
#include <vector>

#include "rencox/adherence.hpp"

namespace rencox {

enum class ExtremumKind { min, max };
enum class SpecialSet { GJ, JG, N, O };

bool related(const RennerElement& r, const RennerElement& s, GreensRelation rel);

std::vector<RennerElement> class_of(const RennerElement& r, GreensRelation rel);

// The absolute minimum/maximum of the class of r under the given adherence
// order, built directly in vanilla form (never by scanning the class): the
// middle part becomes the w0-projection between the centralizer types (min)
// or the stabilizer types (max), and for L/R/J the outer parts become the
// matching projection (min) or the identity (max).
RennerElement class_extremum(const RennerElement& r, GreensRelation rel,
                             Epsilon eps, ExtremumKind kind);

// GJ: L-class minima; JG: R-class minima; N = GJ ∩ JG: J-class minima;
// O: H-class minima (the same set for either epsilon).
std::vector<RennerElement> special_submonoid(const RennerSystem& sys,
                                             SpecialSet which, Epsilon eps);

// Order on classes, decided by the maximum-element criterion (the one valid
// for all four relations, H included).
bool class_leq(const RennerElement& r, const RennerElement& s,
               GreensRelation rel, Epsilon eps);

struct CounterexampleClaim {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass;
};

struct CounterexampleReport {
  std::vector<CounterexampleClaim> claims;
  bool all_pass() const;
};

// Reproduces the degree-3 rook facts that pin the lattice orientation:
// [3,2,0] <=+ [3,2,1], its H-class minimum is [2,3,0], the H-class minimum
// of [3,2,1] is the identity, and the two minima are incomparable under <=+
// (H-class minima are not monotone). Failures signal a mis-calibrated
// lattice, not a broken caller, so they are reported rather than thrown.
CounterexampleReport verify_counterexample(const RennerSystem& rook3);

}  // namespace rencox

#endif  // RENCOX_GREENS_HPP_
