#ifndef RENCOX_PARABOLIC_HPP_
#define RENCOX_PARABOLIC_HPP_

#include "rencox/coxeter.hpp"

namespace rencox {

// w = min * par with min in W^I (no right descent in I) and par in W_I;
// the factorization is length-additive and unique.
struct RightCosetSplit {
  CoxeterElement min;
  CoxeterElement par;
};

// w = par * min with min in ^I W and par in W_I.
struct LeftCosetSplit {
  CoxeterElement par;
  CoxeterElement min;
};

RightCosetSplit project_right(const CoxeterElement& w, GenSet I);
LeftCosetSplit project_left(GenSet I, const CoxeterElement& w);

// Minimum of the double coset W_I w W_J.
CoxeterElement project_double(GenSet I, const CoxeterElement& w, GenSet J);

bool is_min_double_coset_rep(const CoxeterElement& w, GenSet I, GenSet J);

// True iff w lies in the standard parabolic subgroup W_I.
bool in_parabolic(const CoxeterElement& w, GenSet I);

// The optimization operator: the Bruhat maximum of {u'v' : u' <= u, v' <= v}.
// Equals uv exactly when lengths add.
CoxeterElement circ(const CoxeterElement& u, const CoxeterElement& v);

// True iff m(s,t) = 2 for every s in I, t in J. Throws if I and J overlap.
bool parabolics_commute(const CoxeterGroup& group, GenSet I, GenSet J);

}  // namespace rencox

#endif  // RENCOX_PARABOLIC_HPP_
