#include "rencox/parabolic.hpp"

namespace rencox {

RightCosetSplit project_right(const CoxeterElement& w, GenSet I) {
  const CoxeterGroup& g = w.group();
  CoxeterElement min = w;
  CoxeterElement par = g.identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : I)
      if (min.has_right_descent(s)) {
        min = min * g.generator(s);
        par = g.generator(s) * par;
        moved = true;
        break;
      }
  }
  return {min, par};
}

LeftCosetSplit project_left(GenSet I, const CoxeterElement& w) {
  const CoxeterGroup& g = w.group();
  CoxeterElement min = w;
  CoxeterElement par = g.identity();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : I)
      if (min.has_left_descent(s)) {
        min = g.generator(s) * min;
        par = par * g.generator(s);
        moved = true;
        break;
      }
  }
  return {par, min};
}

CoxeterElement project_double(GenSet I, const CoxeterElement& w, GenSet J) {
  return project_left(I, project_right(w, J).min).min;
}

bool is_min_double_coset_rep(const CoxeterElement& w, GenSet I, GenSet J) {
  return w.left_descents().disjoint(I) && w.right_descents().disjoint(J);
}

bool in_parabolic(const CoxeterElement& w, GenSet I) {
  return project_right(w, I).min.is_identity();
}

CoxeterElement circ(const CoxeterElement& u, const CoxeterElement& v) {
  if (&u.group() != &v.group())
    throw std::invalid_argument("elements belong to different groups");
  const CoxeterGroup& g = u.group();
  // Peel left descents of u (lowest index first); at each level the running
  // maximum x becomes max{x, sx}.
  std::vector<int> word = u.word();
  CoxeterElement x = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    CoxeterElement sx = g.generator(*it) * x;
    if (sx.length() > x.length()) x = sx;
  }
  return x;
}

bool parabolics_commute(const CoxeterGroup& group, GenSet I, GenSet J) {
  if (!I.disjoint(J))
    throw std::invalid_argument("generator subsets overlap");
  for (int s : I)
    for (int t : J)
      if (group.matrix().entry(s, t) != 2) return false;
  return true;
}

}  // namespace rencox
