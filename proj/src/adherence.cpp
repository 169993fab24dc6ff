#include "rencox/adherence.hpp"

#include <set>

namespace rencox {

namespace {

// All products a*b for a in W_I, b in W_J, deduplicated.
std::vector<CoxeterElement> product_set(const CoxeterGroup& g, GenSet I, GenSet J) {
  std::set<CoxeterElement> out;
  for (const CoxeterElement& a : g.parabolic_elements(I))
    for (const CoxeterElement& b : g.parabolic_elements(J)) out.insert(a * b);
  return {out.begin(), out.end()};
}

void check_same_system(const RennerElement& r, const RennerElement& s) {
  if (&r.system() != &s.system())
    throw std::invalid_argument("elements belong to different systems");
}

}  // namespace

VanillaForm vanilla_form(const RennerElement& r) {
  const RennerSystem& sys = r.system();
  const RennerSystem& opp = sys.opposite();
  CoxeterElement w0 = sys.group().longest_element();
  const int ep = r.idem();
  const int em = ep;  // the conjugate idempotent keeps its index
  auto split = project_right(r.x() * w0, opp.idem(em).lam());
  CoxeterElement sigma_zero =
      project_double(opp.idem(em).lam_substar, split.par * w0,
                     sys.idem(ep).lam_substar);
  return {split.min, em, std::move(sigma_zero), ep, r.y(), &sys};
}

RennerElement vanilla_product(const VanillaForm& vf) {
  const RennerSystem& sys = *vf.system;
  CoxeterElement w0 = sys.group().longest_element();
  // e_- equals w0 e w0 for the primary idempotent e of the same index, so the
  // five-part product collapses to u e v f w with the units folded into w0.
  return sys.compose(vf.sigma_minus * w0, vf.e_minus, w0 * vf.sigma_zero,
                     vf.e_plus, vf.sigma_plus);
}

namespace {

std::optional<CoxeterElement> plus_witness(const RennerElement& r,
                                           const RennerElement& s) {
  check_same_system(r, s);
  const RennerSystem& sys = r.system();
  if (!sys.idem_leq(r.idem(), s.idem())) return std::nullopt;
  for (const CoxeterElement& w :
       product_set(sys.group(), sys.idem(s.idem()).lam_star,
                   sys.idem(r.idem()).lam_substar))
    if (bruhat_leq(r.x(), s.x() * w) && bruhat_leq(w.inverse() * s.y(), r.y()))
      return w;
  return std::nullopt;
}

std::optional<CoxeterElement> minus_witness(const RennerElement& r,
                                            const RennerElement& s) {
  check_same_system(r, s);
  const RennerSystem& sys = r.system();
  if (!sys.idem_leq(r.idem(), s.idem())) return std::nullopt;
  RightForm rf = r.right_standard_form();
  RightForm sf = s.right_standard_form();
  for (const CoxeterElement& w :
       product_set(sys.group(), sys.idem(r.idem()).lam_substar,
                   sys.idem(s.idem()).lam_star))
    if (bruhat_leq(rf.x, w * sf.x) && bruhat_leq(sf.y * w.inverse(), rf.y))
      return w;
  return std::nullopt;
}

}  // namespace

bool leq_plus(const RennerElement& r, const RennerElement& s) {
  return plus_witness(r, s).has_value();
}

bool leq_minus(const RennerElement& r, const RennerElement& s) {
  return minus_witness(r, s).has_value();
}

std::optional<CoxeterElement> leq_plus_witness(const RennerElement& r,
                                               const RennerElement& s) {
  return plus_witness(r, s);
}

std::optional<CoxeterElement> leq_minus_witness(const RennerElement& r,
                                                const RennerElement& s) {
  return minus_witness(r, s);
}

bool adherence_leq(const RennerElement& r, const RennerElement& s, Epsilon eps) {
  return eps == Epsilon::plus ? leq_plus(r, s) : leq_minus(r, s);
}

bool leq_plus_vanilla(const RennerElement& r, const RennerElement& s) {
  check_same_system(r, s);
  const RennerSystem& sys = r.system();
  const RennerSystem& opp = sys.opposite();
  const CoxeterGroup& g = sys.group();
  VanillaForm vr = vanilla_form(r);
  VanillaForm vs = vanilla_form(s);
  if (!sys.idem_leq(vr.e_plus, vs.e_plus)) return false;
  if (!sys.idem_leq(vr.e_minus, vs.e_minus)) return false;  // same meet table
  std::vector<CoxeterElement> wminus =
      product_set(g, opp.idem(vr.e_minus).lam_substar,
                  opp.idem(vs.e_minus).lam_star);
  std::vector<CoxeterElement> wplus =
      product_set(g, sys.idem(vs.e_plus).lam_star,
                  sys.idem(vr.e_plus).lam_substar);
  for (const CoxeterElement& wm : wminus) {
    if (!bruhat_leq(vs.sigma_minus * wm.inverse(), vr.sigma_minus)) continue;
    CoxeterElement mid = wm * vs.sigma_zero;
    for (const CoxeterElement& wp : wplus)
      if (bruhat_leq(vr.sigma_zero, mid * wp) &&
          bruhat_leq(wp.inverse() * vs.sigma_plus, vr.sigma_plus))
        return true;
  }
  return false;
}

bool leq_fast_in_class(const RennerElement& r, const RennerElement& s,
                       GreensRelation rel) {
  check_same_system(r, s);
  if (r.idem() != s.idem())
    throw std::invalid_argument("elements are not related");
  switch (rel) {
    case GreensRelation::L:
      if (r.y() != s.y())
        throw std::invalid_argument("elements are not L-related");
      return bruhat_leq(r.x(), s.x());
    case GreensRelation::R: {
      RightForm rf = r.right_standard_form();
      RightForm sf = s.right_standard_form();
      if (rf.y != sf.y)
        throw std::invalid_argument("elements are not R-related");
      return bruhat_leq(rf.x, sf.x);
    }
    case GreensRelation::H: {
      HybridForm hr = r.hybrid_standard_form();
      HybridForm hs = s.hybrid_standard_form();
      if (hr.x != hs.x || hr.z != hs.z)
        throw std::invalid_argument("elements are not H-related");
      return bruhat_leq(hr.y, hs.y);
    }
    case GreensRelation::J:
      throw std::invalid_argument(
          "no single-comparison test exists for J-related elements");
  }
  return false;
}

}  // namespace rencox
