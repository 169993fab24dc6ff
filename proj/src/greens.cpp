#include "rencox/greens.hpp"

#include <algorithm>

namespace rencox {

bool related(const RennerElement& r, const RennerElement& s, GreensRelation rel) {
  if (&r.system() != &s.system())
    throw std::invalid_argument("elements belong to different systems");
  if (r.idem() != s.idem()) return false;
  switch (rel) {
    case GreensRelation::J:
      return true;
    case GreensRelation::L:
      return r.y() == s.y();
    case GreensRelation::R:
      return r.hybrid_standard_form().x == s.hybrid_standard_form().x;
    case GreensRelation::H:
      return r.y() == s.y() &&
             r.hybrid_standard_form().x == s.hybrid_standard_form().x;
  }
  return false;
}

std::vector<RennerElement> class_of(const RennerElement& r, GreensRelation rel) {
  std::vector<RennerElement> out;
  for (const RennerElement& s : r.system().enumerate_monoid())
    if (related(r, s, rel)) out.push_back(s);
  return out;
}

RennerElement class_extremum(const RennerElement& r, GreensRelation rel,
                             Epsilon eps, ExtremumKind kind) {
  const RennerSystem& base = r.system();
  // The minus order of a system is the plus order of its opposite, so both
  // cases run the same construction, in the matching lattice.
  const RennerSystem& work = eps == Epsilon::plus ? base : base.opposite();
  const RennerSystem& opp = work.opposite();
  const CoxeterGroup& g = work.group();

  VanillaForm vf = vanilla_form(work.convert(r));
  GenSet lam_minus = opp.idem(vf.e_minus).lam();
  GenSet lam_plus = work.idem(vf.e_plus).lam();
  CoxeterElement w0 = g.longest_element();

  if (kind == ExtremumKind::min) {
    vf.sigma_zero = project_double(lam_minus, w0, lam_plus);
    CoxeterElement side = project_double(lam_plus, w0, lam_minus);
    if (rel == GreensRelation::L || rel == GreensRelation::J)
      vf.sigma_minus = side;
    if (rel == GreensRelation::R || rel == GreensRelation::J)
      vf.sigma_plus = side;
  } else {
    vf.sigma_zero = project_double(opp.idem(vf.e_minus).lam_substar, w0,
                                   work.idem(vf.e_plus).lam_substar);
    if (rel == GreensRelation::L || rel == GreensRelation::J)
      vf.sigma_minus = g.identity();
    if (rel == GreensRelation::R || rel == GreensRelation::J)
      vf.sigma_plus = g.identity();
  }
  return base.convert(vanilla_product(vf));
}

std::vector<RennerElement> special_submonoid(const RennerSystem& sys,
                                             SpecialSet which, Epsilon eps) {
  GreensRelation rel = GreensRelation::H;
  switch (which) {
    case SpecialSet::GJ: rel = GreensRelation::L; break;
    case SpecialSet::JG: rel = GreensRelation::R; break;
    case SpecialSet::N: rel = GreensRelation::J; break;
    case SpecialSet::O: rel = GreensRelation::H; break;
  }
  std::vector<RennerElement> out;
  for (const RennerElement& r : sys.enumerate_monoid())
    if (r == class_extremum(r, rel, eps, ExtremumKind::min)) out.push_back(r);
  return out;
}

bool class_leq(const RennerElement& r, const RennerElement& s,
               GreensRelation rel, Epsilon eps) {
  return adherence_leq(class_extremum(r, rel, eps, ExtremumKind::max),
                       class_extremum(s, rel, eps, ExtremumKind::max), eps);
}

bool CounterexampleReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const CounterexampleClaim& c) { return c.pass; });
}

CounterexampleReport verify_counterexample(const RennerSystem& sys) {
  if (!sys.has_action() || sys.idem_action(0).degree() != 3)
    throw std::invalid_argument("the counterexample lives in the degree-3 rook monoid");
  RennerElement r = sys.parse_element("3,2,0");
  RennerElement s = sys.parse_element("3,2,1");
  RennerElement min_r =
      class_extremum(r, GreensRelation::H, Epsilon::plus, ExtremumKind::min);
  RennerElement min_s =
      class_extremum(s, GreensRelation::H, Epsilon::plus, ExtremumKind::min);

  CounterexampleReport report;
  report.claims.push_back({"r <=+ s", "true",
                           leq_plus(r, s) ? "true" : "false", leq_plus(r, s)});
  std::string min_r_str = sys.element_to_string(min_r);
  report.claims.push_back(
      {"min+H_r", "2,3,0", min_r_str, min_r_str == "2,3,0"});
  std::string min_s_str = sys.element_to_string(min_s);
  report.claims.push_back(
      {"min+H_s", "1,2,3", min_s_str, min_s_str == "1,2,3"});
  bool mono = leq_plus(min_r, min_s);
  report.claims.push_back({"min+H_r <=+ min+H_s", "false",
                           mono ? "true" : "false", !mono});
  return report;
}

}  // namespace rencox
