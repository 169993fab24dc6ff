#include "rencox/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rencox {

namespace {

constexpr std::size_t kPairSuiteLimit = 250;  // caps |X|^2 and |X|^3 suites

struct Suite {
  std::string prefix;
  std::vector<PropertyResult> results;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({prefix + name, ok, ok ? "" : detail});
  }
  void skip(const std::string& name, const std::string& why) {
    results.push_back({prefix + name, true, "skipped: " + why});
  }
};

std::uint64_t splitmix(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<GenSet> all_subsets(int rank) {
  std::vector<GenSet> out;
  for (std::uint32_t b = 0; b < (1u << rank); ++b) out.push_back(GenSet::raw(b));
  return out;
}

}  // namespace

// ------------------------------------------------------------ group suites

std::vector<PropertyResult> verify_group_properties(const CoxeterGroup& g,
                                                    const std::string& tag) {
  Suite suite{"coxeter[" + tag + "] ", {}};
  const auto& W = g.elements();
  const std::size_t n = W.size();
  const CoxeterElement w0 = g.longest_element();
  const CoxeterElement one = g.identity();

  {
    bool ok = true;
    for (const auto& w : W) {
      if (w.inverse().length() != w.length()) ok = false;
      for (int s = 0; s < g.rank(); ++s) {
        int d = (g.generator(s) * w).length() - w.length();
        if (d != 1 && d != -1) ok = false;
      }
    }
    suite.check("length of inverse and single-step moves", ok);
  }
  {
    bool ok = (w0 * w0) == one;
    for (const auto& u : W)
      ok = ok && (w0 * u).length() == w0.length() - u.length() &&
           (u * w0).length() == w0.length() - u.length();
    suite.check("longest element duality", ok);
  }

  if (n > kPairSuiteLimit) {
    suite.skip("Bruhat and weak order suites", "group too large");
    return suite.results;
  }

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = bruhat_leq(W[i], W[j]);
  auto index = [&](const CoxeterElement& w) {
    for (std::size_t i = 0; i < n; ++i)
      if (W[i] == w) return i;
    throw std::logic_error("element not in enumeration");
  };

  {
    bool refl = true, anti = true, trans = true;
    for (std::size_t i = 0; i < n; ++i) {
      refl = refl && leq[i][i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) anti = false;
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) trans = false;
      }
    }
    suite.check("Bruhat order is a partial order", refl && anti && trans);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      ok = ok && leq[i][index(w0)];
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][j] && W[i].length() > W[j].length()) ok = false;
        if (leq[i][j] != bruhat_leq(W[i].inverse(), W[j].inverse())) ok = false;
        if (leq[i][j] != bruhat_leq(w0 * W[j], w0 * W[i])) ok = false;
      }
    }
    suite.check("Bruhat order: length, inverse and w0 duality", ok);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      ok = ok && weak_leq_left(W[i], w0) && weak_leq_right(W[i], w0) &&
           weak_leq_left(one, W[i]) && weak_leq_right(one, W[i]);
      for (std::size_t j = 0; j < n; ++j) {
        bool wl = weak_leq_left(W[i], W[j]), wr = weak_leq_right(W[i], W[j]);
        if ((wl || wr) && !leq[i][j]) ok = false;
        if (wl && weak_leq_left(W[j], W[i]) && i != j) ok = false;
      }
    }
    suite.check("weak orders imply Bruhat and are bounded by w0", ok);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!leq[i][j]) continue;
        std::size_t count = 0;
        for (std::size_t k = 0; k < n; ++k)
          if (leq[i][k] && leq[k][j]) ++count;
        if (W[j].length() < 60 &&
            count > (std::size_t{1} << W[j].length())) {
          ok = false;
          break;
        }
      }
    suite.check("Bruhat interval size bound", ok);
  }

  if (g.rank() <= 6) {
    const auto subsets = all_subsets(g.rank());
    bool proj_ok = true, double_ok = true, inter_ok = true, inv_ok = true;
    for (GenSet I : subsets) {
      for (const auto& w : W) {
        auto r = project_right(w, I);
        if (r.min * r.par != w ||
            r.min.length() + r.par.length() != w.length() ||
            !r.min.right_descents().disjoint(I) || !in_parabolic(r.par, I))
          proj_ok = false;
        auto l = project_left(I, w);
        if (l.par * l.min != w ||
            l.par.length() + l.min.length() != w.length() ||
            !l.min.left_descents().disjoint(I) || !in_parabolic(l.par, I))
          proj_ok = false;
      }
    }
    suite.check("one-sided projections are length-additive minima", proj_ok);

    for (GenSet I : subsets)
      for (GenSet J : subsets) {
        for (const auto& w : W) {
          CoxeterElement d = project_double(I, w, J);
          if (d != project_right(project_left(I, w).min, J).min) double_ok = false;
          if (!is_min_double_coset_rep(d, I, J)) double_ok = false;
          if (!bruhat_leq(d, w)) double_ok = false;
          if (project_double(J, w.inverse(), I) != d.inverse()) inv_ok = false;
        }
        if (n <= 30) {
          for (const auto& u : W)
            for (const auto& v : W)
              if (bruhat_leq(u, v) &&
                  !bruhat_leq(project_double(I, u, J), project_double(I, v, J)))
                double_ok = false;
          std::set<CoxeterElement> both, dbl;
          for (const auto& w : W) {
            if (w.left_descents().disjoint(I) && w.right_descents().disjoint(J))
              dbl.insert(w);
            if (project_left(I, w).min == w && project_right(w, J).min == w)
              both.insert(w);
          }
          if (both != dbl) inter_ok = false;
        }
      }
    suite.check("double-coset minima: order independence and monotonicity", double_ok);
    suite.check("minimal representatives: intersection identity", inter_ok);
    suite.check("minimal representatives: inverse identity", inv_ok);

    bool lemma_ok = true;
    for (GenSet I : subsets)
      for (GenSet J : subsets) {
        if (!J.subset_of(I)) continue;
        GenSet K = I - J;
        bool commute = parabolics_commute(g, J, K);
        const auto& WI = g.parabolic_elements(I);
        const auto& WJ = g.parabolic_elements(J);
        const auto& WK = g.parabolic_elements(K);
        std::set<CoxeterElement> products;
        bool unique = true;
        for (const auto& a : WK)
          for (const auto& b : WJ)
            if (!products.insert(a * b).second) unique = false;
        bool factors = unique && products.size() == WI.size() &&
                       std::all_of(WI.begin(), WI.end(), [&](const auto& w) {
                         return products.count(w) > 0;
                       });
        if (commute != factors) lemma_ok = false;
      }
    suite.check("commuting parabolics factor the subgroup", lemma_ok);

    bool weak_coset_ok = true;
    for (GenSet I : subsets) {
      GenSet Iconj = g.conjugate_genset_by_longest(I);
      for (const auto& u : W) {
        if (!u.right_descents().disjoint(I)) continue;
        for (const auto& a : g.parabolic_elements(Iconj))
          for (const auto& b : g.parabolic_elements(I))
            if (!weak_leq_left(u, a * w0 * b)) weak_coset_ok = false;
      }
    }
    suite.check("coset minima sit below the twisted longest coset", weak_coset_ok);
  } else {
    suite.skip("parabolic projection suites", "rank too large");
  }

  {
    bool ok = true;
    std::uint64_t rng = 12345;
    for (int trial = 0; trial < 200; ++trial) {
      const CoxeterElement& u = W[splitmix(rng) % n];
      const CoxeterElement& v = W[splitmix(rng) % n];
      CoxeterElement c = circ(u, v);
      for (const auto& up : W)
        for (const auto& vp : W)
          if (bruhat_leq(up, u) && bruhat_leq(vp, v) &&
              !bruhat_leq(up * vp, c))
            ok = false;
      bool in_set = false;
      for (const auto& up : W)
        if (bruhat_leq(up, u) && up * v == c) in_set = true;
      ok = ok && in_set;
      if ((c == u * v) != (u.length() + v.length() == c.length())) ok = false;
    }
    suite.check("optimization operator dominates all subword products", ok);
  }

  return suite.results;
}

// ----------------------------------------------------------- system suites

std::vector<PropertyResult> verify_system_properties(const RennerSystem& sys) {
  Suite suite{"system ", {}};
  const CoxeterGroup& g = sys.group();
  const CoxeterElement one = g.identity();
  const CoxeterElement w0 = g.longest_element();

  {
    auto violations = validate_system(sys);
    std::string detail;
    for (const auto& v : violations) detail += "[" + v.axiom + "] " + v.detail + "; ";
    suite.check("cross-section lattice axioms", violations.empty(), detail);
    // nothing downstream is meaningful over broken lattice data
    if (!violations.empty()) return suite.results;
  }

  const auto& R = sys.enumerate_monoid();
  const std::size_t n = R.size();

  {
    bool ok = true;
    for (const auto& r : R) {
      LeftForm lf = r.left_standard_form();
      if (!lf.x.right_descents().disjoint(sys.idem(lf.e).lam_substar)) ok = false;
      if (!lf.y.left_descents().disjoint(sys.idem(lf.e).lam())) ok = false;
      RightForm rf = r.right_standard_form();
      if (!rf.y.right_descents().disjoint(sys.idem(rf.e).lam())) ok = false;
      if (!rf.x.left_descents().disjoint(sys.idem(rf.e).lam_substar)) ok = false;
      if (sys.element(rf.y, rf.e, rf.x) != r) ok = false;
      HybridForm hf = r.hybrid_standard_form();
      if (!hf.x.right_descents().disjoint(sys.idem(hf.e).lam())) ok = false;
      if (!in_parabolic(hf.y, sys.idem(hf.e).lam_star)) ok = false;
      if (hf.z != lf.y || hf.x * hf.y != lf.x) ok = false;
      if (sys.element(hf.x * hf.y, hf.e, hf.z) != r) ok = false;
      if (sys.element(hf.x, hf.e, hf.y * hf.z) != r) ok = false;
    }
    suite.check("standard forms satisfy their coset constraints", ok);
  }

  if (n > kPairSuiteLimit) {
    suite.skip("pairwise suites", "monoid too large");
    return suite.results;
  }

  if (sys.has_action()) {
    bool ok = true;
    for (const auto& r : R)
      for (const auto& s : R)
        if (*(r * s).partial_perm() !=
            *r.partial_perm() * *s.partial_perm())
          ok = false;
    suite.check("standard-form product matches the concrete action", ok);
  }

  {
    bool ok = true;
    std::uint64_t rng = 99;
    std::size_t trials = n <= 40 ? 0 : 10000;
    if (trials == 0) {
      for (const auto& a : R)
        for (const auto& b : R)
          for (const auto& c : R)
            if ((a * b) * c != a * (b * c)) ok = false;
    } else {
      for (std::size_t t = 0; t < trials; ++t) {
        const auto& a = R[splitmix(rng) % n];
        const auto& b = R[splitmix(rng) % n];
        const auto& c = R[splitmix(rng) % n];
        if ((a * b) * c != a * (b * c)) ok = false;
      }
    }
    suite.check("multiplication is associative", ok);
  }

  {
    bool ok = true;
    for (const auto& r : R) {
      RennerElement st = r.star();
      if (st.star() != r) ok = false;
      if (r * st * r != r || st * r * st != st) ok = false;
    }
    suite.check("star is the inverse of the inverse monoid", ok);
  }

  {
    bool ok = true;
    for (int e = 0; e < sys.num_idems(); ++e)
      for (int f = 0; f < sys.num_idems(); ++f)
        for (const auto& w : g.elements()) {
          if (!is_min_double_coset_rep(w, sys.idem(e).lam(), sys.idem(f).lam()))
            continue;
          int gm = sys.godelle_meet(e, w, f);
          RennerElement ewf =
              right_unit_mult(sys.idem_element(e), w) * sys.idem_element(f);
          RennerElement fwe = right_unit_mult(sys.idem_element(f), w.inverse()) *
                              sys.idem_element(e);
          if (ewf != sys.idem_element(gm) || fwe != sys.idem_element(gm))
            ok = false;
        }
    suite.check("Godelle's meet equals both sandwich products", ok);
  }

  {
    bool normal_ok = true, product_ok = true;
    for (int e = 0; e < sys.num_idems(); ++e) {
      GenSet lam = sys.idem(e).lam();
      GenSet sub = sys.idem(e).lam_substar;
      GenSet star = sys.idem(e).lam_star;
      for (const auto& v : g.parabolic_elements(lam))
        for (const auto& u : g.parabolic_elements(sub))
          if (!in_parabolic(v * u * v.inverse(), sub)) normal_ok = false;
      std::set<CoxeterElement> prods;
      for (const auto& a : g.parabolic_elements(star))
        for (const auto& b : g.parabolic_elements(sub))
          if (!prods.insert(a * b).second) product_ok = false;
      if (prods.size() != g.parabolic_elements(lam).size()) product_ok = false;
    }
    suite.check("stabilizer parabolic is normal in the centralizer", normal_ok);
    suite.check("centralizer splits as star times stabilizer", product_ok);
  }

  std::vector<std::vector<bool>> leqP(n, std::vector<bool>(n)),
      leqM(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      leqP[i][j] = leq_plus(R[i], R[j]);
      leqM[i][j] = leq_minus(R[i], R[j]);
    }
  auto index = [&](const RennerElement& r) {
    for (std::size_t i = 0; i < n; ++i)
      if (R[i] == r) return i;
    throw std::logic_error("element not in enumeration");
  };

  for (int which = 0; which < 2; ++which) {
    const auto& leq = which == 0 ? leqP : leqM;
    bool refl = true, anti = true, trans = true;
    for (std::size_t i = 0; i < n; ++i) {
      refl = refl && leq[i][i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) anti = false;
        if (!leq[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) trans = false;
      }
    }
    suite.check(std::string("adherence order ") + (which == 0 ? "+" : "-") +
                    " is a partial order",
                refl && anti && trans);
  }

  if (sys.unit_idem()) {
    bool ok = true;
    for (const auto& u : g.elements())
      for (const auto& v : g.elements()) {
        bool b = bruhat_leq(u, v);
        if (leq_plus(sys.unit_element(u), sys.unit_element(v)) != b) ok = false;
        if (leq_minus(sys.unit_element(u), sys.unit_element(v)) != b) ok = false;
      }
    suite.check("restriction to the unit group is the Bruhat order", ok);
  }

  {
    bool ok = true;
    std::vector<RennerElement> idems;
    for (const auto& r : R)
      if (r.is_idempotent()) idems.push_back(r);
    for (const auto& e : idems)
      for (const auto& f : idems) {
        bool natural = (e * f == e) && (f * e == e);
        if (leq_plus(e, f) != natural || leq_minus(e, f) != natural) ok = false;
      }
    suite.check("restriction to idempotents is the natural order", ok);
  }

  {
    const RennerSystem& opp = sys.opposite();
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool p = leqP[i][j];
        const RennerElement &r = R[i], &s = R[j];
        if (p != leq_minus(r.star(), s.star())) ok = false;
        if (p != leq_plus(opp.convert(conjugate_by_longest(r)),
                          opp.convert(conjugate_by_longest(s))))
          ok = false;
        if (p != leq_minus(opp.convert(r), opp.convert(s))) ok = false;
        if (p != leq_plus(opp.convert(r.star()), opp.convert(s.star()))) ok = false;
        if (p != leq_minus(conjugate_by_longest(r), conjugate_by_longest(s)))
          ok = false;
      }
    suite.check("the six adherence formulations agree", ok);
  }

  {
    const RennerSystem& opp = sys.opposite();
    bool ok = true;
    for (const auto& r : R) {
      VanillaForm vf = vanilla_form(r);
      if (vanilla_product(vf) != r) ok = false;
      if (!vf.sigma_plus.left_descents().disjoint(sys.idem(vf.e_plus).lam()))
        ok = false;
      if (!vf.sigma_minus.right_descents().disjoint(opp.idem(vf.e_minus).lam()))
        ok = false;
      if (!weak_leq_left(vf.sigma_plus.inverse(), vf.sigma_zero)) ok = false;
      if (!weak_leq_right(vf.sigma_minus.inverse(), vf.sigma_zero)) ok = false;
      if (vf.sigma_minus * vf.sigma_zero != r.x()) ok = false;
      RightForm rf = opp.convert(r).right_standard_form();
      if (rf.y != vf.sigma_minus || rf.x != vf.sigma_zero * vf.sigma_plus)
        ok = false;
      // sigma_0 lies in the stated double-coset slice, both descriptions
      CoxeterElement mid = project_double(opp.idem(vf.e_minus).lam_substar, w0,
                                          sys.idem(vf.e_plus).lam_substar);
      bool in_first = false;
      for (const auto& a : g.parabolic_elements(opp.idem(vf.e_minus).lam_star))
        for (const auto& b : g.parabolic_elements(sys.idem(vf.e_plus).lam_star))
          if (a * mid * b == vf.sigma_zero) in_first = true;
      if (!in_first) ok = false;
      bool in_second = false;
      for (const auto& a : g.parabolic_elements(opp.idem(vf.e_minus).lam()))
        for (const auto& b : g.parabolic_elements(sys.idem(vf.e_plus).lam()))
          if (project_double(opp.idem(vf.e_minus).lam_substar, a * w0 * b,
                             sys.idem(vf.e_plus).lam_substar) == vf.sigma_zero)
            in_second = true;
      if (!in_second) ok = false;
    }
    suite.check("vanilla form: constraints, weak-order facts, slice membership", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq_plus_vanilla(R[i], R[j]) != leqP[i][j]) ok = false;
    suite.check("vanilla-form order criterion agrees with the definition", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (related(R[i], R[j], GreensRelation::L) &&
            leq_fast_in_class(R[i], R[j], GreensRelation::L) != leqP[i][j])
          ok = false;
        if (related(R[i], R[j], GreensRelation::R) &&
            leq_fast_in_class(R[i], R[j], GreensRelation::R) != leqM[i][j])
          ok = false;
        if (related(R[i], R[j], GreensRelation::H)) {
          if (leq_fast_in_class(R[i], R[j], GreensRelation::H) != leqP[i][j])
            ok = false;
          if (leqP[i][j] != leqM[i][j]) ok = false;
        }
      }
    suite.check("in-class comparisons reduce to one Bruhat test", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool H = related(R[i], R[j], GreensRelation::H);
        bool L = related(R[i], R[j], GreensRelation::L);
        bool Rr = related(R[i], R[j], GreensRelation::R);
        bool J = related(R[i], R[j], GreensRelation::J);
        if (H && !(L && Rr)) ok = false;
        if ((L || Rr) && !J) ok = false;
        if (J) {
          bool witness = false;
          for (std::size_t k = 0; k < n; ++k)
            if (related(R[i], R[k], GreensRelation::R) &&
                related(R[k], R[j], GreensRelation::L))
              witness = true;
          if (!witness) ok = false;
        }
      }
    suite.check("Green's relations nest and J factors through L and R", ok);
  }

  {
    bool ok = true;
    const RennerSystem& opp = sys.opposite();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!related(R[i], R[j], GreensRelation::J) || !leqP[i][j]) continue;
        VanillaForm vr = vanilla_form(R[i]);
        VanillaForm vs = vanilla_form(R[j]);
        bool found = false;
        for (const auto& wm : g.parabolic_elements(opp.idem(vr.e_minus).lam_star)) {
          if (!bruhat_leq(vs.sigma_minus * wm.inverse(), vr.sigma_minus)) continue;
          for (const auto& wp : g.parabolic_elements(sys.idem(vr.e_plus).lam_star)) {
            if (!bruhat_leq(vr.sigma_zero, wm * vs.sigma_zero * wp)) continue;
            if (!bruhat_leq(wp.inverse() * vs.sigma_plus, vr.sigma_plus)) continue;
            VanillaForm vt = vr;
            vt.sigma_zero = wm * vs.sigma_zero;
            vt.sigma_plus = vs.sigma_plus;
            VanillaForm vu = vr;
            vu.sigma_minus = vs.sigma_minus;
            vu.sigma_zero = vs.sigma_zero * wp;
            RennerElement t = vanilla_product(vt);
            RennerElement u = vanilla_product(vu);
            if (related(R[i], t, GreensRelation::R) &&
                related(t, R[j], GreensRelation::L) &&
                related(R[i], u, GreensRelation::L) &&
                related(u, R[j], GreensRelation::R) && leqP[i][index(t)] &&
                leqP[index(t)][j] && leqP[i][index(u)] && leqP[index(u)][j])
              found = true;
            if (found) break;
          }
          if (found) break;
        }
        if (!found) ok = false;
      }
    suite.check("comparable J-related pairs admit ordered L/R interpolants", ok);
  }

  const GreensRelation rels[4] = {GreensRelation::J, GreensRelation::L,
                                  GreensRelation::R, GreensRelation::H};
  {
    bool scan_ok = true, component_ok = true;
    const RennerSystem& opp = sys.opposite();
    for (const auto& r : R)
      for (GreensRelation rel : rels)
        for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
          const auto& leq = eps == Epsilon::plus ? leqP : leqM;
          RennerElement mn = class_extremum(r, rel, eps, ExtremumKind::min);
          RennerElement mx = class_extremum(r, rel, eps, ExtremumKind::max);
          if (!related(r, mn, rel) || !related(r, mx, rel)) scan_ok = false;
          for (std::size_t k = 0; k < n; ++k)
            if (related(r, R[k], rel) &&
                (!leq[index(mn)][k] || !leq[k][index(mx)]))
              scan_ok = false;
          const RennerSystem& work = eps == Epsilon::plus ? sys : opp;
          VanillaForm vf = vanilla_form(work.convert(mn));
          GenSet lam_m = work.opposite().idem(vf.e_minus).lam();
          GenSet lam_p = work.idem(vf.e_plus).lam();
          if (vf.sigma_zero != project_double(lam_m, w0, lam_p))
            component_ok = false;
          VanillaForm vx = vanilla_form(work.convert(mx));
          if (vx.sigma_zero !=
              project_double(work.opposite().idem(vx.e_minus).lam_substar, w0,
                             work.idem(vx.e_plus).lam_substar))
            component_ok = false;
          if (rel == GreensRelation::L || rel == GreensRelation::J) {
            if (vf.sigma_minus != project_double(lam_p, w0, lam_m))
              component_ok = false;
            if (vx.sigma_minus != one) component_ok = false;
          }
          if (rel == GreensRelation::R || rel == GreensRelation::J) {
            if (vf.sigma_plus != project_double(lam_p, w0, lam_m))
              component_ok = false;
            if (vx.sigma_plus != one) component_ok = false;
          }
        }
    suite.check("class extrema bound their classes", scan_ok);
    suite.check("class extrema carry the prescribed vanilla parts", component_ok);
  }

  {
    bool closed_ok = true, star_ok = true, unique_ok = true, flip_ok = true;
    std::map<int, std::vector<RennerElement>> sets;
    for (Epsilon eps : {Epsilon::plus, Epsilon::minus})
      for (SpecialSet which : {SpecialSet::GJ, SpecialSet::JG, SpecialSet::N,
                               SpecialSet::O}) {
        auto set = special_submonoid(sys, which, eps);
        std::set<RennerElement> in(set.begin(), set.end());
        for (const auto& a : set)
          for (const auto& b : set)
            if (!in.count(a * b)) closed_ok = false;
        if (which == SpecialSet::O) {
          for (const auto& a : set)
            if (!in.count(a.star())) star_ok = false;
          sets[eps == Epsilon::plus ? 0 : 1] = set;
        }
        if (which == SpecialSet::N) {
          std::set<RennerElement> gj, jg;
          for (const auto& a : special_submonoid(sys, SpecialSet::GJ, eps))
            gj.insert(a);
          for (const auto& a : special_submonoid(sys, SpecialSet::JG, eps))
            jg.insert(a);
          for (const auto& a : R) {
            bool expect = gj.count(a) && jg.count(a);
            if (expect != (in.count(a) > 0)) unique_ok = false;
          }
        }
        GreensRelation rel = which == SpecialSet::GJ  ? GreensRelation::L
                             : which == SpecialSet::JG ? GreensRelation::R
                             : which == SpecialSet::N  ? GreensRelation::J
                                                       : GreensRelation::H;
        for (const auto& r : R) {
          std::size_t hits = 0;
          for (const auto& a : set)
            if (related(r, a, rel)) ++hits;
          if (hits != 1) unique_ok = false;
        }
      }
    if (sets[0] != sets[1]) star_ok = false;
    // max sets are the w0 translates of the min sets
    for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
      std::set<RennerElement> maxH, maxL, w0O, Ow0, w0GJ;
      for (const auto& r : R) {
        if (r == class_extremum(r, GreensRelation::H, eps, ExtremumKind::max))
          maxH.insert(r);
        if (r == class_extremum(r, GreensRelation::L, eps, ExtremumKind::max))
          maxL.insert(r);
      }
      for (const auto& a : special_submonoid(sys, SpecialSet::O, eps)) {
        w0O.insert(left_unit_mult(w0, a));
        Ow0.insert(right_unit_mult(a, w0));
      }
      for (const auto& a : special_submonoid(sys, SpecialSet::GJ, eps))
        w0GJ.insert(left_unit_mult(w0, a));
      if (w0O != maxH || Ow0 != maxH || w0GJ != maxL) flip_ok = false;
    }
    std::set<RennerElement> maxJP, maxJM, w0Lam, Lamw0;
    for (const auto& r : R) {
      if (r == class_extremum(r, GreensRelation::J, Epsilon::plus, ExtremumKind::max))
        maxJP.insert(r);
      if (r == class_extremum(r, GreensRelation::J, Epsilon::minus, ExtremumKind::max))
        maxJM.insert(r);
    }
    for (int e = 0; e < sys.num_idems(); ++e) {
      w0Lam.insert(left_unit_mult(w0, sys.idem_element(e)));
      Lamw0.insert(right_unit_mult(sys.idem_element(e), w0));
    }
    if (w0Lam != maxJP || Lamw0 != maxJM) flip_ok = false;
    suite.check("minimum submonoids are closed under products", closed_ok);
    suite.check("the H-minimum monoid is star-closed and epsilon-free", star_ok);
    suite.check("each class meets its minimum set exactly once", unique_ok);
    suite.check("maximum sets are w0 translates of minimum sets", flip_ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (leqP[i][j]) {
          RennerElement a = class_extremum(R[i], GreensRelation::L,
                                           Epsilon::plus, ExtremumKind::min);
          RennerElement b = class_extremum(R[j], GreensRelation::L,
                                           Epsilon::plus, ExtremumKind::min);
          if (!leqP[index(a)][index(b)]) ok = false;
        }
        if (leqM[i][j]) {
          RennerElement a = class_extremum(R[i], GreensRelation::R,
                                           Epsilon::minus, ExtremumKind::min);
          RennerElement b = class_extremum(R[j], GreensRelation::R,
                                           Epsilon::minus, ExtremumKind::min);
          if (!leqM[index(a)][index(b)]) ok = false;
        }
      }
    suite.check("L-minima transport along + and R-minima along -", ok);
  }

  {
    bool ok = true;
    for (const auto& r : R)
      for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
        const auto& leq = eps == Epsilon::plus ? leqP : leqM;
        RennerElement maxH =
            class_extremum(r, GreensRelation::H, eps, ExtremumKind::max);
        RennerElement maxJ =
            class_extremum(r, GreensRelation::J, eps, ExtremumKind::max);
        RennerElement minH =
            class_extremum(r, GreensRelation::H, eps, ExtremumKind::min);
        RennerElement minJ =
            class_extremum(r, GreensRelation::J, eps, ExtremumKind::min);
        if (!leq[index(maxH)][index(maxJ)]) ok = false;
        if (!leq[index(minJ)][index(minH)]) ok = false;
      }
    suite.check("coarser classes have larger maxima and smaller minima", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (!leqP[i][k] && !leqM[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          bool insideP = leqP[i][j] && leqP[j][k];
          bool insideM = leqM[i][j] && leqM[j][k];
          if (!insideP && !insideM) continue;
          for (GreensRelation rel : rels) {
            if (!related(R[i], R[k], rel)) continue;
            if ((insideP && leqP[i][k]) || (insideM && leqM[i][k]))
              if (!related(R[i], R[j], rel)) ok = false;
          }
        }
      }
    suite.check("chains never leave and re-enter a class", ok);
  }

  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
          const auto& leq = eps == Epsilon::plus ? leqP : leqM;
          if (!leq[i][j]) continue;
          if (related(R[i], R[j], GreensRelation::L)) {
            RennerElement a = left_unit_mult(w0, R[i]);
            RennerElement b = left_unit_mult(w0, R[j]);
            if (!related(a, b, GreensRelation::L) || !leq[index(b)][index(a)])
              ok = false;
          }
          if (related(R[i], R[j], GreensRelation::R)) {
            RennerElement a = right_unit_mult(R[i], w0);
            RennerElement b = right_unit_mult(R[j], w0);
            if (!related(a, b, GreensRelation::R) || !leq[index(b)][index(a)])
              ok = false;
          }
        }
    suite.check("w0 reverses the order within L- and R-classes", ok);
  }

  {
    bool ok = true;
    for (GreensRelation rel : rels)
      for (Epsilon eps : {Epsilon::plus, Epsilon::minus}) {
        const auto& leq = eps == Epsilon::plus ? leqP : leqM;
        // one representative per class
        std::vector<std::size_t> reps;
        for (std::size_t i = 0; i < n; ++i) {
          bool fresh = true;
          for (std::size_t r : reps)
            if (related(R[i], R[r], rel)) fresh = false;
          if (fresh) reps.push_back(i);
        }
        for (std::size_t a : reps)
          for (std::size_t b : reps) {
            bool mx = class_leq(R[a], R[b], rel, eps);
            bool mn = leq[index(class_extremum(R[a], rel, eps, ExtremumKind::min))]
                         [index(class_extremum(R[b], rel, eps, ExtremumKind::min))];
            bool ex = false;
            for (std::size_t i = 0; i < n && !ex; ++i) {
              if (!related(R[i], R[a], rel)) continue;
              for (std::size_t j = 0; j < n; ++j)
                if (related(R[j], R[b], rel) && leq[i][j]) {
                  ex = true;
                  break;
                }
            }
            if (mx != ex) ok = false;
            if (rel != GreensRelation::H && mn != ex) ok = false;
          }
      }
    suite.check("class order: max and existential criteria coincide", ok);
  }

  return suite.results;
}

std::vector<PropertyResult> run_full_verification(const RennerSystem& sys) {
  std::vector<PropertyResult> out;
  CoxeterGroup s3(CoxeterMatrix::type_a(2));
  CoxeterGroup s4(CoxeterMatrix::type_a(3));
  CoxeterGroup b2(CoxeterMatrix::type_b(2));
  for (auto& r : verify_group_properties(s3, "S3")) out.push_back(std::move(r));
  for (auto& r : verify_group_properties(s4, "S4")) out.push_back(std::move(r));
  for (auto& r : verify_group_properties(b2, "B2")) out.push_back(std::move(r));
  for (auto& r : verify_group_properties(sys.group(), "W"))
    out.push_back(std::move(r));
  for (auto& r : verify_system_properties(sys)) out.push_back(std::move(r));
  if (sys.has_action() && sys.idem_action(0).degree() == 3) {
    CounterexampleReport rep = verify_counterexample(sys);
    std::string detail;
    for (const auto& c : rep.claims)
      if (!c.pass) detail += c.name + " expected " + c.expected + " got " + c.actual + "; ";
    out.push_back({"rook3 H-minimum counterexample", rep.all_pass(), detail});
  }
  return out;
}

}  // namespace rencox
