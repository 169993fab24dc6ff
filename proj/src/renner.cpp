#include "rencox/renner.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace rencox {

// ------------------------------------------------------------ PartialPerm

PartialPerm::PartialPerm(std::vector<int> v) : v_(std::move(v)) {
  const int n = degree();
  std::vector<bool> hit(n + 1, false);
  for (int x : v_) {
    if (x < 0 || x > n)
      throw std::invalid_argument("partial permutation entry out of range");
    if (x > 0) {
      if (hit[x]) throw std::invalid_argument("partial permutation not injective");
      hit[x] = true;
    }
  }
}

PartialPerm PartialPerm::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return PartialPerm(std::move(v));
}

PartialPerm PartialPerm::partial_identity(int n, const std::vector<int>& domain) {
  std::vector<int> v(n, 0);
  for (int d : domain) v[d - 1] = d;
  return PartialPerm(std::move(v));
}

int PartialPerm::rank() const {
  return static_cast<int>(std::count_if(v_.begin(), v_.end(),
                                        [](int x) { return x > 0; }));
}

std::vector<int> PartialPerm::domain() const {
  std::vector<int> out;
  for (int j = 1; j <= degree(); ++j)
    if (v_[j - 1] > 0) out.push_back(j);
  return out;
}

std::vector<int> PartialPerm::range() const {
  std::vector<int> out;
  for (int x : v_)
    if (x > 0) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

PartialPerm PartialPerm::operator*(const PartialPerm& o) const {
  if (degree() != o.degree())
    throw std::invalid_argument("partial permutations of different degree");
  std::vector<int> v(degree(), 0);
  for (int j = 0; j < degree(); ++j)
    if (o.v_[j] > 0) v[j] = v_[o.v_[j] - 1];
  return PartialPerm(std::move(v));
}

PartialPerm PartialPerm::transpose() const {
  std::vector<int> v(degree(), 0);
  for (int j = 0; j < degree(); ++j)
    if (v_[j] > 0) v[v_[j] - 1] = j + 1;
  return PartialPerm(std::move(v));
}

std::string PartialPerm::to_string() const {
  std::string out;
  for (int x : v_) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

PartialPerm PartialPerm::parse(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int x = std::stoi(item, &pos);
    if (pos != item.size() || x < 0)
      throw std::invalid_argument("bad partial permutation entry '" + item + "'");
    v.push_back(x);
  }
  if (v.empty()) throw std::invalid_argument("empty partial permutation literal");
  return PartialPerm(std::move(v));
}

// ---------------------------------------------------------- RennerElement

RightForm RennerElement::right_standard_form() const {
  const RennerSystem& sys = *sys_;
  GenSet lam = sys.idem(e_).lam();
  GenSet lsub = sys.idem(e_).lam_substar;
  auto split = project_right(x_, lam);  // x = y_rf * c with c in W_{lam*(e)}
  CoxeterElement x_rf = project_left(lsub, split.par * y_).min;
  return {split.min, e_, x_rf};
}

HybridForm RennerElement::hybrid_standard_form() const {
  const RennerSystem& sys = *sys_;
  GenSet lam = sys.idem(e_).lam();
  auto split = project_right(x_, lam);
  return {split.min, e_, split.par, y_};
}

RennerElement RennerElement::operator*(const RennerElement& o) const {
  return sys_->multiply(*this, o);
}

RennerElement RennerElement::star() const { return sys_->star(*this); }

bool RennerElement::operator<(const RennerElement& o) const {
  if (e_ != o.e_) return e_ < o.e_;
  if (x_.value() != o.x_.value()) return x_.value() < o.x_.value();
  return y_.value() < o.y_.value();
}

std::size_t RennerElement::hash() const {
  std::size_t h = x_.hash();
  h = h * 1099511628211ull ^ static_cast<std::size_t>(e_);
  h = h * 1099511628211ull ^ y_.hash();
  return h;
}

// ----------------------------------------------------------- RennerSystem

RennerSystem::RennerSystem(std::shared_ptr<const CoxeterGroup> group,
                           std::vector<LatticeIdem> idems,
                           std::vector<std::vector<int>> meet,
                           std::vector<PartialPerm> action)
    : group_(std::move(group)),
      idems_(std::move(idems)),
      meet_(std::move(meet)),
      action_(std::move(action)) {
  if (!group_) throw std::invalid_argument("null group");
  const int k = num_idems();
  if (k == 0) throw std::invalid_argument("empty cross-section lattice");
  if (static_cast<int>(meet_.size()) != k)
    throw std::invalid_argument("meet table has wrong shape");
  std::set<std::string> names;
  for (int e = 0; e < k; ++e) {
    const LatticeIdem& idem = idems_[e];
    if (idem.name.empty() ||
        idem.name.find_first_of(" |\t") != std::string::npos)
      throw std::invalid_argument("bad idempotent name");
    if (!names.insert(idem.name).second)
      throw std::invalid_argument("duplicate idempotent name " + idem.name);
    if (!idem.lam_star.subset_of(GenSet::all(group_->rank())) ||
        !idem.lam_substar.subset_of(GenSet::all(group_->rank())))
      throw std::invalid_argument("type map index out of range");
    if (static_cast<int>(meet_[e].size()) != k)
      throw std::invalid_argument("meet table has wrong shape");
    for (int m : meet_[e])
      if (m < 0 || m >= k)
        throw std::invalid_argument("meet table entry out of range");
  }
  if (!action_.empty()) {
    if (static_cast<int>(action_.size()) != k)
      throw std::invalid_argument("action must cover every idempotent");
    int n = action_[0].degree();
    if (!group_->is_one_line_model(n))
      throw std::invalid_argument(
          "concrete action requires the one-line permutation model");
    for (const PartialPerm& p : action_)
      if (p.degree() != n)
        throw std::invalid_argument("action degrees differ");
  }
  // The unit idempotent: top of the meet order, centralized by everything,
  // stabilized by nothing.
  for (int e = 0; e < k; ++e) {
    bool top = true;
    for (int f = 0; f < k; ++f)
      if (meet_[e][f] != f) top = false;
    if (top && idems_[e].lam() == GenSet::all(group_->rank()) &&
        idems_[e].lam_substar.empty())
      unit_idem_ = e;
  }
}

int RennerSystem::idem_by_name(const std::string& name) const {
  for (int e = 0; e < num_idems(); ++e)
    if (idems_[e].name == name) return e;
  throw std::invalid_argument("unknown idempotent '" + name + "'");
}

const RennerSystem& RennerSystem::opposite() const {
  if (primary_) return *primary_;
  if (!opposite_) build_opposite();
  return *opposite_;
}

bool RennerSystem::same_family(const RennerSystem& o) const {
  const RennerSystem* a = primary_ ? primary_ : this;
  const RennerSystem* b = o.primary_ ? o.primary_ : &o;
  return a == b;
}

void RennerSystem::build_opposite() const {
  const CoxeterGroup& g = *group_;
  std::vector<LatticeIdem> idems;
  idems.reserve(idems_.size());
  for (const LatticeIdem& e : idems_)
    idems.push_back({e.name + "-", g.conjugate_genset_by_longest(e.lam_star),
                     g.conjugate_genset_by_longest(e.lam_substar)});
  std::vector<PartialPerm> action;
  if (has_action()) {
    PartialPerm w0(g.one_line(g.longest_element()));
    for (const PartialPerm& p : action_) action.push_back(w0 * p * w0);
  }
  opposite_ = std::unique_ptr<RennerSystem>(
      new RennerSystem(group_, std::move(idems), meet_, std::move(action)));
  opposite_->primary_ = this;
}

RennerElement RennerSystem::element(const CoxeterElement& u, int e,
                                    const CoxeterElement& v) const {
  if (e < 0 || e >= num_idems())
    throw std::invalid_argument("idempotent index out of range");
  GenSet lam = idems_[e].lam();
  GenSet lsub = idems_[e].lam_substar;
  auto vsplit = project_left(lam, v);
  CoxeterElement alpha = project_right(vsplit.par, lsub).min;
  CoxeterElement x = project_right(u * alpha, lsub).min;
  std::optional<PartialPerm> pp;
  if (has_action()) {
    PartialPerm pu(group_->one_line(u)), pv(group_->one_line(v));
    pp = pu * action_[e] * pv;
  }
  return RennerElement(this, std::move(x), e, vsplit.min, std::move(pp));
}

RennerElement RennerSystem::idem_element(int e) const {
  return element(group_->identity(), e, group_->identity());
}

RennerElement RennerSystem::unit_element(const CoxeterElement& w) const {
  if (!unit_idem_)
    throw std::logic_error("lattice has no unit idempotent");
  return element(w, *unit_idem_, group_->identity());
}

RennerElement RennerSystem::from_partial_perm(const PartialPerm& p) const {
  if (!has_action())
    throw std::logic_error("system has no concrete action");
  if (p.degree() != action_[0].degree())
    throw std::invalid_argument("partial permutation degree mismatch");
  int e = -1;
  for (int i = 0; i < num_idems(); ++i)
    if (action_[i].rank() == p.rank()) e = i;
  if (e < 0)
    throw std::invalid_argument("no idempotent matches the element's rank");

  // Any factorization u e v works; element() renormalizes it.
  const int n = p.degree();
  std::vector<int> dom = p.domain(), edom = action_[e].domain();
  std::vector<int> v(n, 0), u(n, 0);
  std::vector<bool> vused(n + 1, false), uused(n + 1, false);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    v[dom[i] - 1] = edom[i];
    vused[edom[i]] = true;
    u[edom[i] - 1] = p.image(dom[i]);
    uused[p.image(dom[i])] = true;
  }
  int vnext = 1, unext = 1;
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) {
      while (vused[vnext]) ++vnext;
      v[j] = vnext;
      vused[vnext] = true;
    }
    if (u[j] == 0) {
      while (uused[unext]) ++unext;
      u[j] = unext;
      uused[unext] = true;
    }
  }
  RennerElement r = element(group_->from_one_line(u), e, group_->from_one_line(v));
  if (*r.partial_perm() != p)
    throw std::logic_error("factorization does not reproduce the element");
  return r;
}

int RennerSystem::godelle_meet(int e, const CoxeterElement& w, int f) const {
  if (!is_min_double_coset_rep(w, idems_[e].lam(), idems_[f].lam()))
    throw std::invalid_argument(
        "godelle_meet needs a minimal double coset representative");
  std::vector<int> candidates;
  for (int h = 0; h < num_idems(); ++h)
    if (idem_leq(h, e) && idem_leq(h, f) && in_parabolic(w, idems_[h].lam()))
      candidates.push_back(h);
  int best = -1;
  for (int h : candidates) {
    bool dominates = true;
    for (int other : candidates)
      if (!idem_leq(other, h)) dominates = false;
    if (dominates) best = h;
  }
  if (best < 0)
    throw std::runtime_error(
        "cross-section lattice admits no meet for the given data");
  if (!in_parabolic(w, idems_[best].lam_substar))
    throw std::runtime_error(
        "meet violates the stabilizer condition; lattice data is inconsistent");
  return best;
}

RennerElement RennerSystem::compose(const CoxeterElement& u, int e,
                                    const CoxeterElement& v, int f,
                                    const CoxeterElement& w) const {
  auto cl = project_left(idems_[e].lam(), v);
  auto cr = project_right(cl.min, idems_[f].lam());
  int g = godelle_meet(e, cr.min, f);
  CoxeterElement p_star = project_right(cl.par, idems_[e].lam_substar).min;
  CoxeterElement gamma = project_right(cr.par, idems_[f].lam_substar).min;
  return element(u * p_star, g, gamma * w);
}

RennerElement RennerSystem::multiply(const RennerElement& r,
                                     const RennerElement& s) const {
  if (&r.system() != this || &s.system() != this)
    throw std::invalid_argument("elements belong to a different system");
  return compose(r.x(), r.idem(), r.y() * s.x(), s.idem(), s.y());
}

RennerElement RennerSystem::star(const RennerElement& r) const {
  if (&r.system() != this)
    throw std::invalid_argument("element belongs to a different system");
  return element(r.y().inverse(), r.idem(), r.x().inverse());
}

RennerElement RennerSystem::convert(const RennerElement& r) const {
  if (&r.system() == this) return r;
  if (!same_family(r.system()))
    throw std::invalid_argument("element belongs to a different monoid family");
  CoxeterElement w0 = group_->longest_element();
  return element(r.x() * w0, r.idem(), w0 * r.y());
}

const std::vector<CoxeterElement>& RennerSystem::right_min_reps(GenSet I) const {
  auto it = right_reps_.find(I.bits());
  if (it != right_reps_.end()) return it->second;
  std::vector<CoxeterElement> out;
  for (const CoxeterElement& w : group_->elements())
    if (w.right_descents().disjoint(I)) out.push_back(w);
  return right_reps_.emplace(I.bits(), std::move(out)).first->second;
}

const std::vector<CoxeterElement>& RennerSystem::left_min_reps(GenSet I) const {
  auto it = left_reps_.find(I.bits());
  if (it != left_reps_.end()) return it->second;
  std::vector<CoxeterElement> out;
  for (const CoxeterElement& w : group_->elements())
    if (w.left_descents().disjoint(I)) out.push_back(w);
  return left_reps_.emplace(I.bits(), std::move(out)).first->second;
}

const std::vector<RennerElement>& RennerSystem::enumerate_monoid() const {
  if (monoid_) return *monoid_;
  std::vector<RennerElement> out;
  for (int e = 0; e < num_idems(); ++e) {
    const auto& xs = right_min_reps(idems_[e].lam_substar);
    const auto& ys = left_min_reps(idems_[e].lam());
    if (out.size() + xs.size() * ys.size() > group_->element_budget())
      throw BudgetExceeded("monoid enumeration exceeds element budget");
    for (const CoxeterElement& x : xs)
      for (const CoxeterElement& y : ys) {
        std::optional<PartialPerm> pp;
        if (has_action()) {
          PartialPerm px(group_->one_line(x)), py(group_->one_line(y));
          pp = px * action_[e] * py;
        }
        out.push_back(RennerElement(this, x, e, y, std::move(pp)));
      }
  }
  monoid_ = std::move(out);
  return *monoid_;
}

namespace {

std::string dotted_word(const std::vector<int>& w) {
  if (w.empty()) return "-";
  std::string s;
  for (int g : w) {
    if (!s.empty()) s += '.';
    s += std::to_string(g + 1);
  }
  return s;
}

std::vector<int> parse_dotted_word(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "-") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '.')) {
    std::size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size() || v < 1)
      throw std::invalid_argument("bad word token '" + item + "'");
    out.push_back(v - 1);
  }
  return out;
}

}  // namespace

std::string RennerSystem::element_to_string(const RennerElement& r) const {
  if (r.partial_perm()) return r.partial_perm()->to_string();
  return dotted_word(r.x().word()) + "|" + idems_[r.idem()].name + "|" +
         dotted_word(r.y().word());
}

RennerElement RennerSystem::parse_element(const std::string& text) const {
  if (text.find('|') != std::string::npos) {
    std::size_t a = text.find('|');
    std::size_t b = text.find('|', a + 1);
    if (b == std::string::npos)
      throw std::invalid_argument("element literal needs the form x|e|y");
    int e = idem_by_name(text.substr(a + 1, b - a - 1));
    CoxeterElement x = group_->from_word(parse_dotted_word(text.substr(0, a)));
    CoxeterElement y = group_->from_word(parse_dotted_word(text.substr(b + 1)));
    return element(x, e, y);
  }
  return from_partial_perm(PartialPerm::parse(text));
}

// ---------------------------------------------------------------- factories

std::unique_ptr<const RennerSystem> rook_system(int n,
                                                RookOrientation orientation,
                                                std::size_t element_budget) {
  if (n < 1) throw std::invalid_argument("rook degree must be positive");
  auto group = std::make_shared<const CoxeterGroup>(CoxeterMatrix::type_a(n - 1),
                                                    element_budget);
  std::vector<LatticeIdem> idems;
  std::vector<PartialPerm> action;
  for (int k = 0; k <= n; ++k) {
    GenSet star, substar;
    std::vector<int> domain;
    if (orientation == RookOrientation::initial_segment) {
      for (int i = 0; i + 1 < k; ++i) star = star.with(i);
      for (int i = k; i + 1 < n; ++i) substar = substar.with(i);
      for (int d = 1; d <= k; ++d) domain.push_back(d);
    } else {
      for (int i = n - k; i + 1 < n; ++i) star = star.with(i);
      for (int i = 0; i + 1 < n - k; ++i) substar = substar.with(i);
      for (int d = n - k + 1; d <= n; ++d) domain.push_back(d);
    }
    idems.push_back({"e" + std::to_string(k), star, substar});
    action.push_back(PartialPerm::partial_identity(n, domain));
  }
  std::vector<std::vector<int>> meet(n + 1, std::vector<int>(n + 1));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) meet[a][b] = std::min(a, b);
  return std::make_unique<const RennerSystem>(std::move(group), std::move(idems),
                                              std::move(meet), std::move(action));
}

RennerElement left_unit_mult(const CoxeterElement& w, const RennerElement& r) {
  return r.system().element(w * r.x(), r.idem(), r.y());
}

RennerElement right_unit_mult(const RennerElement& r, const CoxeterElement& w) {
  return r.system().element(r.x(), r.idem(), r.y() * w);
}

RennerElement conjugate_by_longest(const RennerElement& r) {
  CoxeterElement w0 = r.system().group().longest_element();
  return r.system().element(w0 * r.x(), r.idem(), r.y() * w0);
}

// ------------------------------------------------------------- validation

std::vector<AxiomViolation> validate_system(const RennerSystem& sys) {
  std::vector<AxiomViolation> out;
  const int k = sys.num_idems();
  auto name = [&](int e) { return sys.idem(e).name; };

  for (int a = 0; a < k; ++a) {
    if (sys.meet(a, a) != a)
      out.push_back({"semilattice", "meet(" + name(a) + "," + name(a) + ") != " + name(a)});
    for (int b = 0; b < k; ++b) {
      if (sys.meet(a, b) != sys.meet(b, a))
        out.push_back({"semilattice", "meet not commutative at (" + name(a) + "," + name(b) + ")"});
      for (int c = 0; c < k; ++c)
        if (sys.meet(sys.meet(a, b), c) != sys.meet(a, sys.meet(b, c))) {
          out.push_back({"semilattice", "meet not associative at (" + name(a) +
                                            "," + name(b) + "," + name(c) + ")"});
          a = b = k;  // one report is enough
          break;
        }
    }
  }

  for (int e = 0; e < k; ++e) {
    if (!sys.idem(e).lam_star.disjoint(sys.idem(e).lam_substar))
      out.push_back({"type maps", "lambda* and lambda_* overlap at " + name(e)});
    else if (!parabolics_commute(sys.group(), sys.idem(e).lam_star,
                                 sys.idem(e).lam_substar))
      out.push_back({"normality",
                     "W_{lambda_*} is not normal in W_{lambda} at " + name(e) +
                         " (type maps do not commute)"});
  }

  for (int e = 0; e < k; ++e)
    for (int f = 0; f < k; ++f)
      if (sys.idem_leq(e, f) && !sys.idem(e).lam_star.subset_of(sys.idem(f).lam_star))
        out.push_back({"axiom (v)", "lambda*(" + name(e) + ") is not contained in lambda*(" +
                                        name(f) + ")"});

  // Axioms (ii) and (iv) quantify over every idempotent of the monoid, not
  // just the lattice; check them over the generated idempotents when the
  // monoid is small enough to enumerate.
  if (out.empty() && sys.group().order() <= 1000) {
    try {
      std::vector<RennerElement> idems;
      for (const RennerElement& r : sys.enumerate_monoid())
        if (r * r == r) idems.push_back(r);
      const auto& W = sys.group().elements();
      auto conjugate = [&](const RennerElement& u, const CoxeterElement& w) {
        return left_unit_mult(w, right_unit_mult(u, w.inverse()));
      };
      for (const RennerElement& u : idems) {
        int hits = 0;
        for (int e = 0; e < k; ++e) {
          bool conj = false;
          for (const CoxeterElement& w : W)
            if (conjugate(u, w) == sys.idem_element(e)) conj = true;
          if (conj) ++hits;
        }
        if (hits != 1)
          out.push_back({"axiom (ii)",
                         "an idempotent meets the lattice in " +
                             std::to_string(hits) + " conjugates"});
      }
      for (const RennerElement& u : idems)
        for (const RennerElement& v : idems) {
          if (!(u * v == u && v * u == u)) continue;  // need u <= v
          bool found = false;
          for (const CoxeterElement& w : W) {
            RennerElement cu = conjugate(u, w), cv = conjugate(v, w);
            bool cu_in = cu.x().is_identity() && cu.y().is_identity();
            bool cv_in = cv.x().is_identity() && cv.y().is_identity();
            if (cu_in && cv_in && sys.idem_leq(cu.idem(), cv.idem()))
              found = true;
          }
          if (!found)
            out.push_back({"axiom (iv)",
                           "no unit conjugates a nested idempotent pair into "
                           "the lattice"});
        }
    } catch (const BudgetExceeded&) {
      // monoid too large to enumerate; the finite-data checks above stand
    } catch (const std::exception& e) {
      out.push_back({"multiplication", e.what()});
    }
  }

  if (sys.has_action()) {
    const CoxeterGroup& g = sys.group();
    for (int e = 0; e < k; ++e) {
      const PartialPerm& pe = sys.idem_action(e);
      if (!pe.is_idempotent())
        out.push_back({"action", name(e) + " does not act as an idempotent"});
      GenSet cent, stab;
      for (int s = 0; s < g.rank(); ++s) {
        PartialPerm ps(g.one_line(g.generator(s)));
        if (ps * pe == pe * ps) {
          cent = cent.with(s);
          if (ps * pe == pe) stab = stab.with(s);
        }
      }
      if (cent != sys.idem(e).lam())
        out.push_back({"action", "lambda(" + name(e) + ") does not match the centralizer"});
      if (stab != sys.idem(e).lam_substar)
        out.push_back({"action", "lambda_*(" + name(e) + ") does not match the stabilizer"});
      for (int f = 0; f < k; ++f)
        if (sys.idem_action(sys.meet(e, f)) != pe * sys.idem_action(f)) {
          out.push_back({"action", "meet(" + name(e) + "," + name(f) +
                                       ") does not match the idempotent product"});
          break;
        }
    }
  }
  return out;
}

// ------------------------------------------------------------- file loader

std::unique_ptr<const RennerSystem> parse_renner_system(std::istream& in,
                                                        bool validate,
                                                        std::size_t element_budget) {
  std::optional<CoxeterMatrix> matrix;
  struct IdemSpec {
    std::string name;
    GenSet star, substar;
  };
  std::vector<IdemSpec> idems;
  std::vector<std::tuple<std::string, std::string, std::string>> meets;
  std::vector<std::pair<std::string, PartialPerm>> actions;
  std::vector<std::tuple<int, std::string, std::string>> conjs;

  std::string line;
  int lineno = 0;
  bool in_matrix = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::stringstream ss(line);
    std::string head;
    if (!(ss >> head) || head[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
    };
    if (head == "rank") {
      int r;
      if (!(ss >> r) || r < 1) fail("bad rank");
      matrix.emplace(r);
      in_matrix = true;
    } else if (in_matrix && head.find_first_not_of("0123456789") == std::string::npos) {
      int i = std::stoi(head), j, m;
      if (!matrix) fail("matrix entry before rank");
      if (!(ss >> j >> m)) fail("matrix line needs 'i j m'");
      if (i < 1 || j < 1 || i > matrix->rank() || j > matrix->rank() || m < 2)
        fail("bad matrix entry");
      matrix->set_entry(i - 1, j - 1, m);
    } else if (head == "idem") {
      in_matrix = false;
      IdemSpec rec;
      std::string star, substar;
      if (!(ss >> rec.name >> star >> substar)) fail("idem line needs 'idem NAME STAR SUBSTAR'");
      rec.star = GenSet::parse(star);
      rec.substar = GenSet::parse(substar);
      idems.push_back(std::move(rec));
    } else if (head == "meet") {
      in_matrix = false;
      std::string a, b, c;
      if (!(ss >> a >> b >> c)) fail("meet line needs 'meet A B C'");
      meets.emplace_back(a, b, c);
    } else if (head == "action") {
      in_matrix = false;
      std::string nm, vec;
      if (!(ss >> nm >> vec)) fail("action line needs 'action NAME VECTOR'");
      actions.emplace_back(nm, PartialPerm::parse(vec));
    } else if (head == "conj") {
      in_matrix = false;
      int s;
      std::string a, b;
      if (!(ss >> s >> a >> b)) fail("conj line needs 'conj GEN A B'");
      conjs.emplace_back(s - 1, a, b);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!matrix) throw std::invalid_argument("system file lacks a 'rank' header");
  if (idems.empty()) throw std::invalid_argument("system file lists no idempotents");

  auto group = std::make_shared<const CoxeterGroup>(*matrix, element_budget);
  auto index_of = [&](const std::string& nm) {
    for (std::size_t i = 0; i < idems.size(); ++i)
      if (idems[i].name == nm) return static_cast<int>(i);
    throw std::invalid_argument("unknown idempotent '" + nm + "'");
  };

  const int k = static_cast<int>(idems.size());
  std::vector<std::vector<int>> meet(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) meet[i][i] = i;
  for (const auto& [a, b, c] : meets) {
    int ia = index_of(a), ib = index_of(b), ic = index_of(c);
    meet[ia][ib] = ic;
    meet[ib][ia] = ic;
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (meet[i][j] < 0)
        throw std::invalid_argument("meet(" + idems[i].name + "," +
                                    idems[j].name + ") is not specified");

  std::vector<LatticeIdem> lat;
  for (auto& rec : idems) lat.push_back({rec.name, rec.star, rec.substar});
  std::vector<PartialPerm> action;
  if (!actions.empty()) {
    action.resize(k, PartialPerm::identity(actions[0].second.degree()));
    std::vector<bool> have(k, false);
    for (auto& [nm, pp] : actions) {
      int i = index_of(nm);
      action[i] = pp;
      have[i] = true;
    }
    for (int i = 0; i < k; ++i)
      if (!have[i])
        throw std::invalid_argument("action missing for idempotent " + idems[i].name);
  }

  auto sys = std::make_unique<const RennerSystem>(std::move(group), std::move(lat),
                                                  std::move(meet), std::move(action));

  if (validate) {
    std::vector<AxiomViolation> violations = validate_system(*sys);
    for (const auto& [s, a, b] : conjs) {
      int ia = index_of(a), ib = index_of(b);
      if (s < 0 || s >= sys->group().rank())
        throw std::invalid_argument("conj generator index out of range");
      if (sys->has_action()) {
        PartialPerm ps(sys->group().one_line(sys->group().generator(s)));
        if (ps * sys->idem_action(ia) * ps != sys->idem_action(ib))
          violations.push_back({"action", "conjugation entry conj " +
                                              std::to_string(s + 1) + " " + a +
                                              " " + b + " does not hold"});
      } else if ((ia == ib) != sys->idem(ia).lam().contains(s)) {
        violations.push_back({"action", "conjugation entry conj " +
                                            std::to_string(s + 1) + " " + a +
                                            " " + b + " contradicts lambda"});
      }
    }
    if (!violations.empty()) {
      std::string msg = "system violates the axioms:";
      for (const auto& v : violations) msg += "\n  [" + v.axiom + "] " + v.detail;
      throw std::invalid_argument(msg);
    }
  }
  return sys;
}

}  // namespace rencox
