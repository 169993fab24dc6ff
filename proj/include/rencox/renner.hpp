#ifndef RENCOX_RENNER_HPP_
#define RENCOX_RENNER_HPP_

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rencox/coxeter.hpp"
#include "rencox/parabolic.hpp"

namespace rencox {

// An injective partial map {1..n} -> {1..n}; v[j] = i means column j maps to
// row i, 0 = undefined. This is the matrix model of the rook monoid.
class PartialPerm {
 public:
  PartialPerm() = default;
  explicit PartialPerm(std::vector<int> v);
  static PartialPerm identity(int n);
  static PartialPerm partial_identity(int n, const std::vector<int>& domain);

  int degree() const { return static_cast<int>(v_.size()); }
  int rank() const;
  int image(int j) const { return v_[j - 1]; }  // 1-based, 0 = undefined
  std::vector<int> domain() const;
  std::vector<int> range() const;

  // (a * b)(j) = a(b(j)), matching matrix multiplication of rook matrices.
  PartialPerm operator*(const PartialPerm& o) const;
  PartialPerm transpose() const;  // the inverse partial map
  bool is_idempotent() const { return *this * *this == *this; }

  bool operator==(const PartialPerm&) const = default;
  bool operator<(const PartialPerm& o) const { return v_ < o.v_; }

  std::string to_string() const;  // "3,2,0"
  static PartialPerm parse(const std::string& text);

  const std::vector<int>& vec() const { return v_; }

 private:
  std::vector<int> v_;
};

// One idempotent of the cross-section lattice with its three type maps;
// lam() is the centralizer type, lam_substar the stabilizer type.
struct LatticeIdem {
  std::string name;
  GenSet lam_star;
  GenSet lam_substar;
  GenSet lam() const { return lam_star | lam_substar; }
};

class RennerSystem;

struct LeftForm {
  CoxeterElement x;
  int e;
  CoxeterElement y;
};
struct RightForm {
  CoxeterElement y;
  int e;
  CoxeterElement x;
};
struct HybridForm {
  CoxeterElement x;
  int e;
  CoxeterElement y;
  CoxeterElement z;
};

// A monoid element, canonically identified with its unique left standard
// form triple x e y (x with no right descent in lam_substar(e), y with no
// left descent in lam(e)). Rook-instance elements also carry the partial
// permutation realizing them.
class RennerElement {
 public:
  RennerElement() : sys_(nullptr), e_(-1) {}

  const RennerSystem& system() const { return *sys_; }
  const CoxeterElement& x() const { return x_; }
  int idem() const { return e_; }
  const CoxeterElement& y() const { return y_; }

  LeftForm left_standard_form() const { return {x_, e_, y_}; }
  RightForm right_standard_form() const;
  HybridForm hybrid_standard_form() const;

  RennerElement operator*(const RennerElement& o) const;
  RennerElement star() const;

  bool is_idempotent() const { return *this * *this == *this; }

  const std::optional<PartialPerm>& partial_perm() const { return pp_; }

  bool operator==(const RennerElement& o) const {
    return sys_ == o.sys_ && e_ == o.e_ && x_ == o.x_ && y_ == o.y_;
  }
  bool operator!=(const RennerElement& o) const { return !(*this == o); }
  bool operator<(const RennerElement& o) const;
  std::size_t hash() const;

 private:
  friend class RennerSystem;
  RennerElement(const RennerSystem* s, CoxeterElement x, int e,
                CoxeterElement y, std::optional<PartialPerm> pp)
      : sys_(s), x_(std::move(x)), e_(e), y_(std::move(y)), pp_(std::move(pp)) {}

  const RennerSystem* sys_;
  CoxeterElement x_;
  int e_;
  CoxeterElement y_;
  std::optional<PartialPerm> pp_;
};

struct RennerElementHash {
  std::size_t operator()(const RennerElement& r) const { return r.hash(); }
};

struct AxiomViolation {
  std::string axiom;
  std::string detail;
};

// A generalized Renner-Coxeter system: a finite Coxeter group W, a
// cross-section lattice of idempotents with type maps, and (optionally) a
// concrete partial-permutation action. Multiplication is computed on left
// standard triples through Godelle's meet; the optional action provides an
// independent concrete realization.
//
// Systems are immutable after construction. The opposite system (lattice
// conjugated by w0) is built once on demand and owned by the primary system;
// elements of the two refer to the same monoid and can be converted with
// RennerSystem::convert.
class RennerSystem {
 public:
  RennerSystem(std::shared_ptr<const CoxeterGroup> group,
               std::vector<LatticeIdem> idems,
               std::vector<std::vector<int>> meet,
               std::vector<PartialPerm> action = {});

  const CoxeterGroup& group() const { return *group_; }
  std::shared_ptr<const CoxeterGroup> group_ptr() const { return group_; }

  int num_idems() const { return static_cast<int>(idems_.size()); }
  const LatticeIdem& idem(int e) const { return idems_[e]; }
  int idem_by_name(const std::string& name) const;
  int meet(int a, int b) const { return meet_[a][b]; }
  bool idem_leq(int a, int b) const { return meet_[a][b] == a; }
  std::optional<int> unit_idem() const { return unit_idem_; }

  bool has_action() const { return !action_.empty(); }
  const PartialPerm& idem_action(int e) const { return action_[e]; }

  bool is_primary() const { return primary_ == nullptr; }
  const RennerSystem& opposite() const;
  bool same_family(const RennerSystem& o) const;

  // Normalizes u e v to its canonical left standard triple.
  RennerElement element(const CoxeterElement& u, int e,
                        const CoxeterElement& v) const;
  RennerElement idem_element(int e) const;
  RennerElement unit_element(const CoxeterElement& w) const;
  RennerElement from_partial_perm(const PartialPerm& p) const;

  // The product u e v f w, folded through Godelle's meet.
  RennerElement compose(const CoxeterElement& u, int e, const CoxeterElement& v,
                        int f, const CoxeterElement& w) const;

  RennerElement multiply(const RennerElement& r, const RennerElement& s) const;
  RennerElement star(const RennerElement& r) const;

  // Re-expresses an element of the same monoid family in this system's
  // lattice.
  RennerElement convert(const RennerElement& r) const;

  // The unique g in the lattice with e w f = g, for w a minimal double coset
  // representative for (lam(e), lam(f)).
  int godelle_meet(int e, const CoxeterElement& w, int f) const;

  // All elements, grouped by idempotent, x then y in enumeration order.
  const std::vector<RennerElement>& enumerate_monoid() const;

  // Minimal coset representatives W^I and ^I W, in enumeration order.
  const std::vector<CoxeterElement>& right_min_reps(GenSet I) const;
  const std::vector<CoxeterElement>& left_min_reps(GenSet I) const;

  std::string element_to_string(const RennerElement& r) const;
  RennerElement parse_element(const std::string& text) const;

 private:
  void build_opposite() const;

  std::shared_ptr<const CoxeterGroup> group_;
  std::vector<LatticeIdem> idems_;
  std::vector<std::vector<int>> meet_;
  std::vector<PartialPerm> action_;
  std::optional<int> unit_idem_;

  const RennerSystem* primary_ = nullptr;
  mutable std::unique_ptr<RennerSystem> opposite_;
  mutable std::optional<std::vector<RennerElement>> monoid_;
  mutable std::map<std::uint32_t, std::vector<CoxeterElement>> right_reps_;
  mutable std::map<std::uint32_t, std::vector<CoxeterElement>> left_reps_;
};

// Checks the finite-data axioms; an empty result means the system is valid.
std::vector<AxiomViolation> validate_system(const RennerSystem& sys);

// Which diagonal idempotents the rook lattice uses. The shipped convention,
// initial_segment (partial identities on {1..k}), is the one matching the
// adherence order of the upper-triangular Borel subgroup; final_segment is
// kept so the calibration test can demonstrate that the mirror choice fails.
enum class RookOrientation { initial_segment, final_segment };
inline constexpr RookOrientation kRookLambdaOrientation =
    RookOrientation::initial_segment;

std::unique_ptr<const RennerSystem> rook_system(
    int n, RookOrientation orientation = kRookLambdaOrientation,
    std::size_t element_budget = kDefaultElementBudget);

// The unit action of W on the monoid: w r and r w.
RennerElement left_unit_mult(const CoxeterElement& w, const RennerElement& r);
RennerElement right_unit_mult(const RennerElement& r, const CoxeterElement& w);
RennerElement conjugate_by_longest(const RennerElement& r);

// Generic system file loader; throws std::invalid_argument on syntax errors
// and reports axiom violations unless validate is false.
std::unique_ptr<const RennerSystem> parse_renner_system(
    std::istream& in, bool validate = true,
    std::size_t element_budget = kDefaultElementBudget);

}  // namespace rencox

#endif  // RENCOX_RENNER_HPP_
