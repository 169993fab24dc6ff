#ifndef RENCOX_ADHERENCE_HPP_
#define RENCOX_ADHERENCE_HPP_

#include <optional>

#include "rencox/renner.hpp"

namespace rencox {

enum class Epsilon { plus, minus };
enum class GreensRelation { J, L, R, H };

// The five-part decomposition sigma_- e_- sigma_0 e_+ sigma_+ with e_+ in the
// element's lattice and e_- the conjugate idempotent in the opposite lattice
// (both carry the same index). sigma_- has no right descent in lam(e_-),
// sigma_+ no left descent in lam(e_+), and sigma_0 is the minimal double
// coset representative between the two stabilizer types.
struct VanillaForm {
  CoxeterElement sigma_minus;
  int e_minus;  // index into system->opposite()
  CoxeterElement sigma_zero;
  int e_plus;  // index into *system
  CoxeterElement sigma_plus;
  const RennerSystem* system;
};

VanillaForm vanilla_form(const RennerElement& r);

// Multiplies the five parts back out; inverse of vanilla_form.
RennerElement vanilla_product(const VanillaForm& vf);

// The adherence orders, straight from their witness definitions on left and
// right standard forms. These are the ground-truth implementations; the
// vanilla and in-class variants below must agree with them.
bool leq_plus(const RennerElement& r, const RennerElement& s);
bool leq_minus(const RennerElement& r, const RennerElement& s);

// The witness w certifying r <=+ s (resp. <=-), when one exists.
std::optional<CoxeterElement> leq_plus_witness(const RennerElement& r,
                                               const RennerElement& s);
std::optional<CoxeterElement> leq_minus_witness(const RennerElement& r,
                                                const RennerElement& s);

bool adherence_leq(const RennerElement& r, const RennerElement& s, Epsilon eps);

// r <=+ s decided through the vanilla forms (three Bruhat conditions over a
// pair of witnesses).
bool leq_plus_vanilla(const RennerElement& r, const RennerElement& s);

// Single-Bruhat-comparison order test for elements already known to be
// related: L compares the left x parts (giving <=+), R the right x parts
// (giving <=-), H the hybrid middles (where <=+ and <=- coincide).
// Throws if the elements are not related, or for J (no such test exists).
bool leq_fast_in_class(const RennerElement& r, const RennerElement& s,
                       GreensRelation rel);

}  // namespace rencox

#endif  // RENCOX_ADHERENCE_HPP_
