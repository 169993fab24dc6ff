#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rencox/renner.hpp"

using namespace rencox;

TEST_CASE("partial permutations") {
  PartialPerm r = PartialPerm::parse("3,2,0");
  CHECK(r.rank() == 2);
  CHECK(r.domain() == std::vector<int>{1, 2});
  CHECK(r.range() == std::vector<int>{2, 3});
  CHECK(r.to_string() == "3,2,0");
  CHECK(r * PartialPerm::parse("3,2,1") == PartialPerm::parse("0,2,3"));
  CHECK(r.transpose() == PartialPerm::parse("0,2,1"));
  CHECK(PartialPerm::identity(3).is_idempotent());
  CHECK(PartialPerm::partial_identity(3, {1, 2}).is_idempotent());
  CHECK_FALSE(r.is_idempotent());
  CHECK_THROWS_AS(PartialPerm::parse("1,1,0"), std::invalid_argument);
  CHECK_THROWS_AS(PartialPerm::parse("4,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(PartialPerm::parse(""), std::invalid_argument);
}

TEST_CASE("rook monoid sizes match the closed form and brute enumeration") {
  CHECK_THROWS_AS(rook_system(0), std::invalid_argument);
  CHECK(rook_system(1)->enumerate_monoid().size() == 2);
  CHECK(rook_system(2)->enumerate_monoid().size() == 7);
  for (int n : {1, 2, 3, 4}) {
    auto sys = rook_system(n);
    const auto& monoid = sys->enumerate_monoid();
    CHECK(monoid.size() == oracles::rook_monoid_size(n));
    std::set<PartialPerm> via_triples, brute;
    for (const auto& r : monoid) via_triples.insert(*r.partial_perm());
    for (const auto& p : oracles::all_partial_injections(n)) brute.insert(p);
    CHECK(via_triples.size() == monoid.size());  // duplicate-free
    CHECK(via_triples == brute);
  }
}

TEST_CASE("rook axioms hold and both built-in lattices validate") {
  for (int n : {1, 2, 3, 4}) {
    auto sys = rook_system(n);
    CHECK(validate_system(*sys).empty());
    CHECK(validate_system(sys->opposite()).empty());
  }
  auto mirror = rook_system(3, RookOrientation::final_segment);
  CHECK(validate_system(*mirror).empty());
}

TEST_CASE("constructed violations are reported") {
  auto group = std::make_shared<const CoxeterGroup>(CoxeterMatrix::type_a(2));

  // upper type map not monotone along e <= f
  std::vector<LatticeIdem> idems{{"a", GenSet::of({0}), GenSet{}},
                                 {"b", GenSet{}, GenSet{}}};
  std::vector<std::vector<int>> meet{{0, 0}, {0, 1}};
  RennerSystem bad_v(group, idems, meet);
  bool found_v = false;
  for (const auto& v : validate_system(bad_v))
    if (v.axiom == "axiom (v)") found_v = true;
  CHECK(found_v);

  // adjacent generators cannot split into commuting star and substar parts
  std::vector<LatticeIdem> idems2{{"a", GenSet::of({0}), GenSet::of({1})},
                                  {"b", GenSet::all(2), GenSet{}}};
  RennerSystem bad_n(group, idems2, meet);
  bool found_n = false;
  for (const auto& v : validate_system(bad_n))
    if (v.axiom == "normality") found_n = true;
  CHECK(found_n);

  // meet table that is not even commutative
  std::vector<LatticeIdem> idems3{{"a", GenSet{}, GenSet::all(2)},
                                  {"b", GenSet::all(2), GenSet{}}};
  std::vector<std::vector<int>> broken{{0, 0}, {1, 1}};
  RennerSystem bad_m(group, idems3, broken);
  bool found_m = false;
  for (const auto& v : validate_system(bad_m))
    if (v.axiom == "semilattice") found_m = true;
  CHECK(found_m);
}

TEST_CASE("left standard form is the unique constrained factorization") {
  auto sys = rook_system(3);
  const CoxeterGroup& g = sys->group();
  for (const auto& r : sys->enumerate_monoid()) {
    const PartialPerm& target = *r.partial_perm();
    int hits = 0;
    for (int e = 0; e < sys->num_idems(); ++e)
      for (const auto& x : g.elements()) {
        if (!x.right_descents().disjoint(sys->idem(e).lam_substar)) continue;
        for (const auto& y : g.elements()) {
          if (!y.left_descents().disjoint(sys->idem(e).lam())) continue;
          PartialPerm prod = PartialPerm(g.one_line(x)) * sys->idem_action(e) *
                             PartialPerm(g.one_line(y));
          if (prod == target) {
            ++hits;
            CHECK(e == r.idem());
            CHECK(x == r.x());
            CHECK(y == r.y());
          }
        }
      }
    CHECK(hits == 1);
  }
}

TEST_CASE("standard forms of units and idempotents") {
  auto sys = rook_system(3);
  const CoxeterGroup& g = sys->group();
  CoxeterElement w = g.from_one_line({2, 3, 1});
  RennerElement unit = sys->unit_element(w);
  CHECK(unit.x() == w);
  CHECK(unit.idem() == *sys->unit_idem());
  CHECK(unit.y().is_identity());
  RennerElement e2 = sys->idem_element(2);
  CHECK(e2.x().is_identity());
  CHECK(e2.y().is_identity());
  CHECK(e2.is_idempotent());

  RennerElement r = sys->parse_element("3,2,0");
  CHECK(r.x() == g.longest_element());
  CHECK(r.idem() == 2);
  CHECK(r.y().is_identity());
}

TEST_CASE("hybrid and right forms recombine") {
  auto sys = rook_system(3);
  for (const auto& r : sys->enumerate_monoid()) {
    RightForm rf = r.right_standard_form();
    CHECK(sys->element(rf.y, rf.e, rf.x) == r);
    CHECK(rf.y.right_descents().disjoint(sys->idem(rf.e).lam()));
    CHECK(rf.x.left_descents().disjoint(sys->idem(rf.e).lam_substar));
    HybridForm hf = r.hybrid_standard_form();
    CHECK(hf.x * hf.y == r.left_standard_form().x);
    CHECK(hf.z == r.left_standard_form().y);
    CHECK(in_parabolic(hf.y, sys->idem(hf.e).lam_star));
    CHECK(sys->element(hf.x * hf.y, hf.e, hf.z) == r);
    CHECK(sys->element(hf.x, hf.e, hf.y * hf.z) == r);
  }
}

TEST_CASE("multiplication agrees with partial permutation composition") {
  auto sys = rook_system(3);
  const auto& monoid = sys->enumerate_monoid();
  RennerElement one = sys->unit_element(sys->group().identity());
  for (const auto& r : monoid) {
    CHECK(r * one == r);
    CHECK(one * r == r);
  }
  for (const auto& r : monoid)
    for (const auto& s : monoid)
      CHECK(*(r * s).partial_perm() == *r.partial_perm() * *s.partial_perm());
  // idempotent products realize the meet
  for (int e = 0; e < sys->num_idems(); ++e)
    for (int f = 0; f < sys->num_idems(); ++f)
      CHECK(sys->idem_element(e) * sys->idem_element(f) ==
            sys->idem_element(sys->meet(e, f)));
}

TEST_CASE("multiplication is associative") {
  auto r2 = rook_system(2);
  const auto& m2 = r2->enumerate_monoid();
  for (const auto& a : m2)
    for (const auto& b : m2)
      for (const auto& c : m2) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("star is the inverse-monoid inverse") {
  auto sys = rook_system(3);
  for (int e = 0; e < sys->num_idems(); ++e)
    CHECK(sys->idem_element(e).star() == sys->idem_element(e));
  for (const auto& w : sys->group().elements())
    CHECK(sys->unit_element(w).star() == sys->unit_element(w.inverse()));
  RennerElement r = sys->parse_element("3,2,0");
  CHECK(*r.star().partial_perm() == PartialPerm::parse("0,2,1"));
  for (const auto& t : sys->enumerate_monoid()) {
    RennerElement st = t.star();
    CHECK(st.star() == t);
    CHECK(t * st * t == t);
    CHECK(st * t * st == st);
    CHECK(*st.partial_perm() == t.partial_perm()->transpose());
  }
}

TEST_CASE("Godelle's meet") {
  auto sys = rook_system(3);
  const CoxeterGroup& g = sys->group();
  // with the identity it reduces to the lattice meet
  for (int e = 0; e < sys->num_idems(); ++e) {
    for (int f = 0; f < sys->num_idems(); ++f)
      CHECK(sys->godelle_meet(e, g.identity(), f) == sys->meet(e, f));
    CHECK(sys->godelle_meet(e, g.identity(), e) == e);
  }
  // the rank-2 idempotent pinched through the outside generator drops rank
  CHECK(sys->godelle_meet(2, g.generator(1), 2) == 1);
  PartialPerm pinched = sys->idem_action(2) *
                        PartialPerm(g.one_line(g.generator(1))) *
                        sys->idem_action(2);
  CHECK(pinched == sys->idem_action(1));
  // non-minimal representative is rejected
  CHECK_THROWS_AS(sys->godelle_meet(2, g.generator(0), 2), std::invalid_argument);
  // ewf = g = f w^-1 e as elements, for every admissible triple
  for (int e = 0; e < sys->num_idems(); ++e)
    for (int f = 0; f < sys->num_idems(); ++f)
      for (const auto& w : g.elements()) {
        if (!is_min_double_coset_rep(w, sys->idem(e).lam(), sys->idem(f).lam()))
          continue;
        int gm = sys->godelle_meet(e, w, f);
        CHECK(in_parabolic(w, sys->idem(gm).lam_substar));
        CHECK(right_unit_mult(sys->idem_element(e), w) * sys->idem_element(f) ==
              sys->idem_element(gm));
        CHECK(right_unit_mult(sys->idem_element(f), w.inverse()) *
                  sys->idem_element(e) ==
              sys->idem_element(gm));
      }
}

TEST_CASE("opposite system and conversion") {
  auto sys = rook_system(3);
  const RennerSystem& opp = sys->opposite();
  CHECK(&opp.opposite() == sys.get());
  CHECK(sys->same_family(opp));
  // opposite idempotents are the reversed partial identities
  CHECK(opp.idem_action(2) == PartialPerm::parse("0,2,3"));
  CHECK(opp.idem_action(1) == PartialPerm::parse("0,0,3"));
  for (const auto& r : sys->enumerate_monoid()) {
    RennerElement conv = opp.convert(r);
    CHECK(*conv.partial_perm() == *r.partial_perm());  // same monoid element
    CHECK(sys->convert(conv) == r);
  }
  auto other = rook_system(3);
  CHECK_THROWS_AS(sys->convert(other->parse_element("3,2,0")),
                  std::invalid_argument);
}

TEST_CASE("unit translations match unit multiplication") {
  auto sys = rook_system(3);
  const CoxeterGroup& g = sys->group();
  for (const auto& w : g.elements())
    for (const auto& r : sys->enumerate_monoid()) {
      CHECK(left_unit_mult(w, r) == sys->unit_element(w) * r);
      CHECK(right_unit_mult(r, w) == r * sys->unit_element(w));
    }
  CoxeterElement w0 = g.longest_element();
  for (const auto& r : sys->enumerate_monoid())
    CHECK(conjugate_by_longest(r) ==
          sys->unit_element(w0) * r * sys->unit_element(w0));
}

TEST_CASE("stabilizer parabolic is normal and the centralizer splits") {
  for (int n : {3, 4}) {
    auto sys = rook_system(n);
    const CoxeterGroup& g = sys->group();
    for (int e = 0; e < sys->num_idems(); ++e) {
      GenSet lam = sys->idem(e).lam();
      GenSet sub = sys->idem(e).lam_substar;
      GenSet star = sys->idem(e).lam_star;
      for (const auto& v : g.parabolic_elements(lam))
        for (const auto& u : g.parabolic_elements(sub))
          CHECK(in_parabolic(v * u * v.inverse(), sub));
      std::set<CoxeterElement> prods;
      for (const auto& a : g.parabolic_elements(star))
        for (const auto& b : g.parabolic_elements(sub))
          CHECK(prods.insert(a * b).second);
      CHECK(prods.size() == g.parabolic_elements(lam).size());
    }
  }
}

TEST_CASE("element literals round trip") {
  auto sys = rook_system(3);
  for (const auto& r : sys->enumerate_monoid())
    CHECK(sys->parse_element(sys->element_to_string(r)) == r);
  // triple literals are accepted too
  RennerElement r = sys->parse_element("1.2.1|e2|-");
  CHECK(*r.partial_perm() == PartialPerm::parse("3,2,0"));
  CHECK_THROWS_AS(sys->parse_element("1|nope|1"), std::invalid_argument);
  CHECK_THROWS_AS(sys->parse_element("9,9"), std::invalid_argument);
}

TEST_CASE("monoid enumeration respects the element budget") {
  auto tiny = rook_system(3, kRookLambdaOrientation, 10);
  CHECK_THROWS_AS(tiny->enumerate_monoid(), BudgetExceeded);
}

TEST_CASE("generic system file loader") {
  // the degree-2 rook monoid written out longhand
  std::string text =
      "# degree-2 rook monoid\n"
      "rank 1\n"
      "idem e0 - 1\n"
      "idem e1 - -\n"
      "idem e2 1 -\n"
      "meet e0 e1 e0\n"
      "meet e0 e2 e0\n"
      "meet e1 e2 e1\n"
      "action e0 0,0\n"
      "action e1 1,0\n"
      "action e2 1,2\n"
      "conj 1 e0 e0\n"
      "conj 1 e2 e2\n";
  std::stringstream in(text);
  auto sys = parse_renner_system(in);
  CHECK(sys->enumerate_monoid().size() == 7);
  CHECK(validate_system(*sys).empty());
  auto rook2 = rook_system(2);
  for (const auto& r : sys->enumerate_monoid())
    for (const auto& s : sys->enumerate_monoid())
      CHECK(*(r * s).partial_perm() == *rook2->from_partial_perm(*r.partial_perm())
                 .operator*(rook2->from_partial_perm(*s.partial_perm()))
                 .partial_perm());

  // the same data without the action still multiplies the same way
  std::stringstream plain(
      "rank 1\nidem e0 - 1\nidem e1 - -\nidem e2 1 -\n"
      "meet e0 e1 e0\nmeet e0 e2 e0\nmeet e1 e2 e1\n");
  auto abstract = parse_renner_system(plain);
  CHECK_FALSE(abstract->has_action());
  CHECK(abstract->enumerate_monoid().size() == 7);
  RennerElement a = abstract->parse_element("1|e1|-");
  RennerElement b = abstract->parse_element("-|e1|1");
  CHECK(abstract->parse_element(abstract->element_to_string(a * b)) == a * b);

  std::stringstream missing_meet("rank 1\nidem a - -\nidem b - -\n");
  CHECK_THROWS_AS(parse_renner_system(missing_meet), std::invalid_argument);
  std::stringstream bad_axiom(
      "rank 2\n1 2 3\nidem a 1 2\nidem b 1,2 -\nmeet a b a\n");
  CHECK_THROWS_AS(parse_renner_system(bad_axiom), std::invalid_argument);
  std::stringstream bad_conj(
      "rank 1\nidem e0 - 1\nidem e1 - -\nidem e2 1 -\n"
      "meet e0 e1 e0\nmeet e0 e2 e0\nmeet e1 e2 e1\n"
      "action e0 0,0\naction e1 1,0\naction e2 1,2\n"
      "conj 1 e1 e1\n");  // s1 does not fix the rank-1 idempotent
  CHECK_THROWS_AS(parse_renner_system(bad_conj), std::invalid_argument);
}
