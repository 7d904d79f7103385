#include <doctest.h>

#include <utility>
#include <vector>

#include "segcalc/errors.hpp"
#include "segcalc/groth.hpp"

using namespace segcalc;

namespace {
const CuspidalLabel kOne = CuspidalLabel::trivial();
Segment seg(long long tx, long long ty) {
  return Segment(kOne, HalfInt::from_twice(tx), HalfInt::from_twice(ty));
}
Factor st(long long tx, long long ty) { return Factor{FactorKind::St, seg(tx, ty)}; }
Factor speh(long long tx, long long ty) { return Factor{FactorKind::Speh, seg(tx, ty)}; }
}  // namespace

TEST_CASE("keys canonicalize to merged presentations") {
  // The unit and its name.
  CHECK(ReptnKey::unit().is_unit());
  CHECK(ReptnKey::unit().str() == "1");

  // A chain of points is a character, held in the Z basis.
  CHECK(ReptnKey::irr_l({seg(1, 1), seg(-1, -1)}) == char_key(2, HalfInt(0)));
  CHECK(ReptnKey::irr_l({seg(1, 1), seg(-1, -1)}).str() == "Speh[1/2,-1/2]");

  // A chain of points in the Z basis is a generalized Steinberg.
  CHECK(ReptnKey::irr_z({seg(1, 1), seg(-1, -1)}) == ReptnKey::irr_l({seg(1, -1)}));
  CHECK(ReptnKey::irr_l({seg(1, -1)}).str() == "St[1/2,-1/2]");

  // A single point reads the same from both sides.
  CHECK(ReptnKey::irr_l({seg(0, 0)}) == ReptnKey::irr_z({seg(0, 0)}));

  // Unlinked points split into singleton Z-columns.
  CHECK(ReptnKey::irr_l({seg(3, 3), seg(-3, -3)}) ==
        ReptnKey::irr_z({seg(3, 3), seg(-3, -3)}));

  // Genuinely mixed data stays put.
  const auto lq = ReptnKey::irr_l({seg(3, 1), seg(-1, -1)});
  CHECK(lq.basis() == ReptnKey::Basis::IrrL);
  CHECK(lq.str() == "LQ(St[3/2,1/2] x St[-1/2,-1/2])");
  CHECK(ReptnKey::irr_z({seg(1, -1), seg(1, -1)}).str() == "Z(Speh[1/2,-1/2] x Speh[1/2,-1/2])");

  // Single-factor standard keys collapse to their irreducible.
  CHECK(ReptnKey::single(st(1, -1)) == ReptnKey::irr_l({seg(1, -1)}));
  CHECK(ReptnKey::single(speh(1, -1)) == ReptnKey::irr_z({seg(1, -1)}));
  CHECK(ReptnKey::std_key({st(1, 1), st(-1, -1)}).basis() == ReptnKey::Basis::Std);
}

TEST_CASE("products take multiset unions of factor lists") {
  const GrothElt a = GrothElt::single(ReptnKey::single(st(1, 1)));
  const GrothElt b = GrothElt::single(ReptnKey::single(st(-1, -1)));
  const GrothElt ab = product(a, b);
  CHECK(ab == GrothElt::single(ReptnKey::std_key({st(1, 1), st(-1, -1)})));
  // Point factors re-expanded from Z-keys print with the Speh spelling.
  CHECK(ab.str() == "Speh[1/2,1/2] x Speh[-1/2,-1/2]");
  CHECK(product(GrothElt::one(), ab) == ab);
  CHECK(product(ab, b) == product(b, ab));

  // Degrees add across a product.
  for (const auto& [key, mult] : ab.terms()) {
    CHECK(mult == 1);
    CHECK(key.degree() == 2);
  }
}

TEST_CASE("the coproduct lists every Jacquet layer") {
  const auto unit = ReptnKey::unit();

  TensorElt st_side = coproduct(ReptnKey::single(st(1, -1)));
  TensorElt st_want;
  st_want.insert(unit, ReptnKey::irr_l({seg(1, -1)}), 1);
  st_want.insert(char_key(1, half(1)), char_key(1, half(-1)), 1);
  st_want.insert(ReptnKey::irr_l({seg(1, -1)}), unit, 1);
  CHECK(st_side == st_want);

  TensorElt z_side = coproduct(char_key(2, HalfInt(0)));
  TensorElt z_want;
  z_want.insert(unit, char_key(2, HalfInt(0)), 1);
  z_want.insert(char_key(1, half(-1)), char_key(1, half(1)), 1);
  z_want.insert(char_key(2, HalfInt(0)), unit, 1);
  CHECK(z_side == z_want);

  // Bidegrees in every term sum to the input degree.
  for (const auto& [pair, mult] : z_side.terms()) {
    CHECK(mult == 1);
    CHECK(pair.first.degree() + pair.second.degree() == 2);
  }
}

TEST_CASE("jacquet restriction along a character picks one layer") {
  const GrothElt one_two = GrothElt::single(char_key(2, HalfInt(0)));
  CHECK(jac_x(one_two, kOne, half(-1)) == GrothElt::single(char_key(1, half(1))));
  CHECK(jac_x(one_two, kOne, half(1)) == GrothElt());
  CHECK(jac_x(GrothElt::single(ReptnKey::single(st(1, 1))), kOne, half(1)) == GrothElt::one());
}

TEST_CASE("a product is irreducible exactly when its segments are unlinked") {
  CHECK(irreducible_test(ReptnKey::std_key({speh(1, -1), speh(3, -3)})));
  CHECK_FALSE(irreducible_test(ReptnKey::std_key({st(1, 1), st(-1, -1)})));
  CHECK(irreducible_test(ReptnKey::std_key(
      {Factor{FactorKind::St, Segment(CuspidalLabel::cuspidal(2, "sigma"), HalfInt(1), HalfInt(0))},
       Factor{FactorKind::St, Segment(CuspidalLabel::cuspidal(2, "sigma"), HalfInt(1), HalfInt(0))}})));
  // A genuine St/Speh mix has no uniform composition rule here.
  CHECK_THROWS_AS(irreducible_test(ReptnKey::std_key({st(1, -1), speh(3, 1)})), MixedKindsError);
}

TEST_CASE("two linked factors split into a socle and a cosocle") {
  // Steinberg orientation: the longer segment is the sub.
  const auto st_case = ss_two_factor(st(1, 1), st(-1, -1));
  REQUIRE_FALSE(st_case.irreducible);
  CHECK(*st_case.sub == ReptnKey::irr_l({seg(1, -1)}));
  CHECK(*st_case.quotient == char_key(2, HalfInt(0)));

  // Mirrored orientation dualizes sub and quotient.
  const auto sp_case = ss_two_factor(speh(-1, -1), speh(1, 1));
  REQUIRE_FALSE(sp_case.irreducible);
  CHECK(*sp_case.sub == char_key(2, HalfInt(0)));
  CHECK(*sp_case.quotient == ReptnKey::irr_l({seg(1, -1)}));

  // Unlinked factors induce irreducibly.
  const auto flat = ss_two_factor(speh(1, -1), speh(3, -3));
  CHECK(flat.irreducible);
  CHECK(*flat.irr == ReptnKey::irr_z({seg(1, -1), seg(3, -3)}));

  // The two halves are distinct classes of the same rank.
  CHECK(*st_case.sub != *st_case.quotient);
  CHECK(st_case.sub->degree() == 2);
  CHECK(st_case.quotient->degree() == 2);

  CHECK_THROWS_AS(ss_two_factor(st(1, -1), speh(3, 1)), MixedKindsError);
}

TEST_CASE("langlands quotient names the top of a standard product") {
  CHECK(langlands_quotient(ReptnKey::std_key({st(1, 1), st(-1, -1)})) == char_key(2, HalfInt(0)));
  CHECK(langlands_quotient(ReptnKey::std_key({st(3, 1), st(-1, -1)})) ==
        ReptnKey::irr_l({seg(3, 1), seg(-1, -1)}));
  CHECK(langlands_quotient(ReptnKey::single(st(1, -1))) == ReptnKey::irr_l({seg(1, -1)}));
}

TEST_CASE("semisimplification decides small products") {
  const auto two_linked = ss(GrothElt::single(ReptnKey::std_key({st(1, 1), st(-1, -1)})));
  REQUIRE(two_linked.has_value());
  CHECK(*two_linked == GrothElt::single(ReptnKey::irr_l({seg(1, -1)})) +
                           GrothElt::single(char_key(2, HalfInt(0))));

  const auto single = ss(GrothElt::single(ReptnKey::single(speh(1, -1))));
  REQUIRE(single.has_value());
  CHECK(*single == GrothElt::single(char_key(2, HalfInt(0))));

  // Three pairwise-linked factors exceed the decidable fragment.
  CHECK_FALSE(ss(GrothElt::single(ReptnKey::std_key({st(1, 1), st(0, 0), st(-1, -1)}))).has_value());

  // Pairwise-unlinked factors of any length collapse to one irreducible.
  const auto flat = ss(GrothElt::single(ReptnKey::std_key({speh(1, -1), speh(3, -3), speh(5, -5)})));
  REQUIRE(flat.has_value());
  CHECK(*flat == GrothElt::single(ReptnKey::irr_z({seg(1, -1), seg(3, -3), seg(5, -5)})));
}

TEST_CASE("ext between named irreducibles in the decidable fragment") {
  const auto st2 = ReptnKey::irr_l({seg(1, -1)});
  const auto want = std::map<int, long long>{{0, 1}, {1, 1}};
  CHECK(ext_irr(st2, st2) == want);
  CHECK(ext_irr(st2, ReptnKey::irr_l({seg(3, 1)})).empty());

  const auto chi_pt = ReptnKey::irr_z({Segment(CuspidalLabel::ramified("chi"), HalfInt(0), HalfInt(0))});
  const auto one_pt = char_key(1, HalfInt(0));
  CHECK(ext_irr(chi_pt, one_pt).empty());

  // Same supports but no single-factor match: outside the fragment.
  CHECK_THROWS_AS(ext_irr(ReptnKey::irr_l({seg(3, 1), seg(-1, -1)}), char_key(3, half(1))),
                  NotDecidableError);
}

TEST_CASE("the dual flips every segment and respects products") {
  CHECK(mvw_dual(ReptnKey::irr_l({seg(3, 1), seg(-1, -1)})) ==
        ReptnKey::irr_l({seg(-1, -3), seg(1, 1)}));
  CHECK(mvw_dual(char_key(2, HalfInt(0))) == char_key(2, HalfInt(0)));

  const auto key = ReptnKey::std_key({st(3, 1), speh(1, -1)});
  CHECK(mvw_dual(mvw_dual(key)) == key);

  const GrothElt a = GrothElt::single(ReptnKey::single(st(1, 1)));
  const GrothElt b = GrothElt::single(ReptnKey::single(speh(4, 2)));
  CHECK(mvw_dual(product(a, b)) == product(mvw_dual(a), mvw_dual(b)));
}

TEST_CASE("characters expand to a Z-segment or a row of points") {
  const auto d3 = char_to_data(3, half(1));
  CHECK(d3.z == std::vector<Segment>{seg(3, -1)});
  CHECK(d3.l == std::vector<Segment>{seg(3, 3), seg(1, 1), seg(-1, -1)});

  const auto d1 = char_to_data(1, HalfInt(0));
  CHECK(d1.z == std::vector<Segment>{seg(0, 0)});
  CHECK(d1.l == d1.z);

  const auto d2 = char_to_data(2, HalfInt(0));
  CHECK(d2.z == std::vector<Segment>{seg(1, -1)});
  CHECK(d2.l == std::vector<Segment>{seg(1, 1), seg(-1, -1)});
  CHECK(char_key(2, HalfInt(0)) == ReptnKey::irr_z({seg(1, -1)}));
  CHECK(char_key(2, HalfInt(0)).is_character());
}

TEST_CASE("cuspidal support lists the points under a key") {
  using Support = std::vector<std::pair<CuspidalLabel, HalfInt>>;
  const Support want{{kOne, half(-1)}, {kOne, half(1)}, {kOne, half(3)}};
  CHECK(cuspidal_support(ReptnKey::std_key({st(3, 1), st(-1, -1)})) == want);
  const Support two{{kOne, half(-1)}, {kOne, half(1)}};
  CHECK(cuspidal_support(char_key(2, HalfInt(0))) == two);
  CHECK(cuspidal_support(ReptnKey::unit()).empty());
}
