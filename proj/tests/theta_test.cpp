#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "segcalc/errors.hpp"
#include "segcalc/theta.hpp"

using namespace segcalc;

namespace {
const CuspidalLabel kOne = CuspidalLabel::trivial();
Segment seg(long long tx, long long ty) {
  return Segment(kOne, HalfInt::from_twice(tx), HalfInt::from_twice(ty));
}
GrothElt cls(const ReptnKey& k) { return GrothElt::single(k); }
}  // namespace

TEST_CASE("the cosocle lift pads a chain and dualizes the data") {
  // One padding point at exponent 0, plus the reflected data points.
  const auto up = small_theta(2, 3, char_to_data(2, HalfInt(0)).l);
  CHECK(up == std::vector<Segment>{seg(1, 1), seg(0, 0), seg(-1, -1)});

  CHECK(small_theta(1, 2, char_to_data(1, HalfInt(0)).l) ==
        std::vector<Segment>{seg(0, 0), seg(0, 0)});

  CHECK(small_theta(2, 2, {seg(3, 1)}) == std::vector<Segment>{seg(-1, -3)});

  CHECK_THROWS_AS(small_theta(3, 2, char_to_data(3, HalfInt(0)).l), RankOrderError);
  CHECK_THROWS_AS(small_theta(2, 3, char_to_data(3, HalfInt(0)).l), std::invalid_argument);
}

TEST_CASE("pole-free lifts are trivial-block products of the dual") {
  const auto r = big_theta(2, 3, char_to_data(2, HalfInt(0)).l);
  CHECK(r.theta == product(cls(char_key(2, HalfInt(0))), cls(char_key(1, HalfInt(0)))));
  CHECK(r.order_hint == OrderHint::Symmetric);
  CHECK(r.irreducible == Tristate::True);
  CHECK(r.source == ThetaSource::PoleFree);
  CHECK_FALSE(r.not_covered);
  REQUIRE(r.ext.size() == 1);
  CHECK(r.ext.at(0) == mvw_dual(r.theta));
  CHECK(r.ep == product(cls(char_key(2, HalfInt(0))), cls(char_key(1, HalfInt(0)))));

  const auto st3 = big_theta(3, 3, {seg(2, -2)});
  CHECK(st3.theta == cls(ReptnKey::irr_l({seg(2, -2)})));
  CHECK(st3.irreducible == Tristate::True);
  CHECK(st3.ext.at(0) == st3.theta);

  // A one-sided pole fixes the order of the trivial block.
  const auto right = big_theta(2, 4, char_to_data(2, HalfInt(-1)).l);
  CHECK(right.order_hint == OrderHint::TrivialBlockRight);
  CHECK(right.irreducible == Tristate::False);
  CHECK(right.theta == product(cls(char_key(2, HalfInt(1))), cls(char_key(2, HalfInt(0)))));
}

TEST_CASE("the degenerate lift of a character splits in two degrees") {
  const auto r = big_theta(2, 2, char_to_data(2, HalfInt(0)).l);
  const ReptnKey pair = ReptnKey::std_key({Factor{FactorKind::Speh, seg(1, 1)},
                                           Factor{FactorKind::Speh, seg(-1, -1)}});
  CHECK(r.theta == cls(pair));
  CHECK(r.irreducible == Tristate::False);
  CHECK(r.source == ThetaSource::DegenerateSeries);
  CHECK(r.order_hint == OrderHint::Symmetric);
  REQUIRE(r.ext.size() == 2);
  CHECK(r.ext.at(0) == cls(pair));
  CHECK(r.ext.at(1) == cls(ReptnKey::irr_l({seg(1, -1)})));
  CHECK(r.ep == cls(char_key(2, HalfInt(0))));
  CHECK(r.ext.at(0) == mvw_dual(r.theta));
}

TEST_CASE("character ext tables cover both rank orders") {
  // n <= m with both poles: two degrees, full product and cosocle half.
  const auto deg = ext_weil_character(3, 4, HalfInt(0));
  REQUIRE(deg.ext.size() == 2);
  const GrothElt e0 = product(cls(char_key(2, half(-1))), cls(char_key(2, half(1))));
  CHECK(deg.ext.at(0) == e0);
  CHECK(deg.ext.at(1) == cls(ReptnKey::irr_z({seg(2, 0), seg(0, -2)})));
  CHECK(deg.theta == mvw_dual(e0));
  CHECK(deg.irreducible == Tristate::False);
  CHECK(deg.source == ThetaSource::DegenerateSeries);
  CHECK(deg.ep == product(cls(char_key(3, HalfInt(0))), cls(char_key(1, HalfInt(0)))));

  // n > m on the lattice: both degrees carry the swapped-product class.
  const auto up = ext_weil_character(3, 2, HalfInt(0));
  REQUIRE(up.ext.size() == 2);
  const GrothElt c = product(cls(char_key(1, HalfInt(-1))), cls(char_key(1, HalfInt(1))));
  CHECK(up.ext.at(0) == c);
  CHECK(up.ext.at(1) == c);
  CHECK(up.irreducible == Tristate::True);
  CHECK(up.source == ThetaSource::UpperRank);
  CHECK(up.theta == mvw_dual(c));
  CHECK(up.ext.at(0) == mvw_dual(up.theta));

  // n > m off the window: nothing survives.
  CHECK(ext_weil_character(3, 2, HalfInt(2)).ext.empty());
  CHECK(ext_weil_character(3, 2, half(1)).ext.empty());

  // n <= m without the double pole: concentrated in degree zero.
  const auto flat = ext_weil_character(2, 3, HalfInt(1));
  REQUIRE(flat.ext.size() == 1);
  CHECK(flat.ext.at(0) == product(cls(char_key(2, HalfInt(1))), cls(char_key(1, HalfInt(0)))));
  CHECK(flat.source == ThetaSource::PoleFree);
}

TEST_CASE("lifts the engine refuses still carry their honest flags") {
  // Both poles, not a character, below the stable range: no claim.
  const auto open = big_theta(3, 3, {seg(5, 5), seg(1, 1), seg(-1, -1)});
  CHECK(open.not_covered);
  CHECK(open.irreducible == Tristate::Unknown);
  CHECK(open.theta == GrothElt());
  CHECK(open.ext.empty());
  CHECK(open.ep == GrothElt());

  // Both poles, not a character, stable range: the class alone is pinned.
  const auto stable = big_theta(2, 3, {seg(2, 2), seg(-2, -2)});
  CHECK(stable.not_covered);
  CHECK(stable.source == ThetaSource::StableRange);
  CHECK(stable.irreducible == Tristate::Unknown);
  const GrothElt want = product(cls(ReptnKey::irr_z({seg(2, 2), seg(-2, -2)})),
                                cls(char_key(1, HalfInt(0))));
  CHECK(stable.theta == want);
  CHECK(stable.ep == want);

  CHECK_THROWS_AS(big_theta(3, 2, char_to_data(3, HalfInt(0)).l), RankOrderError);
}

TEST_CASE("the euler-poincare class is a one-sided product formula") {
  CHECK(ep_formula(2, 2, char_key(2, HalfInt(0))) == cls(char_key(2, HalfInt(0))));
  CHECK(ep_formula(3, 2, char_key(3, HalfInt(0))) == GrothElt());
  CHECK(ep_formula(1, 3, char_key(1, HalfInt(0))) ==
        product(cls(char_key(1, HalfInt(0))), cls(char_key(2, HalfInt(0)))));
}

TEST_CASE("projectivity holds from the doubled rank onward") {
  CHECK(is_projective(1, 1));
  CHECK_FALSE(is_projective(2, 2));
  CHECK(is_projective(2, 3));
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 12; ++m) CHECK(is_projective(n, m) == (m >= 2 * n - 1));

  CHECK(proj_dim_bound(2, 3) == 0);
  CHECK(proj_dim_bound(5, 6) == 2);
  CHECK(proj_dim_bound(4, 4) == 1);
  CHECK_THROWS_AS(proj_dim_bound(3, 2), RankOrderError);
}

TEST_CASE("the both-pole search finds the expected small families") {
  CHECK(enumerate_both_pole(1, half(3), {}).empty());

  const auto rank2 = enumerate_both_pole(2, half(3), {});
  REQUIRE(rank2.size() == 1);
  CHECK(rank2[0] == std::vector<Segment>{seg(1, 1), seg(-1, -1)});

  const auto rank3 = enumerate_both_pole(3, half(3), {CuspidalLabel::ramified("chi")});
  CHECK(rank3.size() == 16);
  // Every hit contains both pole witnesses: some x = -1/2 and some y = 1/2.
  for (const auto& hit : rank3) {
    const bool pi_pole = std::any_of(hit.begin(), hit.end(), [](const Segment& s) {
      return s.rho() == kOne && s.x() == half(-1);
    });
    const bool dual_pole = std::any_of(hit.begin(), hit.end(), [](const Segment& s) {
      return s.rho() == kOne && s.y() == half(1);
    });
    CHECK(pi_pole);
    CHECK(dual_pole);
  }
  // The two non-split families appear.
  CHECK(std::count(rank3.begin(), rank3.end(), std::vector<Segment>{seg(3, 1), seg(-1, -1)}) == 1);
  CHECK(std::count(rank3.begin(), rank3.end(), std::vector<Segment>{seg(1, 1), seg(-1, -3)}) == 1);
}

TEST_CASE("temperedness reads the segment midpoints") {
  CHECK(is_tempered({seg(2, -2), seg(0, 0)}));
  CHECK_FALSE(is_tempered({seg(2, 0)}));
  CHECK(is_tempered({}));
}
