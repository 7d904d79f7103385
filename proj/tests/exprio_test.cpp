#include <doctest.h>

#include <string>
#include <vector>

#include "segcalc/errors.hpp"
#include "segcalc/exprio.hpp"
#include "segcalc/groth.hpp"
#include "segcalc/theta.hpp"

using namespace segcalc;

namespace {
Segment seg(long long tx, long long ty) {
  return Segment(CuspidalLabel::trivial(), HalfInt::from_twice(tx), HalfInt::from_twice(ty));
}
}  // namespace

TEST_CASE("the expression grammar covers atoms, labels, and products") {
  const RepExpr st = parse_rep("St[1/2,-1/2]");
  REQUIRE(st.atoms.size() == 1);
  CHECK(st.atoms[0] == Factor{FactorKind::St, seg(1, -1)});

  const RepExpr ch = parse_rep("char(2,0)");
  REQUIRE(ch.atoms.size() == 1);
  CHECK(ch.atoms[0] == Factor{FactorKind::Speh, seg(1, -1)});

  const RepExpr two = parse_rep("St[1,0]@cusp(2,sigma) x Speh[1/2,-1/2]");
  REQUIRE(two.atoms.size() == 2);
  CHECK(two.atoms[0].seg.rho() == CuspidalLabel::cuspidal(2, "sigma"));
  CHECK(two.atoms[1] == Factor{FactorKind::Speh, seg(1, -1)});

  CHECK(parse_rep("1").atoms.empty());
  CHECK(to_std_key(parse_rep("1")) == ReptnKey::unit());

  CHECK(parse_rep("triv(3)").atoms[0] == Factor{FactorKind::Speh, seg(2, -2)});
  CHECK(parse_rep("st(3)").atoms[0] == Factor{FactorKind::St, seg(2, -2)});
  CHECK(parse_rep("char(1,3/2)").atoms[0] == Factor{FactorKind::Speh, seg(3, 3)});
  CHECK(parse_rep("St[0,0]@unr(3,2)").atoms[0].seg.rho() == CuspidalLabel::unramified(3, 2));
  CHECK(parse_rep("Speh[0,0]@ram(chi)").atoms[0].seg.rho() == CuspidalLabel::ramified("chi"));

  // Whitespace never matters.
  CHECK(parse_rep("  St[ 1/2 , -1/2 ]  x  triv( 2 ) ") ==
        parse_rep("St[1/2,-1/2] x triv(2)"));
}

TEST_CASE("parse failures carry a position and the expected tokens") {
  CHECK_THROWS_AS(parse_rep("foo"), ParseError);
  CHECK_THROWS_AS(parse_rep("St[1/2]"), ParseError);
  CHECK_THROWS_AS(parse_rep("St[1/2,-1/2] y St[0,0]"), ParseError);
  CHECK_THROWS_AS(parse_rep("char(0,0)"), ParseError);
  CHECK_THROWS_AS(parse_rep("St[1/3,0]"), ParseError);
  CHECK_THROWS_AS(parse_rep("St[-1/2,1/2]"), ParseError);

  try {
    parse_rep("St[1/2,-1/2] x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 14);
    CHECK(e.expected == "St, Speh, char, triv, st, or 1");
  }
}

TEST_CASE("standalone parsers for flags") {
  CHECK(parse_halfint("3/2") == half(3));
  CHECK(parse_halfint("-1/2") == half(-1));
  CHECK(parse_halfint("2") == HalfInt(2));
  CHECK(parse_halfint("4/2") == HalfInt(2));
  CHECK(parse_halfint("3/1") == HalfInt(3));
  CHECK_THROWS_AS(parse_halfint("1/3"), ParseError);
  CHECK_THROWS_AS(parse_halfint("x"), ParseError);
  CHECK_THROWS_AS(parse_halfint("1 2"), ParseError);

  CHECK(parse_label("one") == CuspidalLabel::trivial());
  CHECK(parse_label("unr(3,1)") == CuspidalLabel::unramified(3, 1));
  CHECK(parse_label("ram(chi)") == CuspidalLabel::ramified("chi"));
  CHECK(parse_label("cusp(2,sigma)") == CuspidalLabel::cuspidal(2, "sigma"));
  CHECK_THROWS_AS(parse_label("bogus"), ParseError);
}

TEST_CASE("rendering is grammar-stable and round-trips") {
  CHECK(render_text(parse_rep("1")) == "1");
  CHECK(render_text(parse_rep("St[1/2,-1/2]")) == "St[1/2,-1/2]");
  CHECK(render_text(parse_rep("St[1,0]@cusp(2,sigma) x Speh[1/2,-1/2]")) ==
        "St[1,0]@cusp(2,sigma) x Speh[1/2,-1/2]");

  const std::vector<std::string> samples{
      "1",
      "St[3/2,1/2]",
      "Speh[2,-2]",
      "St[0,0]@ram(chi)",
      "Speh[1/2,1/2]@unr(3,2) x St[5,1]",
      "St[1,0]@cusp(2,sigma) x Speh[1/2,-1/2] x St[0,0]",
  };
  for (const auto& s : samples) {
    const RepExpr e = parse_rep(s);
    CHECK(parse_rep(render_text(e)) == e);
  }
}

TEST_CASE("expressions map to keys and to L-data") {
  CHECK(to_std_key(parse_rep("St[1/2,1/2] x St[-1/2,-1/2]")) ==
        ReptnKey::std_key({Factor{FactorKind::St, seg(1, 1)}, Factor{FactorKind::St, seg(-1, -1)}}));
  CHECK(to_std_key(parse_rep("char(2,0)")) == char_key(2, HalfInt(0)));
  CHECK(to_std_key(parse_rep("st(2)")) == ReptnKey::irr_l({seg(1, -1)}));

  CHECK(to_l_data(parse_rep("char(2,0)")) == std::vector<Segment>{seg(1, 1), seg(-1, -1)});
  CHECK(to_l_data(parse_rep("St[3/2,1/2] x char(1,0)")) ==
        std::vector<Segment>{seg(3, 1), seg(0, 0)});
  const auto ram = to_l_data(parse_rep("Speh[1,0]@ram(chi)"));
  const CuspidalLabel chi = CuspidalLabel::ramified("chi");
  CHECK(ram == std::vector<Segment>{Segment(chi, HalfInt(1), HalfInt(1)),
                                    Segment(chi, HalfInt(0), HalfInt(0))});
}

TEST_CASE("composite results have fixed text forms") {
  const ExtTable table{{0, product(GrothElt::single(char_key(1, half(1))),
                                   GrothElt::single(char_key(1, half(-1))))},
                       {1, GrothElt::single(ReptnKey::irr_l({seg(1, -1)}))}};
  CHECK(text_of(table) == "deg 0: Speh[1/2,1/2] x Speh[-1/2,-1/2]; deg 1: St[1/2,-1/2]");
  CHECK(text_of(ExtTable{}) == "0");

  const ThetaResult r = big_theta(2, 2, char_to_data(2, HalfInt(0)).l);
  CHECK(text_of(r) ==
        "theta: Speh[1/2,1/2] x Speh[-1/2,-1/2]\n"
        "order_hint: symmetric\n"
        "irreducible: false\n"
        "ext: deg 0: Speh[1/2,1/2] x Speh[-1/2,-1/2]; deg 1: St[1/2,-1/2]\n"
        "source: degenerate-series\n"
        "ep: Speh[1/2,-1/2]");
}

TEST_CASE("json forms are byte-stable") {
  CHECK(json_of(half(3)).dump() == R"({"den":2,"num":3})");
  CHECK(json_of(HalfInt(2)).dump() == R"({"den":1,"num":2})");
  CHECK(json_of(seg(1, -1)).dump() ==
        R"({"rho":{"kind":"one"},"x":{"den":2,"num":1},"y":{"den":2,"num":-1}})");
  CHECK(json_of(CuspidalLabel::unramified(3, 2)).dump() ==
        R"({"exp":2,"kind":"unr","order":3})");

  CHECK(json_of(GrothElt()).dump() == R"({"kind":"groth_elt","terms":[]})");
  CHECK(json_of(GrothElt::one()).dump() ==
        R"({"kind":"groth_elt","terms":[{"key":{"basis":"Std","factors":[]},"mult":1}]})");

  CHECK(json_of(char_key(1, half(1))).dump() ==
        R"({"basis":"IrrZ","segments":[{"rho":{"kind":"one"},"x":{"den":2,"num":1},"y":{"den":2,"num":1}}]})");

  // Equal values always dump to equal bytes.
  const auto a = json_of(big_theta(2, 2, char_to_data(2, HalfInt(0)).l)).dump();
  const auto b = json_of(big_theta(2, 2, char_to_data(2, HalfInt(0)).l)).dump();
  CHECK(a == b);
}
