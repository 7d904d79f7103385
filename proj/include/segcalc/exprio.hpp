#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "segcalc/filtr.hpp"
#include "segcalc/groth.hpp"
#include "segcalc/lfun.hpp"
#include "segcalc/theta.hpp"

namespace segcalc {

// A parsed product expression.  Grammar (whitespace-insensitive):
//   rep   := atom ( "x" atom )*
//   atom  := "St" "[" h "," h "]" label?
//          | "Speh" "[" h "," h "]" label?
//          | "char" "(" int "," h ")"        the character |det_n|^c
//          | "triv" "(" int ")"              = char(n, 0)
//          | "st" "(" int ")"                the discrete-series member St of triv(n)'s segment
//          | "1"                             the empty product
//   label := "@" rho
//   rho   := "one" | "unr" "(" int "," int ")" | "ram" "(" name ")"
//          | "cusp" "(" int "," name ")"
//   h     := half-integer: "3/2", "-1/2", "0", "2"
// Atom order is kept as written; keys canonicalize later.
struct RepExpr {
  std::vector<Factor> atoms;

  friend bool operator==(const RepExpr&, const RepExpr&) = default;
};

RepExpr parse_rep(const std::string& text);  // throws ParseError

// Standalone value parsers for CLI flags.
HalfInt parse_halfint(const std::string& text);
CuspidalLabel parse_label(const std::string& text);

// Grammar-form text; parse_rep(render_text(e)) == e.
std::string render_text(const RepExpr& e);

// Interpretations of an expression.
ReptnKey to_std_key(const RepExpr& e);           // class of the written product
std::vector<Segment> to_l_data(const RepExpr& e);  // L-data: St atoms whole, Speh atoms as points

// Text forms for composite results (scalar types render via their str()).
std::string text_of(const ExtTable& t);
std::string text_of(const ThetaResult& r);

// Stable JSON forms: object keys sorted, half-integers as {"num","den"},
// terms in canonical order.  Byte-stable for equal values.
nlohmann::json json_of(HalfInt h);
nlohmann::json json_of(const CuspidalLabel& l);
nlohmann::json json_of(const Segment& s);
nlohmann::json json_of(const Factor& f);
nlohmann::json json_of(const ReptnKey& k);
nlohmann::json json_of(const GrothElt& g);
nlohmann::json json_of(const TensorElt& t);
nlohmann::json json_of(const ExtTable& t);
nlohmann::json json_of(const LFactoredFn& f);
nlohmann::json json_of(const ThetaResult& r);
nlohmann::json json_of(const RankPiece& p);
nlohmann::json json_of(const KudlaPiece& p);

}  // namespace segcalc
