#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "segcalc/groth.hpp"

namespace segcalc {

// Value of an unramified character at a uniformizer, as a root of unity:
// {1, 0} is the unit 1; otherwise a primitive-order root exp(2 pi i j / r).
struct UnitTag {
  int order = 1;
  int exponent = 0;

  static UnitTag one() { return UnitTag{}; }
  static UnitTag root(int order, int exponent);

  bool is_one() const { return order == 1; }
  UnitTag inverse() const { return is_one() ? *this : root(order, order - exponent); }

  friend auto operator<=>(const UnitTag&, const UnitTag&) = default;

  std::string str() const;
};

// Finite product prod_i (1 - u_i q^{a_i} X)^{-mult_i} with X = q^{-s}.  The
// factor (u, a) has a (real) pole exactly at s = a when u = 1; other roots of
// unity never meet the real axis.
class LFactoredFn {
 public:
  static LFactoredFn one() { return LFactoredFn(); }

  void add_factor(UnitTag u, HalfInt a, long long mult = 1);
  const std::map<std::pair<UnitTag, HalfInt>, long long>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  long long pole_order_at(HalfInt s0) const;

  LFactoredFn& operator*=(const LFactoredFn& o);
  friend LFactoredFn operator*(LFactoredFn a, const LFactoredFn& b) { return a *= b; }

  friend bool operator==(const LFactoredFn&, const LFactoredFn&) = default;

  std::string str() const;

 private:
  std::map<std::pair<UnitTag, HalfInt>, long long> factors_;  // no zero multiplicities
};

// The L-multisegment of an irreducible given by a key: IrrL keys carry it
// directly; IrrZ keys are bridged through characters when every segment lies
// on a dim-1 line and the segments are pairwise unlinked.  Throws
// NotDecidableError otherwise.
std::vector<Segment> l_data_of(const ReptnKey& key);

// Standard L-function: each segment on an unramified-character line
// contributes the factor (value at the uniformizer, -x); all other lines
// contribute nothing.
LFactoredFn gj_lfunction(const std::vector<Segment>& l_data);
LFactoredFn gj_lfunction(const ReptnKey& key);

// L-function of the contragredient, computed without dualizing the data:
// the segment [x, y] contributes (dual unit, y).
LFactoredFn lfun_dual(const std::vector<Segment>& l_data);
LFactoredFn lfun_dual(const ReptnKey& key);

// Divide two factored functions.  entire iff every denominator factor
// cancels; the remainder is the reduced fraction.
struct LfunDivision {
  bool entire = false;
  LFactoredFn numer_left;
  LFactoredFn denom_left;
};
LfunDivision lfun_div(const LFactoredFn& numer, const LFactoredFn& denom);

// Poles of L(s, pi) and L(s, pi^vee) at the first reducibility point
// s0 = (1 + m - n)/2 of the (n, m) lift.
struct BothPole {
  bool pole_pi = false;
  bool pole_dual = false;
  HalfInt s0;
};
BothPole both_pole_at(int n, int m, const std::vector<Segment>& l_data);
BothPole both_pole_at(int n, int m, const ReptnKey& key);

}  // namespace segcalc
