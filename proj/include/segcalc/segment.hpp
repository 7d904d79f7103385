#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segcalc/cuspidal.hpp"
#include "segcalc/halfint.hpp"

namespace segcalc {

// [x, y]_rho: the exponent interval {x, x-1, ..., y} on the cuspidal line of
// rho.  Always nonempty: x - y must be a non-negative integer.
class Segment {
 public:
  Segment(CuspidalLabel rho, HalfInt x, HalfInt y);

  const CuspidalLabel& rho() const { return rho_; }
  HalfInt x() const { return x_; }
  HalfInt y() const { return y_; }

  long long length() const { return (x_ - y_).twice() / 2 + 1; }  // number of points
  long long degree() const { return rho_.dim() * length(); }
  bool is_point() const { return x_ == y_; }

  std::vector<HalfInt> exponents() const;  // x, x-1, ..., y

  // Canonical order: by cuspidal label, then x descending, then y descending.
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
    if (auto c = a.rho_ <=> b.rho_; c != 0) return c;
    if (auto c = b.x_ <=> a.x_; c != 0) return c;
    return b.y_ <=> a.y_;
  }
  friend bool operator==(const Segment&, const Segment&) = default;

  std::string str() const;

 private:
  CuspidalLabel rho_;
  HalfInt x_;
  HalfInt y_;
};

// a contains b (as exponent intervals on the same line).
bool seg_contains(const Segment& a, const Segment& b);

// Linked: same line, integral offset, neither contains the other, and the
// union of the two intervals is again an unbroken interval.
bool is_linked(const Segment& a, const Segment& b);

// precedes(b, a): b comes just before a, i.e. linked and b.x <= a.x.
// (Linked segments never share an endpoint, so the x's differ.)
bool precedes(const Segment& b, const Segment& a);

struct LinkLattice {
  Segment seg_union;                     // [max x, min y]
  std::optional<Segment> seg_inter;      // [min x, max y] when overlapping, else empty
};

// Union/intersection of two linked segments; the empty intersection is the
// distinguished degree-zero segment, represented as nullopt.
LinkLattice link_lattice(const Segment& a, const Segment& b);

Segment seg_dual(const Segment& a);            // [-y, -x] on the dual line
Segment seg_twist(const Segment& a, HalfInt c);  // [x+c, y+c]

enum class FactorKind { St, Speh };

// (x + y)/2: the exponent of the central character twist.  For any valid
// segment x + y is integral-doubled, so the value stays in (1/2)Z.  The kind
// does not change the value, only which family the twist is read against.
HalfInt central_exponent(FactorKind kind, const Segment& a);

// Normalized Jacquet functor of a single factor at depth k:
//   nullopt          -> the Jacquet module vanishes at this depth
//   {left, right}    -> factors of the unique surviving term; an absent side
//                       is the unit (empty segment)
struct JacquetFactors {
  std::optional<Segment> left;
  std::optional<Segment> right;
};

// St(Delta), depth k = alpha * dim: top alpha points split off the left.
std::optional<JacquetFactors> jacquet_st(const Segment& a, long long k);

// Speh(Delta), depth k = alpha * dim: bottom alpha points split off the left.
// At full depth the pair is (Delta, empty); the two functors are exchanged by
// k <-> degree - k together with swapping the sides.
std::optional<JacquetFactors> jacquet_speh(const Segment& a, long long k);

}  // namespace segcalc
