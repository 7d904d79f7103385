#include "segcalc/segment.hpp"

#include <algorithm>
#include <stdexcept>

#include "segcalc/errors.hpp"

namespace segcalc {

Segment::Segment(CuspidalLabel rho, HalfInt x, HalfInt y)
    : rho_(std::move(rho)), x_(x), y_(y) {
  const HalfInt d = x_ - y_;
  if (!d.is_integral() || d.twice() < 0)
    throw std::invalid_argument("segment endpoints need x - y a non-negative integer, got [" +
                                x.str() + "," + y.str() + "]");
}

std::vector<HalfInt> Segment::exponents() const {
  std::vector<HalfInt> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (HalfInt e = x_; e >= y_; e -= HalfInt(1)) out.push_back(e);
  return out;
}

std::string Segment::str() const {
  std::string s = "[" + x_.str() + "," + y_.str() + "]";
  if (rho_.kind() != LabelKind::Trivial) s += "@" + rho_.str();
  return s;
}

bool seg_contains(const Segment& a, const Segment& b) {
  return a.rho() == b.rho() && a.x() >= b.x() && a.y() <= b.y();
}

bool is_linked(const Segment& a, const Segment& b) {
  if (a.rho() != b.rho()) return false;
  if (!(a.x() - b.x()).is_integral()) return false;
  if (seg_contains(a, b) || seg_contains(b, a)) return false;
  // Neither contains the other, so the x's and y's are strictly ordered the
  // same way; the union is unbroken iff the lower top reaches within one step
  // of the upper bottom.
  const HalfInt hi_y = std::max(a.y(), b.y());
  const HalfInt lo_x = std::min(a.x(), b.x());
  return hi_y - lo_x <= HalfInt(1);
}

bool precedes(const Segment& b, const Segment& a) {
  return is_linked(a, b) && b.x() <= a.x();
}

LinkLattice link_lattice(const Segment& a, const Segment& b) {
  if (!is_linked(a, b))
    throw NotLinkedError("link_lattice needs linked segments, got " + a.str() + " and " + b.str());
  Segment u(a.rho(), std::max(a.x(), b.x()), std::min(a.y(), b.y()));
  std::optional<Segment> inter;
  const HalfInt ix = std::min(a.x(), b.x());
  const HalfInt iy = std::max(a.y(), b.y());
  if (ix >= iy) inter = Segment(a.rho(), ix, iy);
  return LinkLattice{std::move(u), std::move(inter)};
}

Segment seg_dual(const Segment& a) { return Segment(a.rho().dual(), -a.y(), -a.x()); }

Segment seg_twist(const Segment& a, HalfInt c) { return Segment(a.rho(), a.x() + c, a.y() + c); }

HalfInt central_exponent(FactorKind, const Segment& a) { return (a.x() + a.y()).halved(); }

namespace {

// Depth k survives iff it is a multiple of dim within [0, degree]; returns
// the point count alpha = k / dim.
std::optional<long long> split_count(const Segment& a, long long k) {
  if (k < 0 || k > a.degree())
    throw OutOfRangeError("Jacquet depth " + std::to_string(k) + " outside [0," +
                          std::to_string(a.degree()) + "] for " + a.str());
  if (k % a.rho().dim() != 0) return std::nullopt;
  return k / a.rho().dim();
}

}  // namespace

std::optional<JacquetFactors> jacquet_st(const Segment& a, long long k) {
  const auto alpha = split_count(a, k);
  if (!alpha) return std::nullopt;
  JacquetFactors f;
  if (*alpha > 0) f.left = Segment(a.rho(), a.x(), a.x() - HalfInt(*alpha - 1));
  if (*alpha < a.length()) f.right = Segment(a.rho(), a.x() - HalfInt(*alpha), a.y());
  return f;
}

std::optional<JacquetFactors> jacquet_speh(const Segment& a, long long k) {
  const auto alpha = split_count(a, k);
  if (!alpha) return std::nullopt;
  JacquetFactors f;
  if (*alpha > 0) f.left = Segment(a.rho(), a.y() + HalfInt(*alpha - 1), a.y());
  if (*alpha < a.length()) f.right = Segment(a.rho(), a.x(), a.y() + HalfInt(*alpha));
  return f;
}

}  // namespace segcalc
