#include "segcalc/lfun.hpp"

#include <numeric>
#include <stdexcept>

#include "segcalc/errors.hpp"

namespace segcalc {

UnitTag UnitTag::root(int order, int exponent) {
  if (order < 1) throw std::invalid_argument("unit tag needs order >= 1");
  int j = exponent % order;
  if (j < 0) j += order;
  if (j == 0) return one();
  const int g = std::gcd(j, order);
  return UnitTag{order / g, j / g};
}

std::string UnitTag::str() const {
  if (is_one()) return "1";
  return "zeta(" + std::to_string(order) + "," + std::to_string(exponent) + ")";
}

void LFactoredFn::add_factor(UnitTag u, HalfInt a, long long mult) {
  if (mult == 0) return;
  const auto key = std::make_pair(u, a);
  auto it = factors_.find(key);
  if (it == factors_.end()) {
    factors_.emplace(key, mult);
  } else if ((it->second += mult) == 0) {
    factors_.erase(it);
  }
}

long long LFactoredFn::pole_order_at(HalfInt s0) const {
  const auto it = factors_.find(std::make_pair(UnitTag::one(), s0));
  return it == factors_.end() ? 0 : it->second;
}

LFactoredFn& LFactoredFn::operator*=(const LFactoredFn& o) {
  for (const auto& [k, m] : o.factors_) add_factor(k.first, k.second, m);
  return *this;
}

std::string LFactoredFn::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [k, m] : factors_) {
    if (!s.empty()) s += " * ";
    std::string base = "(1 - ";
    if (!k.first.is_one()) base += k.first.str() + " ";
    base += "q^{" + k.second.str() + "} X)";
    s += base + "^{" + std::to_string(-m) + "}";
  }
  return s;
}

std::vector<Segment> l_data_of(const ReptnKey& key) {
  if (key.basis() == ReptnKey::Basis::IrrL) return key.segments();
  if (key.basis() == ReptnKey::Basis::IrrZ) {
    for (std::size_t i = 0; i < key.segments().size(); ++i) {
      if (!key.segments()[i].rho().is_character())
        throw NotDecidableError("L-data of " + key.str() + " leaves the decidable fragment");
      for (std::size_t j = i + 1; j < key.segments().size(); ++j)
        if (is_linked(key.segments()[i], key.segments()[j]))
          throw NotDecidableError("L-data of " + key.str() + " leaves the decidable fragment");
    }
    // Irreducible product of characters: the L-points are the segment points.
    std::vector<Segment> pts;
    for (const Segment& s : key.segments())
      for (HalfInt e : s.exponents()) pts.emplace_back(s.rho(), e, e);
    std::sort(pts.begin(), pts.end());
    return pts;
  }
  throw NotDecidableError("L-data of the product class " + key.str() + " is not a single irreducible");
}

namespace {

UnitTag unit_of(const CuspidalLabel& rho) {
  return rho.kind() == LabelKind::Unramified ? UnitTag::root(rho.order(), rho.exponent())
                                             : UnitTag::one();
}

}  // namespace

LFactoredFn gj_lfunction(const std::vector<Segment>& l_data) {
  LFactoredFn f;
  for (const Segment& s : l_data)
    if (s.rho().has_l_factor()) f.add_factor(unit_of(s.rho()), -s.x());
  return f;
}

LFactoredFn gj_lfunction(const ReptnKey& key) { return gj_lfunction(l_data_of(key)); }

LFactoredFn lfun_dual(const std::vector<Segment>& l_data) {
  LFactoredFn f;
  for (const Segment& s : l_data)
    if (s.rho().has_l_factor()) f.add_factor(unit_of(s.rho()).inverse(), s.y());
  return f;
}

LFactoredFn lfun_dual(const ReptnKey& key) { return lfun_dual(l_data_of(key)); }

LfunDivision lfun_div(const LFactoredFn& numer, const LFactoredFn& denom) {
  LfunDivision d;
  d.numer_left = numer;
  for (const auto& [k, m] : denom.factors()) d.numer_left.add_factor(k.first, k.second, -m);
  // Split the signed exponents back into a reduced fraction.
  LFactoredFn num, den;
  for (const auto& [k, m] : d.numer_left.factors()) {
    if (m > 0)
      num.add_factor(k.first, k.second, m);
    else
      den.add_factor(k.first, k.second, -m);
  }
  d.numer_left = std::move(num);
  d.denom_left = std::move(den);
  // Factors surviving on the numerator side are exactly the uncancelled
  // poles, so the quotient is entire iff that side is trivial.
  d.entire = d.numer_left.is_one();
  return d;
}

BothPole both_pole_at(int n, int m, const std::vector<Segment>& l_data) {
  BothPole b;
  b.s0 = half(1 + m - n);
  b.pole_pi = gj_lfunction(l_data).pole_order_at(b.s0) > 0;
  b.pole_dual = lfun_dual(l_data).pole_order_at(b.s0) > 0;
  return b;
}

BothPole both_pole_at(int n, int m, const ReptnKey& key) {
  return both_pole_at(n, m, l_data_of(key));
}

}  // namespace segcalc
