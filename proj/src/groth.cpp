#include "segcalc/groth.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "segcalc/errors.hpp"

namespace segcalc {

namespace {

bool all_points(const std::vector<Segment>& segs) {
  return std::all_of(segs.begin(), segs.end(), [](const Segment& s) { return s.is_point(); });
}

bool pairwise_unlinked(const std::vector<Segment>& segs) {
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (is_linked(segs[i], segs[j])) return false;
  return true;
}

// A multiset of points forming one unbroken multiplicity-one chain collapses
// to the segment [top, bottom].  Input must be sorted (x descending).
std::optional<Segment> chain_collapse(const std::vector<Segment>& pts) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].rho() != pts[0].rho()) return std::nullopt;
    if (pts[i].x() != pts[i - 1].x() - HalfInt(1)) return std::nullopt;
  }
  return Segment(pts[0].rho(), pts.front().x(), pts.back().x());
}

}  // namespace

std::string Factor::str() const {
  return (kind == FactorKind::St ? "St" : "Speh") + seg.str();
}

ReptnKey ReptnKey::std_key(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  if (factors.size() == 1) {
    const Factor& f = factors[0];
    return f.kind == FactorKind::St ? irr_l({f.seg}) : irr_z({f.seg});
  }
  return ReptnKey(Basis::Std, std::move(factors), {});
}

ReptnKey ReptnKey::irr_l(std::vector<Segment> segments) {
  if (segments.empty()) return ReptnKey(Basis::Std, {}, {});
  std::sort(segments.begin(), segments.end());
  if (all_points(segments)) {
    // A chain of points is the character of its span; a pairwise-unlinked
    // point multiset induces irreducibly, so top and bottom data agree.
    if (segments.size() >= 2) {
      if (auto c = chain_collapse(segments)) return ReptnKey(Basis::IrrZ, {}, {*c});
    }
    if (pairwise_unlinked(segments)) return ReptnKey(Basis::IrrZ, {}, std::move(segments));
  }
  return ReptnKey(Basis::IrrL, {}, std::move(segments));
}

ReptnKey ReptnKey::irr_z(std::vector<Segment> segments) {
  if (segments.empty()) return ReptnKey(Basis::Std, {}, {});
  std::sort(segments.begin(), segments.end());
  if (all_points(segments) && segments.size() >= 2) {
    // A chain of points is the generalized Steinberg of its span.
    if (auto c = chain_collapse(segments)) return ReptnKey(Basis::IrrL, {}, {*c});
  }
  return ReptnKey(Basis::IrrZ, {}, std::move(segments));
}

long long ReptnKey::degree() const {
  long long d = 0;
  for (const Factor& f : factors_) d += f.seg.degree();
  for (const Segment& s : segments_) d += s.degree();
  return d;
}

std::optional<std::vector<Factor>> ReptnKey::to_std_factors() const {
  switch (basis_) {
    case Basis::Std:
      return factors_;
    case Basis::IrrL:
      if (!pairwise_unlinked(segments_)) return std::nullopt;
      break;
    case Basis::IrrZ:
      if (!pairwise_unlinked(segments_)) return std::nullopt;
      break;
  }
  std::vector<Factor> fs;
  fs.reserve(segments_.size());
  const FactorKind k = basis_ == Basis::IrrL ? FactorKind::St : FactorKind::Speh;
  for (const Segment& s : segments_) fs.push_back(Factor{k, s});
  return fs;
}

std::strong_ordering operator<=>(const ReptnKey& a, const ReptnKey& b) {
  if (auto c = a.basis_ <=> b.basis_; c != 0) return c;
  if (auto c = a.factors_ <=> b.factors_; c != 0) return c;
  return a.segments_ <=> b.segments_;
}

std::string ReptnKey::str() const {
  if (is_unit()) return "1";
  if (basis_ == Basis::Std) {
    std::string s;
    for (const Factor& f : factors_) {
      if (!s.empty()) s += " x ";
      s += f.str();
    }
    return s;
  }
  const bool top = basis_ == Basis::IrrL;
  std::string inner;
  for (const Segment& seg : segments_) {
    if (!inner.empty()) inner += " x ";
    inner += (top ? "St" : "Speh") + seg.str();
  }
  if (segments_.size() == 1) return inner;
  return (top ? "LQ(" : "Z(") + inner + ")";
}

GrothElt GrothElt::single(ReptnKey key, long long mult) {
  GrothElt g;
  g.insert(key, mult);
  return g;
}

void GrothElt::insert(const ReptnKey& key, long long mult) {
  if (mult == 0) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, mult);
  } else if ((it->second += mult) == 0) {
    terms_.erase(it);
  }
}

GrothElt& GrothElt::operator+=(const GrothElt& o) {
  for (const auto& [k, m] : o.terms_) insert(k, m);
  return *this;
}

GrothElt& GrothElt::operator-=(const GrothElt& o) {
  for (const auto& [k, m] : o.terms_) insert(k, -m);
  return *this;
}

GrothElt GrothElt::operator-() const {
  GrothElt g;
  for (const auto& [k, m] : terms_) g.terms_.emplace(k, -m);
  return g;
}

GrothElt GrothElt::scaled(long long c) const {
  GrothElt g;
  if (c != 0)
    for (const auto& [k, m] : terms_) g.terms_.emplace(k, c * m);
  return g;
}

namespace {

std::string coeff_str(long long m, const std::string& body, bool first) {
  std::string s;
  if (m < 0)
    s += first ? "-" : " - ";
  else if (!first)
    s += " + ";
  const long long a = m < 0 ? -m : m;
  if (a != 1) s += std::to_string(a) + "*";
  return s + body;
}

}  // namespace

std::string GrothElt::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, m] : terms_) {
    s += coeff_str(m, k.str(), first);
    first = false;
  }
  return s;
}

TensorElt TensorElt::single(ReptnKey left, ReptnKey right, long long mult) {
  TensorElt t;
  t.insert(left, right, mult);
  return t;
}

void TensorElt::insert(const ReptnKey& left, const ReptnKey& right, long long mult) {
  if (mult == 0) return;
  auto key = std::make_pair(left, right);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), mult);
  } else if ((it->second += mult) == 0) {
    terms_.erase(it);
  }
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  for (const auto& [k, m] : o.terms_) insert(k.first, k.second, m);
  return *this;
}

std::string TensorElt::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, m] : terms_) {
    s += coeff_str(m, k.first.str() + " (x) " + k.second.str(), first);
    first = false;
  }
  return s;
}

ReptnKey key_product(const ReptnKey& a, const ReptnKey& b) {
  auto fa = a.to_std_factors();
  auto fb = b.to_std_factors();
  if (!fa || !fb)
    throw NotDecidableError("product of " + a.str() + " and " + b.str() +
                            " leaves the decidable fragment");
  fa->insert(fa->end(), fb->begin(), fb->end());
  return ReptnKey::std_key(std::move(*fa));
}

GrothElt product(const GrothElt& a, const GrothElt& b) {
  GrothElt out;
  for (const auto& [ka, ma] : a.terms())
    for (const auto& [kb, mb] : b.terms()) out.insert(key_product(ka, kb), ma * mb);
  return out;
}

TensorElt tensor_product(const TensorElt& a, const TensorElt& b) {
  TensorElt out;
  for (const auto& [pa, ma] : a.terms())
    for (const auto& [pb, mb] : b.terms())
      out.insert(key_product(pa.first, pb.first), key_product(pa.second, pb.second), ma * mb);
  return out;
}

namespace {

TensorElt coproduct_factor(const Factor& f) {
  TensorElt out;
  const long long d = f.seg.rho().dim();
  const long long m = f.seg.length();
  const bool st = f.norm_kind() == FactorKind::St;
  for (long long alpha = 0; alpha <= m; ++alpha) {
    auto jf = st ? jacquet_st(f.seg, alpha * d) : jacquet_speh(f.seg, alpha * d);
    const ReptnKey l = jf->left ? ReptnKey::single(Factor{f.kind, *jf->left}) : ReptnKey::unit();
    const ReptnKey r = jf->right ? ReptnKey::single(Factor{f.kind, *jf->right}) : ReptnKey::unit();
    out.insert(l, r, 1);
  }
  return out;
}

}  // namespace

TensorElt coproduct(const ReptnKey& key) {
  auto fs = key.to_std_factors();
  if (!fs)
    throw NotDecidableError("coproduct of " + key.str() + " leaves the decidable fragment");
  TensorElt acc = TensorElt::single(ReptnKey::unit(), ReptnKey::unit());
  for (const Factor& f : *fs) acc = tensor_product(acc, coproduct_factor(f));
  return acc;
}

TensorElt coproduct(const GrothElt& a) {
  TensorElt out;
  for (const auto& [k, m] : a.terms()) {
    const TensorElt t = coproduct(k);
    for (const auto& [p, mult] : t.terms()) out.insert(p.first, p.second, m * mult);
  }
  return out;
}

GrothElt jac_x(const GrothElt& a, const CuspidalLabel& chi, HalfInt c) {
  if (!chi.is_character()) throw std::invalid_argument("jac_x needs a dim-1 line");
  const ReptnKey target = char_key(1, c, chi);
  GrothElt out;
  const TensorElt t = coproduct(a);
  for (const auto& [p, m] : t.terms())
    if (p.first == target) out.insert(p.second, m);
  return out;
}

namespace {

// Uniform kind of a factor list; points are compatible with either kind.
// nullopt when every factor is a point.
std::optional<FactorKind> uniform_kind(const std::vector<Factor>& fs) {
  std::optional<FactorKind> k;
  for (const Factor& f : fs) {
    if (f.seg.is_point()) continue;
    if (k && *k != f.kind)
      throw MixedKindsError("factors mix St and Speh kinds");
    k = f.kind;
  }
  return k;
}

}  // namespace

bool irreducible_test(const ReptnKey& key) {
  if (key.basis() != ReptnKey::Basis::Std) return true;
  const auto& fs = key.factors();
  uniform_kind(fs);  // throws on a genuine mix
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (is_linked(fs[i].seg, fs[j].seg)) return false;
  return true;
}

namespace {

// {sub, quotient} of the ordered product with the second segment preceding
// the first.
std::pair<ReptnKey, ReptnKey> ss_two_direct(FactorKind k, const Segment& s1, const Segment& s2) {
  const LinkLattice lat = link_lattice(s1, s2);
  std::vector<Segment> lattice_segs{lat.seg_union};
  if (lat.seg_inter) lattice_segs.push_back(*lat.seg_inter);
  if (k == FactorKind::St)
    return {ReptnKey::irr_l(lattice_segs), ReptnKey::irr_l({s1, s2})};
  return {ReptnKey::irr_z({s1, s2}), ReptnKey::irr_z(lattice_segs)};
}

}  // namespace

SsTwoFactor ss_two_factor(const Factor& first, const Factor& second) {
  const FactorKind k = uniform_kind({first, second}).value_or(FactorKind::St);
  const Segment& s1 = first.seg;
  const Segment& s2 = second.seg;
  SsTwoFactor r;
  if (!is_linked(s1, s2)) {
    r.irreducible = true;
    r.irr = k == FactorKind::St ? ReptnKey::irr_l({s1, s2}) : ReptnKey::irr_z({s1, s2});
    return r;
  }
  if (precedes(s2, s1)) {
    auto [sub, quot] = ss_two_direct(k, s1, s2);
    r.sub = std::move(sub);
    r.quotient = std::move(quot);
    return r;
  }
  // Mirrored case: the contragredient reverses the precedence and swaps the
  // socle with the cosocle.
  auto [sub, quot] = ss_two_direct(k, seg_dual(s1), seg_dual(s2));
  r.sub = mvw_dual(quot);
  r.quotient = mvw_dual(sub);
  return r;
}

ReptnKey langlands_quotient(const ReptnKey& key) {
  switch (key.basis()) {
    case ReptnKey::Basis::IrrL:
      return key;
    case ReptnKey::Basis::IrrZ: {
      if (!all_points(key.segments()) || !pairwise_unlinked(key.segments()))
        throw std::invalid_argument("langlands_quotient needs a product of St factors");
      return ReptnKey::irr_l(key.segments());
    }
    case ReptnKey::Basis::Std: {
      std::vector<Segment> segs;
      for (const Factor& f : key.factors()) {
        if (f.norm_kind() != FactorKind::St)
          throw std::invalid_argument("langlands_quotient needs a product of St factors");
        segs.push_back(f.seg);
      }
      return ReptnKey::irr_l(std::move(segs));
    }
  }
  throw std::logic_error("bad basis");
}

std::optional<GrothElt> ss(const GrothElt& a) {
  GrothElt out;
  for (const auto& [key, mult] : a.terms()) {
    if (key.basis() != ReptnKey::Basis::Std) {
      out.insert(key, mult);
      continue;
    }
    const auto& fs = key.factors();
    if (fs.empty()) {
      out.insert(key, mult);
      continue;
    }
    std::optional<FactorKind> k;
    try {
      k = uniform_kind(fs);
    } catch (const MixedKindsError&) {
      return std::nullopt;
    }
    if (fs.size() == 2) {
      const SsTwoFactor r = ss_two_factor(fs[0], fs[1]);
      if (r.irreducible) {
        out.insert(*r.irr, mult);
      } else {
        out.insert(*r.sub, mult);
        out.insert(*r.quotient, mult);
      }
      continue;
    }
    std::vector<Segment> segs;
    for (const Factor& f : fs) segs.push_back(f.seg);
    if (!pairwise_unlinked(segs)) return std::nullopt;
    out.insert(k.value_or(FactorKind::St) == FactorKind::St ? ReptnKey::irr_l(std::move(segs))
                                                            : ReptnKey::irr_z(std::move(segs)),
               mult);
  }
  return out;
}

namespace {

std::optional<Factor> single_factor_of(const ReptnKey& key) {
  if (key.basis() == ReptnKey::Basis::IrrL && key.segments().size() == 1)
    return Factor{FactorKind::St, key.segments()[0]};
  if (key.basis() == ReptnKey::Basis::IrrZ && key.segments().size() == 1)
    return Factor{FactorKind::Speh, key.segments()[0]};
  return std::nullopt;
}

}  // namespace

std::map<int, long long> ext_irr(const ReptnKey& a, const ReptnKey& b) {
  const auto fa = single_factor_of(a);
  const auto fb = single_factor_of(b);
  if (fa && fb && fa->norm_kind() == fb->norm_kind()) {
    if (fa->seg == fb->seg) return {{0, 1}, {1, 1}};
    return {};
  }
  const auto sa = cuspidal_support(a);
  const auto sb = cuspidal_support(b);
  std::vector<std::pair<CuspidalLabel, HalfInt>> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (common.empty()) return {};
  throw NotDecidableError("ext_irr(" + a.str() + ", " + b.str() +
                          ") leaves the decidable fragment");
}

ReptnKey mvw_dual(const ReptnKey& key) {
  switch (key.basis()) {
    case ReptnKey::Basis::Std: {
      std::vector<Factor> fs;
      for (const Factor& f : key.factors()) fs.push_back(Factor{f.kind, seg_dual(f.seg)});
      return ReptnKey::std_key(std::move(fs));
    }
    case ReptnKey::Basis::IrrL:
    case ReptnKey::Basis::IrrZ: {
      std::vector<Segment> segs;
      for (const Segment& s : key.segments()) segs.push_back(seg_dual(s));
      return key.basis() == ReptnKey::Basis::IrrL ? ReptnKey::irr_l(std::move(segs))
                                                  : ReptnKey::irr_z(std::move(segs));
    }
  }
  throw std::logic_error("bad basis");
}

GrothElt mvw_dual(const GrothElt& a) {
  GrothElt out;
  for (const auto& [k, m] : a.terms()) out.insert(mvw_dual(k), m);
  return out;
}

CharData char_to_data(int n, HalfInt c, const CuspidalLabel& chi) {
  if (n < 1) throw std::invalid_argument("character needs n >= 1");
  if (!chi.is_character()) throw std::invalid_argument("character needs a dim-1 line");
  const HalfInt top = c + half(n - 1);
  CharData d;
  d.z.emplace_back(chi, top, c - half(n - 1));
  for (int j = 0; j < n; ++j) d.l.emplace_back(chi, top - HalfInt(j), top - HalfInt(j));
  return d;
}

ReptnKey char_key(int n, HalfInt c, const CuspidalLabel& chi) {
  return ReptnKey::irr_z(char_to_data(n, c, chi).z);
}

std::vector<std::pair<CuspidalLabel, HalfInt>> cuspidal_support(const ReptnKey& key) {
  std::vector<std::pair<CuspidalLabel, HalfInt>> out;
  auto add = [&out](const Segment& s) {
    for (HalfInt e : s.exponents()) out.emplace_back(s.rho(), e);
  };
  for (const Factor& f : key.factors()) add(f.seg);
  for (const Segment& s : key.segments()) add(s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace segcalc
