#include "segcalc/theta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "segcalc/errors.hpp"

namespace segcalc {

namespace {

long long total_degree(const std::vector<Segment>& l_data) {
  long long d = 0;
  for (const Segment& s : l_data) d += s.degree();
  return d;
}

GrothElt trivial_block(int b) {
  return b > 0 ? GrothElt::single(char_key(b, HalfInt(0))) : GrothElt::one();
}

// Irreducibility of a class, when the factor calculus decides it.
Tristate try_irreducible(const GrothElt& g) {
  if (g.terms().size() != 1 || g.terms().begin()->second != 1) return Tristate::Unknown;
  const ReptnKey& key = g.terms().begin()->first;
  if (key.basis() != ReptnKey::Basis::Std) return Tristate::True;
  try {
    return irreducible_test(key) ? Tristate::True : Tristate::False;
  } catch (const MixedKindsError&) {
    return Tristate::Unknown;
  }
}

// Shared holomorphic-case analysis: at least one of the two L-functions has
// no pole at s0, so the lift is the trivial-block product of the dual.
ThetaResult theta_holomorphic(int n, int m, const ReptnKey& pi_key, const BothPole& bp) {
  ThetaResult r;
  r.source = ThetaSource::PoleFree;
  GrothElt th = GrothElt::single(mvw_dual(pi_key));
  th = product(th, trivial_block(m - n));
  r.theta = th;
  if (!bp.pole_pi && !bp.pole_dual) {
    r.order_hint = OrderHint::Symmetric;
    r.irreducible = Tristate::True;
  } else {
    r.order_hint = !bp.pole_pi ? OrderHint::TrivialBlockLeft : OrderHint::TrivialBlockRight;
    r.irreducible = try_irreducible(th);
  }
  r.ext = {{0, mvw_dual(th)}};
  return r;
}

}  // namespace

std::vector<Segment> small_theta(int n, int m, const std::vector<Segment>& pi_l_data) {
  if (n > m) throw RankOrderError("small_theta needs n <= m");
  if (total_degree(pi_l_data) != n)
    throw std::invalid_argument("small_theta needs L-data of total degree n");
  std::vector<Segment> out;
  const CuspidalLabel one = CuspidalLabel::trivial();
  for (int j = 0; j <= m - n - 1; ++j) {
    const HalfInt e = -half(m - n - 1) + HalfInt(j);
    out.emplace_back(one, e, e);
  }
  for (const Segment& s : pi_l_data) out.push_back(seg_dual(s));
  std::sort(out.begin(), out.end());
  return out;
}

ThetaResult big_theta(int n, int m, const std::vector<Segment>& pi_l_data) {
  if (n > m) throw RankOrderError("big_theta needs n <= m");
  if (total_degree(pi_l_data) != n)
    throw std::invalid_argument("big_theta needs L-data of total degree n");
  const ReptnKey pi_key = ReptnKey::irr_l(pi_l_data);
  const BothPole bp = both_pole_at(n, m, pi_l_data);

  GrothElt ep;
  try {
    ep = ep_formula(n, m, pi_key);
  } catch (const NotDecidableError&) {
    // The EP class is a product formula; leave it unclaimed when the factor
    // calculus cannot express it.
  }

  if (!bp.pole_pi || !bp.pole_dual) {
    ThetaResult r = theta_holomorphic(n, m, pi_key, bp);
    r.ep = std::move(ep);
    return r;
  }
  if (pi_key.is_character()) {
    const Segment& z = pi_key.segments()[0];
    return ext_weil_character(n, m, central_exponent(FactorKind::Speh, z));
  }
  ThetaResult r;
  r.not_covered = true;
  r.irreducible = Tristate::Unknown;
  r.ep = std::move(ep);
  if (m >= 2 * n - 1) {
    // In the almost stable range the class of the lift is pinned even though
    // its module structure is not.
    try {
      r.theta = product(GrothElt::single(mvw_dual(pi_key)), trivial_block(m - n));
      r.source = ThetaSource::StableRange;
    } catch (const NotDecidableError&) {
    }
  }
  return r;
}

ThetaResult ext_weil_character(int n, int m, HalfInt x) {
  if (n < 1) throw std::invalid_argument("ext_weil_character needs n >= 1");
  const ReptnKey eta = char_key(n, x);
  if (n <= m) {
    const BothPole bp = both_pole_at(n, m, eta);
    if (!bp.pole_pi || !bp.pole_dual) {
      ThetaResult r = theta_holomorphic(n, m, eta, bp);
      r.ep = ep_formula(n, m, eta);
      return r;
    }
    // Both L-functions are singular at s0, so x = k - m/2 with
    // 1+m-n <= k <= n-1; the lift sits in the two-step degenerate series.
    const long long k = (x + half(m)).twice() / 2;
    const Segment s1 = char_to_data(static_cast<int>(m - k), half(k - n)).z[0];
    const Segment s2 = char_to_data(static_cast<int>(k), half(n - m + k)).z[0];
    const ReptnKey e0 =
        ReptnKey::std_key({Factor{FactorKind::Speh, s1}, Factor{FactorKind::Speh, s2}});
    const SsTwoFactor two = ss_two_factor(Factor{FactorKind::Speh, s1}, Factor{FactorKind::Speh, s2});
    if (two.irreducible)
      throw std::logic_error("two-step degenerate series came out irreducible");
    ThetaResult r;
    r.source = ThetaSource::DegenerateSeries;
    r.order_hint = OrderHint::Symmetric;
    r.irreducible = Tristate::False;
    r.ext = {{0, GrothElt::single(e0)}, {1, GrothElt::single(*two.quotient)}};
    r.theta = GrothElt::single(mvw_dual(e0));
    r.ep = ep_formula(n, m, eta);
    return r;
  }
  // n > m: nonzero only on the half-integral lattice x = k - m/2, 0 <= k <= m.
  ThetaResult r;
  r.source = ThetaSource::UpperRank;
  r.order_hint = OrderHint::Symmetric;
  const HalfInt t = x + half(m);
  if (t.is_integral() && t.twice() >= 0 && t.twice() / 2 <= m) {
    const long long k = t.twice() / 2;
    GrothElt c = GrothElt::one();
    if (m - k > 0) c = product(c, GrothElt::single(char_key(static_cast<int>(m - k), half(k - n))));
    if (k > 0) c = product(c, GrothElt::single(char_key(static_cast<int>(k), half(n - m + k))));
    r.ext = {{0, c}, {1, c}};
    r.theta = mvw_dual(c);
    r.irreducible = Tristate::True;
  } else {
    r.irreducible = Tristate::False;
  }
  return r;
}

GrothElt ep_formula(int n, int m, const ReptnKey& pi) {
  if (n > m) return GrothElt::zero();
  return product(GrothElt::single(pi), trivial_block(m - n));
}

bool is_projective(int n, int m) { return m >= 2 * n - 1; }

long long proj_dim_bound(int n, int m) {
  if (n > m) throw RankOrderError("proj_dim_bound needs n <= m");
  if (is_projective(n, m)) return 0;
  const long long t = 2LL * n - m - 1;  // here m <= 2n-2, so t >= 1
  const long long ceil_bound = (t + 1) / 2;
  return n <= 4 ? std::min(ceil_bound, 1LL) : ceil_bound;
}

std::vector<std::vector<Segment>> enumerate_both_pole(
    int n, HalfInt bound, const std::vector<CuspidalLabel>& extra_labels) {
  if (n < 1 || bound < HalfInt(0)) return {};
  std::vector<CuspidalLabel> lines{CuspidalLabel::trivial()};
  for (const CuspidalLabel& l : extra_labels)
    if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(l);

  std::vector<Segment> pool;
  for (const CuspidalLabel& line : lines) {
    for (long long ty = -bound.twice(); ty <= bound.twice(); ++ty) {
      for (long long tx = ty; tx <= bound.twice(); tx += 2) {
        const Segment s(line, HalfInt::from_twice(tx), HalfInt::from_twice(ty));
        if (s.degree() <= n) pool.push_back(s);
      }
    }
  }
  std::sort(pool.begin(), pool.end());

  std::vector<std::vector<Segment>> hits;
  std::vector<Segment> chosen;
  auto search = [&](auto&& self, std::size_t from, long long remaining) -> void {
    if (remaining == 0) {
      if (const BothPole bp = both_pole_at(n, n, chosen); bp.pole_pi && bp.pole_dual)
        hits.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].degree() > remaining) continue;
      chosen.push_back(pool[i]);
      self(self, i, remaining - pool[i].degree());
      chosen.pop_back();
    }
  };
  search(search, 0, n);
  std::sort(hits.begin(), hits.end());
  return hits;
}

bool is_tempered(const std::vector<Segment>& l_data) {
  return std::all_of(l_data.begin(), l_data.end(),
                     [](const Segment& s) { return s.x() + s.y() == HalfInt(0); });
}

std::string to_string(OrderHint h) {
  switch (h) {
    case OrderHint::TrivialBlockLeft: return "trivial-block-left";
    case OrderHint::TrivialBlockRight: return "trivial-block-right";
    case OrderHint::Symmetric: return "symmetric";
  }
  return "?";
}

std::string to_string(ThetaSource s) {
  switch (s) {
    case ThetaSource::PoleFree: return "pole-free";
    case ThetaSource::DegenerateSeries: return "degenerate-series";
    case ThetaSource::UpperRank: return "upper-rank";
    case ThetaSource::StableRange: return "stable-range";
  }
  return "?";
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace segcalc
