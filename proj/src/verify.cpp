#include "segcalc/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "segcalc/errors.hpp"
#include "segcalc/filtr.hpp"
#include "segcalc/groth.hpp"
#include "segcalc/lfun.hpp"
#include "segcalc/theta.hpp"

namespace segcalc {

std::string SuiteReport::text() const {
  std::ostringstream os;
  if (ok()) {
    os << "PASS " << cases << "/" << cases << "\n";
    return os.str();
  }
  os << "FAIL " << (cases - static_cast<long long>(failures.size())) << "/" << cases << "\n";
  for (const SuiteFailure& f : failures) {
    os << "case: " << f.input << "\n";
    os << "  lhs: " << f.lhs << "\n";
    os << "  rhs: " << f.rhs << "\n";
    os << "  repro: " << f.repro << "\n";
  }
  return os.str();
}

nlohmann::json SuiteReport::json() const {
  auto fails = nlohmann::json::array();
  for (const SuiteFailure& f : failures)
    fails.push_back(
        {{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"repro", f.repro}});
  return {{"kind", "suite_report"},
          {"suite", suite},
          {"cases", cases},
          {"failures", std::move(fails)}};
}

namespace {

struct Ctx {
  SuiteReport report;
  std::string repro_base;

  void fail(const std::string& input, const std::string& lhs, const std::string& rhs,
            std::string repro = "") {
    report.failures.push_back(
        {input, lhs, rhs, repro.empty() ? repro_base : std::move(repro)});
  }
  void check(bool ok, const std::string& input, const std::string& lhs, const std::string& rhs,
             const std::string& repro = "") {
    if (!ok) fail(input, lhs, rhs, repro);
  }
};

// ---------------------------------------------------------------- randomness

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long long below(long long n) { return static_cast<long long>(eng_() % static_cast<std::uint64_t>(n)); }
  long long in(long long lo, long long hi) { return lo + below(hi - lo + 1); }
  bool coin() { return below(2) == 0; }

  CuspidalLabel label() {
    switch (below(10)) {
      case 0: return CuspidalLabel::unramified(2, 1);
      case 1: return CuspidalLabel::unramified(3, 1);
      case 2: return CuspidalLabel::ramified("chi");
      case 3: return CuspidalLabel::cuspidal(2, "sigma");
      default: return CuspidalLabel::trivial();
    }
  }

  Segment segment(int max_len = 3) {
    const CuspidalLabel rho = label();
    const long long len = in(1, max_len);
    const long long tx = in(-6, 6);
    return Segment(rho, HalfInt::from_twice(tx), HalfInt::from_twice(tx - 2 * (len - 1)));
  }

  Factor factor(int max_len = 3) {
    return Factor{coin() ? FactorKind::St : FactorKind::Speh, segment(max_len)};
  }

  // Small product key; kinds are mixed freely (products allow that).
  ReptnKey key(int max_factors = 3, int max_len = 3) {
    std::vector<Factor> fs;
    const long long n = in(1, max_factors);
    for (long long i = 0; i < n; ++i) fs.push_back(factor(max_len));
    return ReptnKey::std_key(std::move(fs));
  }

  GrothElt elt(int max_terms = 2) {
    GrothElt g;
    const long long n = in(1, max_terms);
    for (long long i = 0; i < n; ++i) g.insert(key(), in(1, 2));
    return g;
  }

 private:
  std::mt19937_64 eng_;
};

// ------------------------------------------------------------------ helpers

using Tensor3 = std::map<std::tuple<ReptnKey, ReptnKey, ReptnKey>, long long>;

void add3(Tensor3& t, ReptnKey a, ReptnKey b, ReptnKey c, long long m) {
  const auto key = std::make_tuple(std::move(a), std::move(b), std::move(c));
  auto it = t.find(key);
  if (it == t.end()) {
    if (m != 0) t.emplace(key, m);
  } else if ((it->second += m) == 0) {
    t.erase(it);
  }
}

std::string tensor3_str(const Tensor3& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [k, m] : t) {
    if (!s.empty()) s += " + ";
    if (m != 1) s += std::to_string(m) + "*";
    s += std::get<0>(k).str() + " (x) " + std::get<1>(k).str() + " (x) " + std::get<2>(k).str();
  }
  return s;
}

// The character product named by a multiset of points: greedy maximal chains
// from the top give the pairwise-unlinked Z-data.
ReptnKey z_key_of_points(std::vector<Segment> pts) {
  std::sort(pts.begin(), pts.end());
  std::vector<bool> used(pts.size(), false);
  std::vector<Segment> chains;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const CuspidalLabel& line = pts[i].rho();
    const HalfInt top = pts[i].x();
    HalfInt bot = top;
    bool extended = true;
    while (extended) {
      extended = false;
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (!used[j] && pts[j].rho() == line && pts[j].x() == bot - HalfInt(1)) {
          used[j] = true;
          bot = bot - HalfInt(1);
          extended = true;
          break;
        }
      }
    }
    chains.emplace_back(line, top, bot);
  }
  return ReptnKey::irr_z(std::move(chains));
}

std::string l_data_str(const std::vector<Segment>& segs) {
  std::string s = "{";
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (i) s += ", ";
    s += segs[i].str();
  }
  return s + "}";
}

std::string ext_table_str(const std::map<int, GrothElt>& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [deg, val] : t) {
    if (!s.empty()) s += "; ";
    s += "deg " + std::to_string(deg) + ": " + val.str();
  }
  return s;
}

// -------------------------------------------------------------------- suites

void run_hopf(Ctx& ctx, const SuiteParams& params) {
  Rng rng(params.seed);
  for (long long it = 0; it < params.samples; ++it) {
    ++ctx.report.cases;
    const std::string tag = "hopf sample " + std::to_string(it);

    // Ring laws.
    const GrothElt a = rng.elt(), b = rng.elt(), c = rng.elt();
    const GrothElt ab_c = product(product(a, b), c);
    const GrothElt a_bc = product(a, product(b, c));
    ctx.check(ab_c == a_bc, tag + ": associativity", ab_c.str(), a_bc.str());
    const GrothElt ab = product(a, b), ba = product(b, a);
    ctx.check(ab == ba, tag + ": commutativity", ab.str(), ba.str());
    ctx.check(product(a, GrothElt::one()) == a, tag + ": unit law", product(a, GrothElt::one()).str(),
              a.str());

    // Coring laws on a small key.
    const ReptnKey k = rng.key(2, 2);
    const TensorElt d = coproduct(k);
    Tensor3 left, right;
    for (const auto& [p, m] : d.terms()) {
      const TensorElt dl = coproduct(p.first), dr = coproduct(p.second);
      for (const auto& [q, m2] : dl.terms()) add3(left, q.first, q.second, p.second, m * m2);
      for (const auto& [q, m2] : dr.terms()) add3(right, p.first, q.first, q.second, m * m2);
    }
    ctx.check(left == right, tag + ": coassociativity on " + k.str(), tensor3_str(left),
              tensor3_str(right));

    GrothElt counit_l, counit_r;
    bool graded = true;
    for (const auto& [p, m] : d.terms()) {
      if (p.first.is_unit()) counit_l.insert(p.second, m);
      if (p.second.is_unit()) counit_r.insert(p.first, m);
      graded = graded && p.first.degree() + p.second.degree() == k.degree();
    }
    const GrothElt kk = GrothElt::single(k);
    ctx.check(counit_l == kk, tag + ": left counit on " + k.str(), counit_l.str(), kk.str());
    ctx.check(counit_r == kk, tag + ": right counit on " + k.str(), counit_r.str(), kk.str());
    ctx.check(graded, tag + ": bidegree conservation on " + k.str(), d.str(),
              "all terms of total degree " + std::to_string(k.degree()));

    // Product/coproduct compatibility.
    const ReptnKey k2 = rng.key(1, 2);
    const TensorElt lhs = coproduct(key_product(k, k2));
    const TensorElt rhs = tensor_product(d, coproduct(k2));
    ctx.check(lhs == rhs, tag + ": coproduct multiplicativity on " + k.str() + " | " + k2.str(),
              lhs.str(), rhs.str());

    // Dual involutions.
    const ReptnKey dd = mvw_dual(mvw_dual(k));
    ctx.check(dd == k, tag + ": dual involution on " + k.str(), dd.str(), k.str());
    const ReptnKey dp = mvw_dual(key_product(k, k2));
    const ReptnKey pd = key_product(mvw_dual(k), mvw_dual(k2));
    ctx.check(dp == pd, tag + ": dual of product on " + k.str() + " | " + k2.str(), dp.str(),
              pd.str());
    const long long dsum = key_product(k, k2).degree();
    ctx.check(dsum == k.degree() + k2.degree(), tag + ": degree additivity",
              std::to_string(dsum), std::to_string(k.degree() + k2.degree()));
  }
}

void run_jacquet_grading(Ctx& ctx, const SuiteParams& params) {
  Rng rng(params.seed);
  for (long long it = 0; it < params.samples; ++it) {
    ++ctx.report.cases;
    const Segment a = rng.segment(4);
    const std::string tag = "jacquet sample " + std::to_string(it) + " on " + a.str();
    const long long d = a.rho().dim();
    const long long deg = a.degree();

    long long st_terms = 0, speh_terms = 0;
    bool ok_lattice = true, ok_degrees = true, ok_swap = true;
    for (long long k = 0; k <= deg; ++k) {
      const auto st = jacquet_st(a, k);
      const auto sp = jacquet_speh(a, k);
      ok_lattice = ok_lattice && (st.has_value() == (k % d == 0)) &&
                   (sp.has_value() == (k % d == 0));
      if (st) {
        ++st_terms;
        const long long dl = st->left ? st->left->degree() : 0;
        const long long dr = st->right ? st->right->degree() : 0;
        ok_degrees = ok_degrees && dl == k && dl + dr == deg;
      }
      if (sp) ++speh_terms;
      // The two functors are exchanged by depth reflection plus a side swap.
      const auto sp_ref = jacquet_speh(a, deg - k);
      if (st.has_value() != sp_ref.has_value()) {
        ok_swap = false;
      } else if (st && sp_ref) {
        ok_swap = ok_swap && st->left == sp_ref->right && st->right == sp_ref->left;
      }
    }
    const long long expected_terms = a.length() + 1;
    ctx.check(ok_lattice, tag + ": depth lattice", "survivors at multiples of dim",
              "off-lattice depths vanish");
    ctx.check(st_terms == expected_terms && speh_terms == expected_terms, tag + ": term count",
              std::to_string(st_terms) + " / " + std::to_string(speh_terms),
              std::to_string(expected_terms));
    ctx.check(ok_degrees, tag + ": graded degrees", "left degree k, total degree preserved", "");
    ctx.check(ok_swap, tag + ": depth-reflection swap", "jacquet_speh(deg-k) == swap(jacquet_st(k))",
              "");

    // Dual and twist laws.
    ctx.check(seg_dual(seg_dual(a)) == a, tag + ": dual involution", seg_dual(seg_dual(a)).str(),
              a.str());
    const HalfInt c = HalfInt::from_twice(rng.in(-4, 4));
    ctx.check(seg_twist(seg_twist(a, c), -c) == a, tag + ": twist inverse", "", "");
    const HalfInt ce = central_exponent(FactorKind::St, a);
    ctx.check(central_exponent(FactorKind::St, seg_dual(a)) == -ce, tag + ": central exponent dual",
              central_exponent(FactorKind::St, seg_dual(a)).str(), (-ce).str());

    // Linkage order: linked segments admit exactly one precedence.
    const HalfInt bx = a.x() + HalfInt(rng.in(-2, 2));
    const HalfInt by = a.y() + HalfInt(rng.in(-2, 2));
    if (bx >= by && is_linked(a, Segment(a.rho(), bx, by))) {
      const Segment b(a.rho(), bx, by);
      const bool p1 = precedes(a, b), p2 = precedes(b, a);
      ctx.check(p1 != p2, tag + ": precedence on " + b.str(), std::to_string(p1),
                std::to_string(p2));
      const LinkLattice lat = link_lattice(a, b);
      const long long lat_deg =
          lat.seg_union.degree() + (lat.seg_inter ? lat.seg_inter->degree() : 0);
      ctx.check(lat_deg == a.degree() + b.degree(), tag + ": lattice degree",
                std::to_string(lat_deg), std::to_string(a.degree() + b.degree()));
    }

    // Coproduct of a single factor matches the depth enumeration.
    const Factor f = rng.factor(3);
    const TensorElt cp = coproduct(ReptnKey::single(f));
    ctx.check(static_cast<long long>(cp.terms().size()) == f.seg.length() + 1,
              tag + ": coproduct term count on " + f.str(), std::to_string(cp.terms().size()),
              std::to_string(f.seg.length() + 1));
  }
}

void run_pole_characterization(Ctx& ctx) {
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= 16; ++m) {
      for (long long tx = -16; tx <= 16; ++tx) {
        ++ctx.report.cases;
        const HalfInt x = HalfInt::from_twice(tx);
        const BothPole bp = both_pole_at(n, m, char_key(n, x));
        const bool both = bp.pole_pi && bp.pole_dual;
        const HalfInt t = x + half(m);
        bool expected = false;
        if (t.is_integral()) {
          const long long k = t.twice() / 2;
          if (n <= m)
            expected = m <= 2 * n - 2 && k >= 1 + m - n && k <= n - 1;
          else
            expected = k >= 0 && k <= m;
        }
        ctx.check(both == expected,
                  "n=" + std::to_string(n) + " m=" + std::to_string(m) + " x=" + x.str(),
                  std::string("both_pole=") + (both ? "true" : "false"),
                  std::string("closed form=") + (expected ? "true" : "false"),
                  "segcalc lfun \"char(" + std::to_string(n) + "," + x.str() + ")\" --n " +
                      std::to_string(n) + " --m " + std::to_string(m));
      }
    }
  }
}

// Admissible (n, m, k) for the two-step degenerate series in the grid
// n <= n_max, m <= m_max.
std::vector<std::tuple<int, int, int>> degenerate_range(int n_max, int m_max) {
  std::vector<std::tuple<int, int, int>> out;
  for (int n = 2; n <= n_max; ++n)
    for (int m = n; m <= std::min(m_max, 2 * n - 2); ++m)
      for (int k = 1 + m - n; k <= n - 1; ++k) out.emplace_back(n, m, k);
  return out;
}

void run_ep_consistency(Ctx& ctx) {
  for (const auto& [n, m, k] : degenerate_range(6, 12)) {
    ++ctx.report.cases;
    const HalfInt x = half(2 * k - m);
    const std::string tag =
        "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
    const std::string repro = "segcalc ext --n " + std::to_string(n) + " --m " +
                              std::to_string(m) + " --char " + x.str();
    const ThetaResult r = ext_weil_character(n, m, x);
    if (r.ext.count(0) == 0 || r.ext.count(1) == 0) {
      ctx.fail(tag, ext_table_str(r.ext), "a two-degree Ext table", repro);
      continue;
    }
    const GrothElt diff = r.ext.at(0) - r.ext.at(1);
    const auto lhs = ss(diff);
    const GrothElt ep = ep_formula(n, m, char_key(n, x));
    const auto rhs = ss(ep);
    if (!lhs || !rhs) {
      ctx.fail(tag, "semisimplification undecided", "decidable classes", repro);
      continue;
    }
    ctx.check(*lhs == *rhs, tag + ": [ext0]-[ext1] vs product formula", lhs->str(), rhs->str(),
              repro);
    ctx.check(r.ep == ep, tag + ": attached EP class", r.ep.str(), ep.str(), repro);

    // The filtration pieces alternate down to the same class.
    GrothElt total;
    for (int j = 0; j <= std::min(n, m); ++j)
      for (const auto& [deg, val] : ext_rank_piece_character(n, m, j, x))
        total += deg % 2 == 0 ? val : -val;
    ctx.check(total == ep, tag + ": filtration alternating sum", total.str(), ep.str(), repro);
  }
}

void run_howe_crosscheck(Ctx& ctx) {
  for (const auto& [n, m, k] : degenerate_range(6, 12)) {
    ++ctx.report.cases;
    const HalfInt x = half(2 * k - m);
    const std::string tag =
        "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k);
    const std::string repro = "segcalc theta --n " + std::to_string(n) + " --m " +
                              std::to_string(m) + " --rep \"char(" + std::to_string(n) + "," +
                              x.str() + ")\"";
    const Segment s1 = char_to_data(m - k, half(k - n)).z[0];
    const Segment s2 = char_to_data(k, half(n - m + k)).z[0];
    if (!is_linked(s1, s2)) {
      ctx.fail(tag + ": defining pair must be linked", s1.str() + " | " + s2.str(), "linked",
               repro);
      continue;
    }
    const SsTwoFactor two =
        ss_two_factor(Factor{FactorKind::Speh, s1}, Factor{FactorKind::Speh, s2});
    if (two.irreducible) {
      ctx.fail(tag + ": two-step series must be reducible", "irreducible", "sub + quotient",
               repro);
      continue;
    }

    // Socle against the dual of the small lift.
    const auto eta_l = char_to_data(n, x).l;
    std::vector<Segment> dual_pts;
    for (const Segment& s : small_theta(n, m, eta_l)) dual_pts.push_back(seg_dual(s));
    const ReptnKey theta_side = z_key_of_points(std::move(dual_pts));
    ctx.check(*two.sub == theta_side, tag + ": socle vs dual small lift", two.sub->str(),
              theta_side.str(), repro);

    // One Jacquet step along the bottom exponent of the character block
    // peels one point off that block and nothing else.
    const HalfInt bottom = x - half(n - 1);
    const GrothElt socle_class = ep_formula(n, m, char_key(n, x));
    const GrothElt jac = jac_x(socle_class, CuspidalLabel::trivial(), bottom);
    GrothElt expected = GrothElt::single(char_key(n - 1, x + half(1)));
    if (m - n > 0) expected = product(expected, GrothElt::single(char_key(m - n, HalfInt(0))));
    ctx.check(jac == expected, tag + ": Jacquet step of the socle class", jac.str(),
              expected.str(), repro);
  }
}

void run_upper_rank_ext(Ctx& ctx) {
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m <= std::min(6, n - 1); ++m) {
      // On-lattice exponents, including out-of-window ranks.
      for (int k = -1; k <= m + 1; ++k) {
        ++ctx.report.cases;
        const HalfInt x = half(2 * k - m);
        const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                " x=" + x.str() + " (k=" + std::to_string(k) + ")";
        const std::string repro = "segcalc ext --n " + std::to_string(n) + " --m " +
                                  std::to_string(m) + " --char " + x.str();
        const ThetaResult r = ext_weil_character(n, m, x);
        const auto piece = ext_rank_piece_character(n, m, k, x);
        if (k >= 0 && k <= m) {
          ctx.check(r.ext == piece, tag + ": closed form vs rank-piece table",
                    ext_table_str(r.ext), ext_table_str(piece), repro);
          ctx.check(r.irreducible == Tristate::True, tag + ": lift irreducible", "", "", repro);
          // All other pieces stay silent at this exponent.
          for (int j = 0; j <= m; ++j)
            if (j != k)
              ctx.check(ext_rank_piece_character(n, m, j, x).empty(),
                        tag + ": piece j=" + std::to_string(j) + " silent",
                        ext_table_str(ext_rank_piece_character(n, m, j, x)), "0", repro);
        } else {
          ctx.check(r.ext.empty(), tag + ": off-window table vanishes", ext_table_str(r.ext), "0",
                    repro);
        }
        // For n > m the Euler characteristic of the whole filtration vanishes.
        GrothElt alt;
        for (int j = 0; j <= m; ++j)
          for (const auto& [deg, cls] : ext_rank_piece_character(n, m, j, x))
            alt = (deg % 2 == 0) ? (alt + cls) : (alt - cls);
        ctx.check(alt == GrothElt(), tag + ": alternating sum vanishes", alt.str(), "0", repro);
        // Off-lattice exponents vanish everywhere.
        const HalfInt x_off = x + HalfInt::from_twice(1);
        const ThetaResult r_off = ext_weil_character(n, m, x_off);
        bool pieces_silent = true;
        for (int j = 0; j <= m; ++j)
          pieces_silent = pieces_silent && ext_rank_piece_character(n, m, j, x_off).empty();
        ctx.check(r_off.ext.empty() && pieces_silent, tag + ": off-lattice vanishing",
                  ext_table_str(r_off.ext), "0", repro);
      }
    }
  }
}

void run_lowrank_g3(Ctx& ctx) {
  const CuspidalLabel chi = CuspidalLabel::ramified("chi");
  const CuspidalLabel one = CuspidalLabel::trivial();
  auto pt = [](const CuspidalLabel& l, long long twice) {
    return Segment(l, HalfInt::from_twice(twice), HalfInt::from_twice(twice));
  };
  auto sorted = [](std::vector<Segment> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  // Rank 1: a single point cannot carry both poles.
  {
    ++ctx.report.cases;
    const auto r = enumerate_both_pole(1, half(3), {});
    ctx.check(r.empty(), "rank 1 search", std::to_string(r.size()) + " hits", "0 hits",
              "segcalc enumerate --n 1 --bound 3/2");
    ++ctx.report.cases;
    const auto r2 = enumerate_both_pole(1, half(5), {chi});
    ctx.check(r2.empty(), "rank 1 search with extra line", std::to_string(r2.size()) + " hits",
              "0 hits", "segcalc enumerate --n 1 --bound 5/2 --label \"ram(chi)\"");
  }

  // Rank 2: only the trivial representation.
  {
    ++ctx.report.cases;
    const auto r = enumerate_both_pole(2, half(3), {});
    const std::vector<std::vector<Segment>> expected{sorted({pt(one, 1), pt(one, -1)})};
    std::string got;
    for (const auto& v : r) got += l_data_str(v) + " ";
    ctx.check(r == expected, "rank 2 search", got, l_data_str(expected[0]),
              "segcalc enumerate --n 2 --bound 3/2");
  }

  // Rank 3 with one ramified line: exactly three families.
  {
    ++ctx.report.cases;
    const auto r = enumerate_both_pole(3, half(3), {chi});
    std::vector<std::vector<Segment>> expected;
    // Family 1: the two character lifts of the whole line.
    expected.push_back(sorted({pt(one, 3), pt(one, 1), pt(one, -1)}));
    expected.push_back(sorted({pt(one, 1), pt(one, -1), pt(one, -3)}));
    // Family 2: a rank-1 character times the trivial block, on either line.
    for (long long c = -2; c <= 2; ++c)
      expected.push_back(sorted({pt(one, c), pt(one, 1), pt(one, -1)}));
    for (long long c = -3; c <= 3; ++c)
      expected.push_back(sorted({pt(chi, c), pt(one, 1), pt(one, -1)}));
    // Family 3: one two-point segment against the complementary point.
    expected.push_back(sorted({Segment(one, half(3), half(1)), pt(one, -1)}));
    expected.push_back(sorted({pt(one, 1), Segment(one, -half(1), -half(3))}));
    std::sort(expected.begin(), expected.end());

    if (r != expected) {
      std::string got, want;
      for (const auto& v : r) got += l_data_str(v) + " ";
      for (const auto& v : expected) want += l_data_str(v) + " ";
      ctx.fail("rank 3 search with one ramified line", got, want,
               "segcalc enumerate --n 3 --bound 3/2 --label \"ram(chi)\"");
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hopf",           "jacquet-grading", "pole-characterization", "ep-consistency",
          "howe-crosscheck", "upper-rank-ext",  "lowrank-g3"};
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  Ctx ctx;
  ctx.report.suite = name;
  ctx.repro_base = "segcalc verify " + name + " --seed " + std::to_string(params.seed) +
                   " --samples " + std::to_string(params.samples);
  if (name == "hopf") {
    run_hopf(ctx, params);
  } else if (name == "jacquet-grading") {
    run_jacquet_grading(ctx, params);
  } else if (name == "pole-characterization") {
    run_pole_characterization(ctx);
  } else if (name == "ep-consistency") {
    run_ep_consistency(ctx);
  } else if (name == "howe-crosscheck") {
    run_howe_crosscheck(ctx);
  } else if (name == "upper-rank-ext") {
    run_upper_rank_ext(ctx);
  } else if (name == "lowrank-g3") {
    run_lowrank_g3(ctx);
  } else {
    throw UnknownSuiteError("unknown suite '" + name + "'; available: hopf, jacquet-grading, "
                            "pole-characterization, ep-consistency, howe-crosscheck, "
                            "upper-rank-ext, lowrank-g3");
  }
  std::sort(ctx.report.failures.begin(), ctx.report.failures.end(),
            [](const SuiteFailure& a, const SuiteFailure& b) { return a.input < b.input; });
  return ctx.report;
}

}  // namespace segcalc
