#include "segcalc/filtr.hpp"

#include <algorithm>
#include <stdexcept>

namespace segcalc {

std::string RankPiece::str() const {
  return "k=" + std::to_string(k) + ": xi = {G_" + std::to_string(k) + ": " + xi_g_k.str() +
         ", G_" + std::to_string(n - k) + ": " + xi_g_nk.str() + ", H_" + std::to_string(k) +
         ": " + xi_h_k.str() + ", H_" + std::to_string(m - k) + ": " + xi_h_mk.str() +
         "}, inner Weil (" + std::to_string(k) + "," + std::to_string(k) + ")";
}

std::vector<RankPiece> rank_pieces(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("rank_pieces needs n, m >= 0");
  std::vector<RankPiece> out;
  for (int k = 0; k <= std::min(n, m); ++k) {
    RankPiece p;
    p.n = n;
    p.m = m;
    p.k = k;
    p.xi_g_k = half(k - n - m);
    p.xi_g_nk = half(k - m);
    p.xi_h_k = half(n + m - k);
    p.xi_h_mk = half(n - k);
    out.push_back(p);
  }
  return out;
}

std::string KudlaPiece::str() const {
  std::string s = "k=" + std::to_string(k) + ", i=" + std::to_string(i) + ": ";
  if (voided) return s + "void";
  return s + "mu = {G_" + std::to_string(k - i) + ": " + mu_g_ki.str() + ", G_" +
         std::to_string(i) + ": " + mu_g_i.str() + ", G_" + std::to_string(n - k) + ": " +
         mu_g_nk.str() + ", H_" + std::to_string(i) + ": " + mu_h_i.str() + ", H_" +
         std::to_string(m - i) + ": " + mu_h_mi.str() + "}, inner Weil (" +
         std::to_string(inner_weil.first) + "," + std::to_string(inner_weil.second) + ")";
}

std::vector<KudlaPiece> kudla_pieces(int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0 || k > n)
    throw std::invalid_argument("kudla_pieces needs 0 <= k <= n");
  std::vector<KudlaPiece> out;
  for (int i = 0; i <= k; ++i) {
    KudlaPiece p;
    p.n = n;
    p.m = m;
    p.k = k;
    p.i = i;
    p.voided = i > m;
    if (!p.voided) {
      p.mu_g_ki = half(m - n + k - i);
      p.mu_g_i = half(m - n + 2 * k - i);
      p.mu_g_nk = half(k - i);
      p.mu_h_i = half(n - m - 2 * k + i);
      p.mu_h_mi = half(i - k);
      p.inner_weil = {n - k, m - i};
    }
    out.push_back(p);
  }
  return out;
}

bool kudla_vanishing(const Segment& delta, int n, int m) {
  return delta.rho().kind() != LabelKind::Trivial || delta.y() != half(1 + m - n);
}

std::map<int, GrothElt> ext_rank_piece_character(int n, int m, int k, HalfInt x) {
  if (k < 0 || k > std::min(n, m)) return {};
  if (k < std::min(n, m)) {
    if (x != half(2 * k - m)) return {};
    GrothElt c = GrothElt::one();
    if (m - k > 0) c = product(c, GrothElt::single(char_key(m - k, half(k - n))));
    if (k > 0) c = product(c, GrothElt::single(char_key(k, half(n - m + k))));
    return {{0, c}, {1, c}};
  }
  if (n <= m) {
    GrothElt c = GrothElt::single(char_key(n, x));
    if (m - n > 0) c = product(c, GrothElt::single(char_key(m - n, HalfInt(0))));
    return {{0, c}};
  }
  // k = min(n, m) = m with n > m
  if (x != half(m)) return {};
  const GrothElt c = GrothElt::single(char_key(m, half(n)));
  return {{0, c}, {1, c}};
}

}  // namespace segcalc
