#pragma once

#include <string>
#include <utility>
#include <vector>

#include "segcalc/groth.hpp"

namespace segcalc {

// Graded piece of the rank filtration of the (n, m) Weil representation:
// an induced character with the exact exponent table
//   G_k: (k-n-m)/2   G_{n-k}: (k-m)/2   H_k: (n+m-k)/2   H_{m-k}: (n-k)/2
// tensored against an inner Weil block on the (G_k, H_k) pair.
struct RankPiece {
  int n = 0, m = 0, k = 0;
  HalfInt xi_g_k;   // on G_k
  HalfInt xi_g_nk;  // on G_{n-k}
  HalfInt xi_h_k;   // on H_k
  HalfInt xi_h_mk;  // on H_{m-k}

  std::string str() const;
};

std::vector<RankPiece> rank_pieces(int n, int m);  // k = 0 .. min(n,m)

// Graded piece of the filtration of the depth-k Jacquet module, indexed by
// 0 <= i <= k, with exponent table
//   G_{k-i}: (m-n+k-i)/2   G_i: (m-n+2k-i)/2   G_{n-k}: (k-i)/2
//   H_i: (n-m-2k+i)/2      H_{m-i}: (i-k)/2
// and an inner Weil block of parameters (n-k, m-i).  When i > m the required
// parabolic of H_m does not exist and the piece is void (reads as zero).
struct KudlaPiece {
  int n = 0, m = 0, k = 0, i = 0;
  bool voided = false;
  HalfInt mu_g_ki;  // on G_{k-i}
  HalfInt mu_g_i;   // on G_i
  HalfInt mu_g_nk;  // on G_{n-k}
  HalfInt mu_h_i;   // on H_i
  HalfInt mu_h_mi;  // on H_{m-i}
  std::pair<int, int> inner_weil{0, 0};  // (n-k, m-i)

  std::string str() const;
};

std::vector<KudlaPiece> kudla_pieces(int n, int m, int k);  // i = 0 .. k

// Does the depth-k reduction across the Kudla pieces collapse for St(delta)
// twists?  True unless delta sits on the trivial line with bottom exponent
// exactly (1 + m - n)/2.
bool kudla_vanishing(const Segment& delta, int n, int m);

// Ext table of the k-th rank-filtration piece against the character
// |det_n|^x, in the decidable range:
//   k < min(n,m):        nonzero iff x = k - m/2; degrees 0 and 1 both carry
//                        the class |det_{m-k}|^{(k-n)/2} x |det_k|^{(n-m+k)/2}
//   k = min, n <= m:     degree 0 carries 1_{m-n} x |det_n|^x for every x
//   k = min = m < n:     nonzero iff x = m/2; degrees 0 and 1 carry |det_m|^{n/2}
std::map<int, GrothElt> ext_rank_piece_character(int n, int m, int k, HalfInt x);

}  // namespace segcalc
