#pragma once

#include <string>
#include <vector>

#include "segcalc/groth.hpp"
#include "segcalc/lfun.hpp"

namespace segcalc {

// The full lift is a class; the two module-level answers 1_{m-n} x pi^vee
// and pi^vee x 1_{m-n} coincide in the Grothendieck group, so the preferred
// order survives only as a hint.
enum class OrderHint { TrivialBlockLeft, TrivialBlockRight, Symmetric };

// Which analysis produced the answer: a pole-free L-function at s0, the
// two-step degenerate principal series, the upper rank order n > m, or the
// class-only stable-range fallback.
enum class ThetaSource { PoleFree, DegenerateSeries, UpperRank, StableRange };

enum class Tristate { False, True, Unknown };

struct ThetaResult {
  GrothElt theta;                                    // class of the full lift
  OrderHint order_hint = OrderHint::Symmetric;
  Tristate irreducible = Tristate::Unknown;
  ExtTable ext;                                      // degree -> class, no zero entries
  ThetaSource source = ThetaSource::PoleFree;
  bool not_covered = false;  // set when the engine refuses to guess
  GrothElt ep;               // Euler-Poincare class (zero when n > m)
};

// L-data of the cosocle of the full (n, m) lift of pi (given by L-data).
std::vector<Segment> small_theta(int n, int m, const std::vector<Segment>& pi_l_data);

// Full lift of pi with Ext table, decided from pole behaviour at the first
// reducibility point s0 = (1+m-n)/2:
//   some L holomorphic at s0 -> trivial-block product of the dual, with the
//     order hint recording which side; Ext concentrated in degree 0
//   both singular, pi a character -> delegated to ext_weil_character
//   both singular otherwise -> not_covered; only the EP class is claimed,
//     plus the semisimplified class when m >= 2n-1
ThetaResult big_theta(int n, int m, const std::vector<Segment>& pi_l_data);

// Ext table of the Weil representation against the character |det_n|^x, for
// both rank orders.
ThetaResult ext_weil_character(int n, int m, HalfInt x);

// Euler-Poincare class: pi x 1_{m-n} when n <= m, zero otherwise.
GrothElt ep_formula(int n, int m, const ReptnKey& pi);

// Projectivity threshold of the Weil representation and the bound on its
// projective dimension below it.
bool is_projective(int n, int m);
long long proj_dim_bound(int n, int m);  // RankOrder if n > m

// All degree-n L-multisegments on the trivial line (exponents within
// [-bound, bound], steps of 1/2) plus optional points on extra lines, whose
// L-function and dual L-function both have a pole at s0 = 1/2.
std::vector<std::vector<Segment>> enumerate_both_pole(
    int n, HalfInt bound, const std::vector<CuspidalLabel>& extra_labels);

// All segments satisfy x + y = 0.
bool is_tempered(const std::vector<Segment>& l_data);

std::string to_string(OrderHint h);
std::string to_string(ThetaSource s);
std::string to_string(Tristate t);

}  // namespace segcalc
