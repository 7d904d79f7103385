#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segcalc/segment.hpp"

namespace segcalc {

// One factor of a parabolically induced product.  Point segments carry no
// St/Speh distinction, so comparisons treat their kind as St; the kind given
// at construction is kept only for printing.
struct Factor {
  FactorKind kind;
  Segment seg;

  FactorKind norm_kind() const { return seg.is_point() ? FactorKind::St : kind; }

  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
    if (auto c = a.seg <=> b.seg; c != 0) return c;
    return a.norm_kind() <=> b.norm_kind();
  }
  friend bool operator==(const Factor& a, const Factor& b) {
    return (a <=> b) == 0;
  }

  std::string str() const;
};

// Basis key of the Grothendieck group.  Three presentations:
//   Std   multiset of St/Speh factors, the class of the full induced product
//   IrrL  the irreducible quotient attached to a multisegment (top datum)
//   IrrZ  the irreducible sub attached to a multisegment (bottom datum)
// Keys are always canonical: factor lists sorted, and presentations that name
// the same irreducible are merged (see the factory functions).
class ReptnKey {
 public:
  enum class Basis { Std, IrrL, IrrZ };

  static ReptnKey unit() { return std_key({}); }
  static ReptnKey std_key(std::vector<Factor> factors);
  static ReptnKey single(Factor f) { return std_key({std::move(f)}); }
  static ReptnKey irr_l(std::vector<Segment> segments);
  static ReptnKey irr_z(std::vector<Segment> segments);

  Basis basis() const { return basis_; }
  const std::vector<Factor>& factors() const { return factors_; }      // Std only
  const std::vector<Segment>& segments() const { return segments_; }  // IrrL/IrrZ

  bool is_unit() const { return basis_ == Basis::Std && factors_.empty(); }
  bool is_irreducible() const { return basis_ != Basis::Std; }
  // A one-dimensional character: single Z-segment on a dim-1 line.
  bool is_character() const {
    return basis_ == Basis::IrrZ && segments_.size() == 1 && segments_[0].rho().is_character();
  }

  long long degree() const;

  // The factor list when the key is an exact product of St/Speh factors;
  // nullopt when the decomposition needs more than segment combinatorics.
  std::optional<std::vector<Factor>> to_std_factors() const;

  friend std::strong_ordering operator<=>(const ReptnKey& a, const ReptnKey& b);
  friend bool operator==(const ReptnKey& a, const ReptnKey& b) { return (a <=> b) == 0; }

  std::string str() const;

 private:
  ReptnKey(Basis basis, std::vector<Factor> factors, std::vector<Segment> segments)
      : basis_(basis), factors_(std::move(factors)), segments_(std::move(segments)) {}

  Basis basis_ = Basis::Std;
  std::vector<Factor> factors_;
  std::vector<Segment> segments_;
};

// Z-linear combination of keys.
class GrothElt {
 public:
  GrothElt() = default;
  static GrothElt zero() { return GrothElt(); }
  static GrothElt one() { return single(ReptnKey::unit()); }
  static GrothElt single(ReptnKey key, long long mult = 1);

  const std::map<ReptnKey, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void insert(const ReptnKey& key, long long mult);

  GrothElt& operator+=(const GrothElt& o);
  GrothElt& operator-=(const GrothElt& o);
  friend GrothElt operator+(GrothElt a, const GrothElt& b) { return a += b; }
  friend GrothElt operator-(GrothElt a, const GrothElt& b) { return a -= b; }
  GrothElt operator-() const;
  GrothElt scaled(long long c) const;

  friend bool operator==(const GrothElt&, const GrothElt&) = default;

  std::string str() const;

 private:
  std::map<ReptnKey, long long> terms_;  // no zero multiplicities
};

// Z-linear combination of ordered key pairs (image of the coproduct).
class TensorElt {
 public:
  TensorElt() = default;
  static TensorElt single(ReptnKey left, ReptnKey right, long long mult = 1);

  const std::map<std::pair<ReptnKey, ReptnKey>, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void insert(const ReptnKey& left, const ReptnKey& right, long long mult);

  TensorElt& operator+=(const TensorElt& o);
  friend TensorElt operator+(TensorElt a, const TensorElt& b) { return a += b; }

  friend bool operator==(const TensorElt&, const TensorElt&) = default;

  std::string str() const;

 private:
  std::map<std::pair<ReptnKey, ReptnKey>, long long> terms_;
};

using ExtTable = std::map<int, GrothElt>;

// Multiset union of factor lists; Irr keys are converted to factors first.
// Throws NotDecidableError when a key has no exact factor decomposition.
ReptnKey key_product(const ReptnKey& a, const ReptnKey& b);
GrothElt product(const GrothElt& a, const GrothElt& b);

// Componentwise product of tensors: (a (x) b)(c (x) d) = ac (x) bd.
TensorElt tensor_product(const TensorElt& a, const TensorElt& b);

// Comultiplication.  Multiplicative over factors; on a single factor it is
// the full Jacquet sum over depths.  Throws NotDecidableError on keys with no
// factor decomposition.
TensorElt coproduct(const ReptnKey& key);
TensorElt coproduct(const GrothElt& a);

// Left Jacquet restriction along the character |.|^c of the dim-1 line chi:
// keep coproduct terms whose left factor is exactly that character, return
// the sum of right factors.
GrothElt jac_x(const GrothElt& a, const CuspidalLabel& chi, HalfInt c);

// Is the full induced product of these factors irreducible?  Requires a
// uniform kind (points are flexible); true iff the segments are pairwise
// unlinked.
bool irreducible_test(const ReptnKey& std_key);

// Composition series of a two-factor product.
struct SsTwoFactor {
  bool irreducible = false;
  std::optional<ReptnKey> irr;       // set when irreducible
  std::optional<ReptnKey> sub;       // set when reducible: the socle
  std::optional<ReptnKey> quotient;  // set when reducible: the cosocle
};
SsTwoFactor ss_two_factor(const Factor& first, const Factor& second);

// Langlands quotient of a product of St factors: the IrrL key on the same
// multisegment.  Idempotent on IrrL keys.
ReptnKey langlands_quotient(const ReptnKey& key);

// Full semisimplification where the calculus decides it: two-factor products
// and pairwise-unlinked products of any length.  nullopt = not decidable.
std::optional<GrothElt> ss(const GrothElt& a);

// Ext groups between irreducibles in the decidable fragment:
//   equal        -> {0: 1, 1: 1} for same-kind single-factor keys
//   disjoint cuspidal supports -> {}
// Throws NotDecidableError otherwise.
std::map<int, long long> ext_irr(const ReptnKey& a, const ReptnKey& b);

// Segmentwise dual; an involution that agrees with the contragredient on
// irreducibles and is multiplicative on products.
ReptnKey mvw_dual(const ReptnKey& key);
GrothElt mvw_dual(const GrothElt& a);

// The character |det_n|^c of the line chi, as segment data: one Z-segment of
// length n centered at c, or equivalently n single-point L-segments.
struct CharData {
  std::vector<Segment> z;  // one segment
  std::vector<Segment> l;  // n points
};
CharData char_to_data(int n, HalfInt c, const CuspidalLabel& chi = CuspidalLabel::trivial());
ReptnKey char_key(int n, HalfInt c, const CuspidalLabel& chi = CuspidalLabel::trivial());

// Multiset of (line, exponent) points covered by the key's segments.
std::vector<std::pair<CuspidalLabel, HalfInt>> cuspidal_support(const ReptnKey& key);

}  // namespace segcalc
