#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace segcalc {

enum class LabelKind { Trivial, Unramified, Ramified, Cuspidal };

// Label for a cuspidal line.  Exponent twists along the line are carried by
// segments, never by the label, so every label names the line itself:
//   Trivial        the unramified principal line of GL(1)
//   Unramified     a finite-order unramified character, (order r, exponent j)
//   Ramified       a ramified character, identified by name
//   Cuspidal       a supercuspidal of GL(d), d >= 2, identified by name
// Ramified and Cuspidal labels store the name of their dual partner; duality
// swaps the two names, so it is an involution by construction.
class CuspidalLabel {
 public:
  static CuspidalLabel trivial() { return CuspidalLabel(LabelKind::Trivial, 1, 0, 0, "", ""); }

  static CuspidalLabel unramified(int order, int exponent) {
    if (order < 2) throw std::invalid_argument("unramified label needs order >= 2");
    int j = exponent % order;
    if (j < 0) j += order;
    if (j == 0 || std::gcd(j, order) != 1)
      throw std::invalid_argument("unramified label needs exponent prime to the order");
    return CuspidalLabel(LabelKind::Unramified, 1, order, j, "", "");
  }

  static CuspidalLabel ramified(std::string name, std::string dual_name = "") {
    if (name.empty()) throw std::invalid_argument("ramified label needs a name");
    if (dual_name.empty()) dual_name = name;
    return CuspidalLabel(LabelKind::Ramified, 1, 0, 0, std::move(name), std::move(dual_name));
  }

  static CuspidalLabel cuspidal(int dim, std::string name, std::string dual_name = "") {
    if (dim < 2) throw std::invalid_argument("cuspidal label needs dim >= 2");
    if (name.empty()) throw std::invalid_argument("cuspidal label needs a name");
    if (dual_name.empty()) dual_name = name;
    return CuspidalLabel(LabelKind::Cuspidal, dim, 0, 0, std::move(name), std::move(dual_name));
  }

  LabelKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int order() const { return order_; }
  int exponent() const { return exponent_; }
  const std::string& name() const { return name_; }
  const std::string& dual_name() const { return dual_name_; }

  bool is_character() const { return dim_ == 1; }

  // Only the two unramified-character lines contribute L-factors.
  bool has_l_factor() const { return kind_ == LabelKind::Trivial || kind_ == LabelKind::Unramified; }

  CuspidalLabel dual() const {
    switch (kind_) {
      case LabelKind::Trivial:
        return *this;
      case LabelKind::Unramified:
        return unramified(order_, order_ - exponent_);
      case LabelKind::Ramified:
        return CuspidalLabel(kind_, dim_, 0, 0, dual_name_, name_);
      case LabelKind::Cuspidal:
        return CuspidalLabel(kind_, dim_, 0, 0, dual_name_, name_);
    }
    throw std::logic_error("bad label kind");
  }

  friend auto operator<=>(const CuspidalLabel&, const CuspidalLabel&) = default;

  std::string str() const {
    switch (kind_) {
      case LabelKind::Trivial:
        return "one";
      case LabelKind::Unramified:
        return "unr(" + std::to_string(order_) + "," + std::to_string(exponent_) + ")";
      case LabelKind::Ramified:
        return "ram(" + name_ + ")";
      case LabelKind::Cuspidal:
        return "cusp(" + std::to_string(dim_) + "," + name_ + ")";
    }
    throw std::logic_error("bad label kind");
  }

 private:
  CuspidalLabel(LabelKind kind, int dim, int order, int exponent, std::string name, std::string dual_name)
      : kind_(kind), dim_(dim), order_(order), exponent_(exponent),
        name_(std::move(name)), dual_name_(std::move(dual_name)) {}

  LabelKind kind_ = LabelKind::Trivial;
  int dim_ = 1;
  int order_ = 0;     // Unramified only
  int exponent_ = 0;  // Unramified only, normalized to [1, order-1]
  std::string name_;
  std::string dual_name_;
};

}  // namespace segcalc
