#include "segcalc/exprio.hpp"

#include <cctype>
#include <cstdlib>

#include "segcalc/errors.hpp"

namespace segcalc {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RepExpr parse() {
    RepExpr e;
    skip_ws();
    parse_atom(e);
    skip_ws();
    while (!done()) {
      if (!eat_word("x")) fail("'x' or end of input");
      skip_ws();
      parse_atom(e);
      skip_ws();
    }
    return e;
  }

  HalfInt parse_halfint_only() {
    skip_ws();
    const HalfInt h = parse_halfint();
    skip_ws();
    if (!done()) fail("end of input");
    return h;
  }

  CuspidalLabel parse_label_only() {
    skip_ws();
    const CuspidalLabel l = parse_rho();
    skip_ws();
    if (!done()) fail("end of input");
    return l;
  }

 private:
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  // Keyword match with a word boundary, so "st" never eats the front of a name.
  bool eat_word(const std::string& w) {
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && word_char(s_[end])) return false;
    pos_ = end;
    return true;
  }

  long long parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (eat('-')) {
    }
    while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (s_[start] == '-' && pos_ == start + 1)) fail("an integer");
    return std::strtoll(s_.substr(start, pos_ - start).c_str(), nullptr, 10);
  }

  HalfInt parse_halfint() {
    const long long a = parse_int();
    if (eat('/')) {
      const long long d = parse_int();
      if (d != 2 && d != 1) fail("denominator 1 or 2");
      return d == 1 ? HalfInt(a) : HalfInt::from_twice(a);
    }
    return HalfInt(a);
  }

  std::string parse_name() {
    skip_ws();
    const std::size_t start = pos_;
    if (done() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("a name");
    while (!done() && word_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  CuspidalLabel parse_rho() {
    if (eat_word("one")) return CuspidalLabel::trivial();
    if (eat_word("unr")) {
      skip_ws();
      expect('(');
      const long long r = parse_int();
      skip_ws();
      expect(',');
      const long long j = parse_int();
      skip_ws();
      expect(')');
      return CuspidalLabel::unramified(static_cast<int>(r), static_cast<int>(j));
    }
    if (eat_word("ram")) {
      skip_ws();
      expect('(');
      const std::string name = parse_name();
      skip_ws();
      expect(')');
      return CuspidalLabel::ramified(name);
    }
    if (eat_word("cusp")) {
      skip_ws();
      expect('(');
      const long long d = parse_int();
      skip_ws();
      expect(',');
      const std::string name = parse_name();
      skip_ws();
      expect(')');
      return CuspidalLabel::cuspidal(static_cast<int>(d), name);
    }
    fail("one, unr, ram, or cusp");
  }

  Segment parse_bracket_segment() {
    skip_ws();
    expect('[');
    const HalfInt x = [&] { skip_ws(); return parse_halfint(); }();
    skip_ws();
    expect(',');
    const HalfInt y = [&] { skip_ws(); return parse_halfint(); }();
    skip_ws();
    expect(']');
    CuspidalLabel rho = CuspidalLabel::trivial();
    if (eat('@')) {
      skip_ws();
      rho = parse_rho();
    }
    try {
      return Segment(std::move(rho), x, y);
    } catch (const std::invalid_argument& e) {
      throw ParseError(pos_, std::string("a valid segment (") + e.what() + ")");
    }
  }

  void parse_atom(RepExpr& e) {
    if (eat_word("Speh")) {
      e.atoms.push_back(Factor{FactorKind::Speh, parse_bracket_segment()});
      return;
    }
    if (eat_word("St")) {
      e.atoms.push_back(Factor{FactorKind::St, parse_bracket_segment()});
      return;
    }
    if (eat_word("char") || eat_word("triv")) {
      const bool has_c = s_[pos_ - 1] == 'r';  // "char" ends in 'r'
      skip_ws();
      expect('(');
      const long long n = parse_int();
      HalfInt c(0);
      if (has_c) {
        skip_ws();
        expect(',');
        skip_ws();
        c = parse_halfint();
      }
      skip_ws();
      expect(')');
      if (n < 1) throw ParseError(pos_, "a rank >= 1");
      e.atoms.push_back(
          Factor{FactorKind::Speh, Segment(CuspidalLabel::trivial(), c + half(n - 1), c - half(n - 1))});
      return;
    }
    if (eat_word("st")) {
      skip_ws();
      expect('(');
      const long long n = parse_int();
      skip_ws();
      expect(')');
      if (n < 1) throw ParseError(pos_, "a rank >= 1");
      e.atoms.push_back(
          Factor{FactorKind::St, Segment(CuspidalLabel::trivial(), half(n - 1), -half(n - 1))});
      return;
    }
    if (eat_word("1")) return;  // empty product
    fail("St, Speh, char, triv, st, or 1");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RepExpr parse_rep(const std::string& text) { return Parser(text).parse(); }

HalfInt parse_halfint(const std::string& text) { return Parser(text).parse_halfint_only(); }

CuspidalLabel parse_label(const std::string& text) { return Parser(text).parse_label_only(); }

std::string render_text(const RepExpr& e) {
  if (e.atoms.empty()) return "1";
  std::string s;
  for (const Factor& f : e.atoms) {
    if (!s.empty()) s += " x ";
    s += f.str();
  }
  return s;
}

ReptnKey to_std_key(const RepExpr& e) { return ReptnKey::std_key(e.atoms); }

std::vector<Segment> to_l_data(const RepExpr& e) {
  std::vector<Segment> out;
  for (const Factor& f : e.atoms) {
    if (f.norm_kind() == FactorKind::St) {
      out.push_back(f.seg);
    } else {
      for (HalfInt p : f.seg.exponents()) out.emplace_back(f.seg.rho(), p, p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string text_of(const ExtTable& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [deg, val] : t) {
    if (!s.empty()) s += "; ";
    s += "deg " + std::to_string(deg) + ": " + val.str();
  }
  return s;
}

std::string text_of(const ThetaResult& r) {
  std::string s;
  s += "theta: " + r.theta.str() + "\n";
  s += "order_hint: " + to_string(r.order_hint) + "\n";
  s += "irreducible: " + to_string(r.irreducible) + "\n";
  s += "ext: " + text_of(r.ext) + "\n";
  s += "source: " + to_string(r.source) + "\n";
  if (r.not_covered) s += "not_covered: true\n";
  s += "ep: " + r.ep.str();
  return s;
}

nlohmann::json json_of(HalfInt h) { return {{"num", h.num()}, {"den", h.den()}}; }

nlohmann::json json_of(const CuspidalLabel& l) {
  switch (l.kind()) {
    case LabelKind::Trivial:
      return {{"kind", "one"}};
    case LabelKind::Unramified:
      return {{"kind", "unr"}, {"order", l.order()}, {"exp", l.exponent()}};
    case LabelKind::Ramified:
      return {{"kind", "ram"}, {"name", l.name()}, {"dual", l.dual_name()}};
    case LabelKind::Cuspidal:
      return {{"kind", "cusp"}, {"dim", l.dim()}, {"name", l.name()}, {"dual", l.dual_name()}};
  }
  return nullptr;
}

nlohmann::json json_of(const Segment& s) {
  return {{"rho", json_of(s.rho())}, {"x", json_of(s.x())}, {"y", json_of(s.y())}};
}

nlohmann::json json_of(const Factor& f) {
  return {{"kind", f.kind == FactorKind::St ? "St" : "Speh"}, {"seg", json_of(f.seg)}};
}

nlohmann::json json_of(const ReptnKey& k) {
  nlohmann::json j;
  switch (k.basis()) {
    case ReptnKey::Basis::Std: {
      j["basis"] = "Std";
      auto arr = nlohmann::json::array();
      for (const Factor& f : k.factors()) arr.push_back(json_of(f));
      j["factors"] = std::move(arr);
      break;
    }
    case ReptnKey::Basis::IrrL:
    case ReptnKey::Basis::IrrZ: {
      j["basis"] = k.basis() == ReptnKey::Basis::IrrL ? "IrrL" : "IrrZ";
      auto arr = nlohmann::json::array();
      for (const Segment& s : k.segments()) arr.push_back(json_of(s));
      j["segments"] = std::move(arr);
      break;
    }
  }
  return j;
}

nlohmann::json json_of(const GrothElt& g) {
  auto terms = nlohmann::json::array();
  for (const auto& [k, m] : g.terms()) terms.push_back({{"key", json_of(k)}, {"mult", m}});
  return {{"kind", "groth_elt"}, {"terms", std::move(terms)}};
}

nlohmann::json json_of(const TensorElt& t) {
  auto terms = nlohmann::json::array();
  for (const auto& [p, m] : t.terms())
    terms.push_back({{"left", json_of(p.first)}, {"right", json_of(p.second)}, {"mult", m}});
  return {{"kind", "tensor_elt"}, {"terms", std::move(terms)}};
}

nlohmann::json json_of(const ExtTable& t) {
  auto entries = nlohmann::json::array();
  for (const auto& [deg, val] : t) entries.push_back({{"degree", deg}, {"value", json_of(val)}});
  return {{"kind", "ext_table"}, {"entries", std::move(entries)}};
}

nlohmann::json json_of(const LFactoredFn& f) {
  auto factors = nlohmann::json::array();
  for (const auto& [k, m] : f.factors())
    factors.push_back({{"unit", {{"order", k.first.order}, {"exp", k.first.exponent}}},
                       {"a", json_of(k.second)},
                       {"mult", m}});
  return {{"kind", "l_function"}, {"factors", std::move(factors)}};
}

nlohmann::json json_of(const ThetaResult& r) {
  nlohmann::json j;
  j["kind"] = "theta_result";
  j["theta"] = json_of(r.theta);
  j["order_hint"] = to_string(r.order_hint);
  j["irreducible"] = to_string(r.irreducible);
  j["ext"] = json_of(r.ext);
  j["source"] = to_string(r.source);
  j["not_covered"] = r.not_covered;
  j["ep"] = json_of(r.ep);
  return j;
}

nlohmann::json json_of(const RankPiece& p) {
  return {{"kind", "rank_piece"},
          {"n", p.n},
          {"m", p.m},
          {"k", p.k},
          {"xi",
           {{"g_k", json_of(p.xi_g_k)},
            {"g_nk", json_of(p.xi_g_nk)},
            {"h_k", json_of(p.xi_h_k)},
            {"h_mk", json_of(p.xi_h_mk)}}}};
}

nlohmann::json json_of(const KudlaPiece& p) {
  nlohmann::json j{{"kind", "kudla_piece"}, {"n", p.n}, {"m", p.m}, {"k", p.k}, {"i", p.i},
                   {"void", p.voided}};
  if (!p.voided) {
    j["mu"] = {{"g_ki", json_of(p.mu_g_ki)},
               {"g_i", json_of(p.mu_g_i)},
               {"g_nk", json_of(p.mu_g_nk)},
               {"h_i", json_of(p.mu_h_i)},
               {"h_mi", json_of(p.mu_h_mi)}};
    j["inner_weil"] = {p.inner_weil.first, p.inner_weil.second};
  }
  return j;
}

}  // namespace segcalc
