// Command-line front end for the segment calculus engine.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "segcalc/errors.hpp"
#include "segcalc/exprio.hpp"
#include "segcalc/verify.hpp"

namespace {

using namespace segcalc;

bool color_enabled() {
  const char* v = std::getenv("SEGCALC_COLOR");
  const std::string mode = v ? v : "auto";
  if (mode == "always") return true;
  if (mode == "never") return false;
  return isatty(STDOUT_FILENO) != 0;
}

// Color only the leading PASS/FAIL verdict of a suite report.
std::string colorize_verdict(const std::string& text) {
  if (!color_enabled()) return text;
  if (text.rfind("PASS", 0) == 0) return "\x1b[32mPASS\x1b[0m" + text.substr(4);
  if (text.rfind("FAIL", 0) == 0) return "\x1b[31mFAIL\x1b[0m" + text.substr(4);
  return text;
}

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

GrothElt class_of(const std::string& rep) {
  return GrothElt::single(to_std_key(parse_rep(rep)));
}

std::string l_data_text(const std::vector<Segment>& data) {
  std::string s = "{";
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i) s += ", ";
    s += data[i].str();
  }
  return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"segment calculus for theta lifts over a non-archimedean field"};
  app.require_subcommand(1);
  int exit_code = 0;
  bool json = false;

  // product <rep>...
  std::vector<std::string> product_reps;
  auto* cmd_product = app.add_subcommand("product", "multiply classes in the Grothendieck ring");
  cmd_product->add_option("rep", product_reps, "expressions to multiply")->required();
  cmd_product->add_flag("--json", json, "emit JSON");
  cmd_product->callback([&] {
    GrothElt g = GrothElt::one();
    for (const auto& r : product_reps) g = product(g, class_of(r));
    if (json) emit_json(json_of(g));
    else std::cout << g.str() << "\n";
  });

  // ss <rep>
  std::string ss_rep;
  auto* cmd_ss = app.add_subcommand("ss", "semisimplify a standard-product class");
  cmd_ss->add_option("rep", ss_rep, "expression")->required();
  cmd_ss->add_flag("--json", json, "emit JSON");
  cmd_ss->callback([&] {
    const auto s = ss(class_of(ss_rep));
    if (!s) {
      if (json) emit_json({{"kind", "not_decidable"}});
      else std::cout << "NotDecidable" << "\n";
      exit_code = 1;
      return;
    }
    if (json) emit_json(json_of(*s));
    else std::cout << s->str() << "\n";
  });

  // jacquet <rep> [--depth k]
  std::string jac_rep;
  long long jac_depth = 0;
  auto* cmd_jacquet = app.add_subcommand("jacquet", "full Jacquet coproduct");
  cmd_jacquet->add_option("rep", jac_rep, "expression")->required();
  auto* opt_depth = cmd_jacquet->add_option("--depth", jac_depth, "keep left factors of this degree");
  cmd_jacquet->add_flag("--json", json, "emit JSON");
  cmd_jacquet->callback([&] {
    TensorElt t = coproduct(class_of(jac_rep));
    if (opt_depth->count() > 0) {
      TensorElt filtered;
      for (const auto& [pair, mult] : t.terms())
        if (pair.first.degree() == jac_depth) filtered.insert(pair.first, pair.second, mult);
      t = std::move(filtered);
    }
    if (json) emit_json(json_of(t));
    else std::cout << t.str() << "\n";
  });

  // lfun <rep> [--at s] [--n N --m M]
  std::string lf_rep, lf_at;
  int lf_n = 0, lf_m = 0;
  auto* cmd_lfun = app.add_subcommand("lfun", "factored standard L-function");
  cmd_lfun->add_option("rep", lf_rep, "expression")->required();
  auto* opt_at = cmd_lfun->add_option("--at", lf_at, "report the pole order at this point");
  auto* opt_lf_n = cmd_lfun->add_option("--n", lf_n, "lift source rank");
  auto* opt_lf_m = cmd_lfun->add_option("--m", lf_m, "lift target rank");
  opt_lf_n->needs(opt_lf_m);
  opt_lf_m->needs(opt_lf_n);
  cmd_lfun->add_flag("--json", json, "emit JSON");
  cmd_lfun->callback([&] {
    const auto data = to_l_data(parse_rep(lf_rep));
    const LFactoredFn l = gj_lfunction(data);
    const LFactoredFn ld = lfun_dual(data);
    nlohmann::json j{{"kind", "lfun_report"}, {"l", json_of(l)}, {"l_dual", json_of(ld)}};
    std::string text = "L: " + l.str() + "\nL_dual: " + ld.str();
    if (opt_at->count() > 0) {
      const HalfInt s0 = parse_halfint(lf_at);
      const long long ord = l.pole_order_at(s0);
      text += "\npole order at " + s0.str() + ": " + std::to_string(ord);
      j["at"] = {{"s", json_of(s0)}, {"pole_order", ord}};
    }
    if (opt_lf_n->count() > 0) {
      const BothPole bp = both_pole_at(lf_n, lf_m, data);
      text += "\ns0: " + bp.s0.str() + "  pole_pi: " + (bp.pole_pi ? "true" : "false") +
              "  pole_dual: " + (bp.pole_dual ? "true" : "false");
      j["both_pole"] = {{"s0", json_of(bp.s0)},
                        {"pole_pi", bp.pole_pi},
                        {"pole_dual", bp.pole_dual}};
    }
    if (json) emit_json(j);
    else std::cout << text << "\n";
  });

  // theta --n N --m M --rep R
  std::string th_rep;
  int th_n = 0, th_m = 0;
  auto* cmd_theta = app.add_subcommand("theta", "big theta lift of a class");
  cmd_theta->add_option("--n", th_n, "source rank")->required();
  cmd_theta->add_option("--m", th_m, "target rank")->required();
  cmd_theta->add_option("--rep", th_rep, "expression")->required();
  cmd_theta->add_flag("--json", json, "emit JSON");
  cmd_theta->callback([&] {
    const ThetaResult r = big_theta(th_n, th_m, to_l_data(parse_rep(th_rep)));
    if (json) emit_json(json_of(r));
    else std::cout << text_of(r) << "\n";
  });

  // ext --n N --m M --char c
  std::string ext_char;
  int ext_n = 0, ext_m = 0;
  auto* cmd_ext = app.add_subcommand("ext", "Ext table against a character of det");
  cmd_ext->add_option("--n", ext_n, "source rank")->required();
  cmd_ext->add_option("--m", ext_m, "target rank")->required();
  cmd_ext->add_option("--char", ext_char, "exponent of |det_n|")->required();
  cmd_ext->add_flag("--json", json, "emit JSON");
  cmd_ext->callback([&] {
    const ThetaResult r = ext_weil_character(ext_n, ext_m, parse_halfint(ext_char));
    if (json) emit_json(json_of(r.ext));
    else std::cout << text_of(r.ext) << "\n";
  });

  // ext-grid --n-max A --m-max B
  int grid_n = 0, grid_m = 0;
  auto* cmd_grid = app.add_subcommand("ext-grid", "Ext tables over a rank grid");
  cmd_grid->add_option("--n-max", grid_n, "largest source rank")->required();
  cmd_grid->add_option("--m-max", grid_m, "largest target rank")->required();
  cmd_grid->add_flag("--json", json, "emit JSON");
  cmd_grid->callback([&] {
    nlohmann::json entries = nlohmann::json::array();
    for (int n = 1; n <= grid_n; ++n)
      for (int m = 1; m <= grid_m; ++m)
        for (int k = 0; k <= m; ++k) {
          const HalfInt x = HalfInt::from_twice(2 * k - m);
          const ThetaResult r = ext_weil_character(n, m, x);
          if (json) {
            entries.push_back({{"n", n}, {"m", m}, {"x", json_of(x)}, {"ext", json_of(r.ext)}});
          } else {
            std::cout << "n=" << n << " m=" << m << " x=" << x.str() << ": " << text_of(r.ext)
                      << "\n";
          }
        }
    if (json) emit_json({{"kind", "ext_grid"}, {"entries", entries}});
  });

  // ep --n N --m M --rep R
  std::string ep_rep;
  int ep_n = 0, ep_m = 0;
  auto* cmd_ep = app.add_subcommand("ep", "Euler-Poincare pairing with the Weil class");
  cmd_ep->add_option("--n", ep_n, "source rank")->required();
  cmd_ep->add_option("--m", ep_m, "target rank")->required();
  cmd_ep->add_option("--rep", ep_rep, "expression")->required();
  cmd_ep->add_flag("--json", json, "emit JSON");
  cmd_ep->callback([&] {
    const GrothElt g = ep_formula(ep_n, ep_m, to_std_key(parse_rep(ep_rep)));
    if (json) emit_json(json_of(g));
    else std::cout << g.str() << "\n";
  });

  // filtration --n N --m M [--k K]
  int fil_n = 0, fil_m = 0, fil_k = 0;
  auto* cmd_fil = app.add_subcommand("filtration", "rank filtration pieces, or one depth's pieces");
  cmd_fil->add_option("--n", fil_n, "source rank")->required();
  cmd_fil->add_option("--m", fil_m, "target rank")->required();
  auto* opt_k = cmd_fil->add_option("--k", fil_k, "expand the depth-k Jacquet filtration");
  cmd_fil->add_flag("--json", json, "emit JSON");
  cmd_fil->callback([&] {
    if (opt_k->count() > 0) {
      const auto pieces = kudla_pieces(fil_n, fil_m, fil_k);
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : pieces) arr.push_back(json_of(p));
        emit_json({{"kind", "kudla_pieces"}, {"pieces", arr}});
      } else {
        for (const auto& p : pieces) std::cout << p.str() << "\n";
      }
      return;
    }
    const auto pieces = rank_pieces(fil_n, fil_m);
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& p : pieces) arr.push_back(json_of(p));
      emit_json({{"kind", "rank_pieces"}, {"pieces", arr}});
    } else {
      for (const auto& p : pieces) std::cout << p.str() << "\n";
    }
  });

  // enumerate --n N --bound B [--label L]...
  std::string en_bound;
  std::vector<std::string> en_labels;
  int en_n = 0;
  auto* cmd_enum = app.add_subcommand("enumerate", "search multisegments with both poles at s0");
  cmd_enum->add_option("--n", en_n, "total degree")->required();
  cmd_enum->add_option("--bound", en_bound, "exponent bound on the trivial line")->required();
  cmd_enum->add_option("--label", en_labels, "extra cuspidal line (repeatable)");
  cmd_enum->add_flag("--json", json, "emit JSON");
  cmd_enum->callback([&] {
    std::vector<CuspidalLabel> labels;
    for (const auto& l : en_labels) labels.push_back(parse_label(l));
    const auto hits = enumerate_both_pole(en_n, parse_halfint(en_bound), labels);
    if (json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& h : hits) {
        nlohmann::json segs = nlohmann::json::array();
        for (const auto& s : h) segs.push_back(json_of(s));
        arr.push_back(segs);
      }
      emit_json({{"kind", "enumeration"}, {"total", hits.size()}, {"hits", arr}});
      return;
    }
    for (const auto& h : hits) std::cout << l_data_text(h) << "\n";
    std::cout << "total: " << hits.size() << "\n";
  });

  // verify <suite> [--seed S] [--samples K]
  std::string vf_suite;
  SuiteParams vf_params;
  auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
  cmd_verify->add_option("suite", vf_suite, "suite name")->required();
  cmd_verify->add_option("--seed", vf_params.seed, "random seed");
  cmd_verify->add_option("--samples", vf_params.samples, "randomized sample count");
  cmd_verify->add_flag("--json", json, "emit JSON");
  cmd_verify->callback([&] {
    const SuiteReport rep = run_suite(vf_suite, vf_params);
    if (json) emit_json(rep.json());
    else std::cout << colorize_verdict(rep.text());
    if (!rep.ok()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const segcalc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
