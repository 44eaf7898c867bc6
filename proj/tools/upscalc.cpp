#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "upscalc/bounds.hpp"
#include "upscalc/braid.hpp"
#include "upscalc/errors.hpp"
#include "upscalc/homogenize.hpp"
#include "upscalc/seifert.hpp"
#include "upscalc/selfcheck.hpp"
#include "upscalc/semigroup.hpp"
#include "upscalc/serialize.hpp"
#include "upscalc/signature.hpp"
#include "upscalc/upsilon.hpp"

namespace {

using namespace upscalc;

// Exit codes: 0 ok, 1 internal, 2 parse, 3 domain, 4 validation,
// 5 undecidable signature.
enum ExitCode { kOk = 0, kInternal = 1, kParse = 2, kDomain = 3, kValidation = 4,
                kUndecidable = 5 };

struct OutputOptions {
  std::string format = "human";  // human | json | csv | svg
  int decimal = -1;              // -1 = exact rational strings
};

std::string show(const Rational& r, const OutputOptions& out) {
  if (out.decimal < 0) return to_string(r);
  mpf_class f(r, 64 + static_cast<unsigned>(out.decimal) * 4);
  char buf[160];
  gmp_snprintf(buf, sizeof(buf), "%.*Ff", out.decimal, f.get_mpf_t());
  return buf;
}

void emit_plfunction(const PLFunction& f, const OutputOptions& out) {
  if (out.format == "json") {
    std::cout << plfunction_to_json(f) << "\n";
  } else if (out.format == "csv") {
    std::cout << plfunction_to_csv(f);
  } else if (out.format == "svg") {
    std::cout << plfunction_to_svg(f);
  } else {
    for (const auto& bp : f.breakpoints())
      std::cout << "(" << show(bp.t, out) << ", " << show(bp.v, out) << ")\n";
  }
}

void add_format_flags(CLI::App* cmd, OutputOptions& out) {
  const char* env = std::getenv("UPSCALC_FORMAT");
  if (env && (std::string(env) == "json" || std::string(env) == "csv" ||
              std::string(env) == "svg" || std::string(env) == "human"))
    out.format = env;
  cmd->add_flag_callback("--json", [&out] { out.format = "json"; },
                         "emit machine-readable JSON");
  cmd->add_flag_callback("--csv", [&out] { out.format = "csv"; }, "emit CSV");
  cmd->add_flag_callback("--svg", [&out] { out.format = "svg"; }, "emit an SVG plot");
  cmd->add_option("--decimal", out.decimal,
                  "round values to this many decimal digits for display");
}

TwistCertificate knot_or_cert(const std::string& text) {
  std::string trimmed = text;
  size_t a = trimmed.find_first_not_of(" \t");
  if (a != std::string::npos && trimmed.compare(a, 5, "cert(") == 0)
    return TwistCertificate::parse(trimmed);
  KnotExpr e = KnotExpr::parse(trimmed);
  if (e.summands.size() == 1 && e.summands[0].second == 1 && !e.summands[0].first.mirrored)
    return TwistCertificate::from_torus_knot(e.summands[0].first);
  if (e.summands.empty()) return TwistCertificate::from_torus_knot(TorusKnotSpec{});
  throw ParseError("bounds take a single unmirrored torus knot or a cert(...) literal");
}

int run(int argc, char** argv) {
  CLI::App app{"exact Upsilon / signature / cobordism-bound calculator for torus knots "
               "and braid closures"};
  app.require_subcommand(1);

  // ---- upsilon ----
  auto* ups = app.add_subcommand("upsilon", "Upsilon invariant of torus knots and sums");
  ups->require_subcommand(1);
  OutputOptions ups_out;

  auto* ups_torus = ups->add_subcommand("torus", "Upsilon of the torus knot T(p,q)");
  long up = 0, uq = 0;
  std::string ueval, uroute = "euclid";
  ups_torus->add_option("p", up, "first parameter")->required();
  ups_torus->add_option("q", uq, "second parameter")->required();
  ups_torus->add_option("--eval", ueval, "evaluate at rational t instead of printing breakpoints");
  ups_torus->add_option("--route", uroute, "euclid | semigroup")
      ->check(CLI::IsMember({"euclid", "semigroup"}));
  add_format_flags(ups_torus, ups_out);
  ups_torus->callback([&] {
    PLFunction f = uroute == "semigroup" ? ups_torus_semigroup(up, uq)
                                         : ups_torus_euclid(up, uq);
    if (!ueval.empty())
      std::cout << show(f.eval(parse_rational(ueval)), ups_out) << "\n";
    else
      emit_plfunction(f, ups_out);
  });

  auto* ups_expr_cmd = ups->add_subcommand("expr", "Upsilon of a connected-sum expression");
  std::string uexpr, ueval2;
  ups_expr_cmd->add_option("expr", uexpr, "e.g. \"T(8,11) # -T(8,9) # -2*T(3,4)\"")->required();
  ups_expr_cmd->add_option("--eval", ueval2, "evaluate at rational t");
  add_format_flags(ups_expr_cmd, ups_out);
  ups_expr_cmd->callback([&] {
    PLFunction f = ups_expr(KnotExpr::parse(uexpr));
    if (!ueval2.empty())
      std::cout << show(f.eval(parse_rational(ueval2)), ups_out) << "\n";
    else
      emit_plfunction(f, ups_out);
  });

  // ---- semigroup ----
  auto* sg = app.add_subcommand("semigroup", "counting function of the semigroup <a,b>");
  long sa = 0, sb = 0;
  sg->add_option("a", sa, "first generator")->required();
  sg->add_option("b", sb, "second generator")->required();
  sg->callback([&] {
    CountingFunction h = torus_counting(sa, sb);
    std::cout << "g," << h.genus() << "\n";
    std::cout << "gaps";
    for (long gp : h.gaps()) std::cout << "," << gp;
    std::cout << "\n";
    std::cout << "i,H\n";
    for (size_t i = 0; i < h.values().size(); ++i)
      std::cout << i << "," << h.values()[i] << "\n";
  });

  // ---- signature ----
  auto* sig = app.add_subcommand("signature", "Levine-Tristram signatures of braid closures");
  std::string sbraid, somega;
  int sstrands = 0;
  long ssweep = 0;
  sig->add_option("--braid", sbraid, "braid word, e.g. \"1 1 1\"")->required();
  sig->add_option("--strands", sstrands, "strand count (default max|letter|+1)");
  sig->add_option("--omega", somega, "rational s in (0,1]; omega = exp(i pi s)");
  sig->add_option("--sweep", ssweep, "evaluate at s = j/k for j = 1..k-1");
  sig->callback([&] {
    BraidWord b = BraidWord::parse(sbraid, sstrands);
    SeifertMatrix v = seifert_matrix(b);
    if (ssweep > 0) {
      std::cout << "s,sigma\n";
      for (const auto& pt : signature_sweep(v, ssweep))
        std::cout << to_string(pt.s) << "," << (pt.jump ? "JUMP" : std::to_string(pt.sigma))
                  << "\n";
      return;
    }
    if (somega.empty()) throw ParseError("signature needs --omega or --sweep");
    std::cout << lt_signature(v, OmegaPoint(parse_rational(somega))) << "\n";
  });

  // ---- bounds ----
  auto* bd = app.add_subcommand("bounds", "cobordism-distance and braid-index bounds");
  bd->require_subcommand(1);
  auto* cob = bd->add_subcommand("cobordism", "lower bounds for d(K,L)");
  std::string bk, bl;
  bool bjson = false;
  cob->add_option("--K", bk, "torus knot expression or cert(...) literal")->required();
  cob->add_option("--L", bl, "torus knot expression or cert(...) literal")->required();
  cob->add_flag("--json", bjson, "emit machine-readable JSON");
  cob->callback([&] {
    BoundReport r = cobordism_report(knot_or_cert(bk), knot_or_cert(bl));
    if (bjson) {
      std::cout << "{\"triangle_lower\":\"" << to_string(r.triangle_lower) << "\"";
      if (r.triangle_upper)
        std::cout << ",\"triangle_upper\":\"" << to_string(*r.triangle_upper) << "\"";
      if (r.improved_lower)
        std::cout << ",\"improved_lower\":\"" << to_string(*r.improved_lower) << "\"";
      std::cout << ",\"best_lower\":\"" << to_string(r.best_lower) << "\"}" << "\n";
      return;
    }
    std::cout << "triangle_lower " << to_string(r.triangle_lower) << "\n";
    if (r.triangle_upper) std::cout << "triangle_upper " << to_string(*r.triangle_upper) << "\n";
    if (r.improved_lower)
      std::cout << "improved_lower " << to_string(*r.improved_lower) << "\n";
    else
      std::cout << "improved_lower inapplicable\n";
    std::cout << "best_lower " << to_string(r.best_lower) << "\n";
  });

  // ---- homogenize ----
  auto* hg = app.add_subcommand("homogenize", "homogenized invariants for resolved families");
  std::string hfamily, ht;
  long hn = 0, hm = 0;
  bool hconv = false;
  OutputOptions hg_out;
  hg->add_option("--family", hfamily, "torus | beta_n")
      ->required()
      ->check(CLI::IsMember({"torus", "beta_n"}));
  hg->add_option("--n", hn, "strand count")->required();
  hg->add_option("--m", hm, "torus braid exponent (family torus)");
  hg->add_option("--t", ht, "evaluate the profile at rational t");
  hg->add_flag("--check-convexity", hconv, "print whether the profile is convex");
  add_format_flags(hg, hg_out);
  hg->callback([&] {
    HomogenizedProfile prof = hfamily == "torus" ? hom_ups_torus_braid(hn, hm ? hm : hn)
                                                 : hom_ups_beta_n(hn);
    if (hconv) std::cout << "convex " << (prof.profile.is_convex() ? "true" : "false") << "\n";
    if (!ht.empty())
      std::cout << show(prof.profile.eval(parse_rational(ht)), hg_out) << "\n";
    else if (!hconv)
      emit_plfunction(prof.profile, hg_out);
  });

  // ---- table ----
  auto* tb = app.add_subcommand("table", "CSV grids of invariant values");
  tb->require_subcommand(1);
  auto* tbt = tb->add_subcommand("torus", "grid of Upsilon values over coprime (p,q)");
  long tpmax = 0, tqmax = 0;
  std::string tt = "1";
  tbt->add_option("--pmax", tpmax, "largest p")->required();
  tbt->add_option("--qmax", tqmax, "largest q")->required();
  tbt->add_option("--t", tt, "evaluation point (rational, default 1)");
  tbt->callback([&] {
    Rational t = parse_rational(tt);
    std::cout << "p\\q";
    for (long q = 2; q <= tqmax; ++q) std::cout << "," << q;
    std::cout << "\n";
    for (long p = 2; p <= tpmax; ++p) {
      std::cout << p;
      for (long q = 2; q <= tqmax; ++q) {
        std::cout << ",";
        if (q > p && std::gcd(p, q) == 1)
          std::cout << to_string(ups_torus_euclid(p, q).eval(t));
      }
      std::cout << "\n";
    }
  });

  // ---- selftest ----
  auto* st = app.add_subcommand("selftest", "run the built-in validation suite");
  st->callback([&] {
    bool all = true;
    for (const auto& r : run_selfchecks()) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      all &= r.pass;
    }
    if (!all) throw ValidationError("selftest found failures");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const JumpPointError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const UndecidableError& e) {
    std::cerr << "undecidable: " << e.what() << "\n";
    return kUndecidable;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
