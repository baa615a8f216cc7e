// Command-line front end: Riley polynomials, A-polynomial tuples, Newton
// polygons, cone-manifold volumes and the packaged verification suite for
// twisted Whitehead links.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "twl/twl.hpp"

namespace {

using nlohmann::json;
using namespace twl;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

json polygon_json(const NewtonPolygon& np) {
  json jv = json::array();
  for (const auto& [i, j] : np.vertices) jv.push_back({i, j});
  json js = json::array();
  for (const auto& s : np.slopes) js.push_back(s.to_string());
  return {{"vertices", jv}, {"slopes", js}};
}

int cmd_riley(int k, const std::string& two_bridge, bool as_json) {
  if (!two_bridge.empty()) {
    long two_p = 0, q = 0;
    if (std::sscanf(two_bridge.c_str(), "%ld,%ld", &two_p, &q) != 2)
      throw CLI::ValidationError("--two-bridge expects the form 2p,q");
    TwoBridge tb{two_p, q};
    LaurentPoly riley = riley_from_matrices(LinkSpec{tb});
    if (as_json) {
      std::cout << json{{"two_bridge", {two_p, q}},
                        {"riley_uform", riley.to_json()}}
                       .dump()
                << "\n";
    } else {
      std::cout << "b(" << two_p << "," << q << ") Riley polynomial:\n  "
                << riley.to_string() << "\n";
    }
    return 0;
  }
  if (k == 0)
    std::cerr << "warning: W_0 is the torus link T(2,4), not hyperbolic\n";
  RileyData data = riley_closed_form(TwistedWhitehead{k});
  if (as_json) {
    json factors = json::array();
    for (const auto& f : data.factors) factors.push_back(f.to_json());
    std::cout << json{{"k", k},
                      {"riley_xyz", data.riley_xyz.to_json()},
                      {"riley_uform", data.riley_uform.to_json()},
                      {"factors", factors}}
                     .dump()
              << "\n";
  } else {
    std::cout << "W_" << k << " Riley polynomial (trace coordinates):\n  "
              << data.riley_xyz.to_string() << "\nfactors:\n";
    for (const auto& f : data.factors) std::cout << "  " << f.to_string() << "\n";
  }
  return 0;
}

int cmd_apoly(int k, bool as_json) {
  APolyTuple t = apoly_closed_form(k);
  NewtonPolygon np = newton_polygon(t.canonical_factor);
  if (as_json) {
    std::cout << json{{"k", k},
                      {"A1", t.a1.to_json()},
                      {"A2", t.a2.to_json()},
                      {"nonhyp_factor", t.nonhyp_factor.to_json()},
                      {"canonical_factor", t.canonical_factor.to_json()},
                      {"newton_polygon", polygon_json(np)}}
                     .dump()
              << "\n";
  } else {
    std::cout << "W_" << k << " A-polynomial tuple (A1 = A2):\n"
              << "  A1 = " << t.a1.to_string() << "\n"
              << "  nonhyperbolic factor: " << t.nonhyp_factor.to_string() << "\n"
              << "  canonical factor:     " << t.canonical_factor.to_string()
              << "\n";
  }
  return 0;
}

int cmd_canonical(int k, bool as_json) {
  LaurentPoly c = canonical_poly(TwistedWhitehead{k});
  if (as_json)
    std::cout << json{{"k", k}, {"canonical", c.to_json()}}.dump() << "\n";
  else
    std::cout << "W_" << k << " canonical component:\n  " << c.to_string()
              << " = 0\n";
  return 0;
}

int cmd_newton(int k, bool as_json) {
  NewtonPolygon np = newton_polygon(apoly_closed_form(k).canonical_factor);
  if (as_json) {
    std::cout << json{{"k", k}, {"newton_polygon", polygon_json(np)}}.dump()
              << "\n";
  } else {
    std::cout << "Newton polygon of the W_" << k << " canonical factor:\n  vertices:";
    for (const auto& [i, j] : np.vertices) std::cout << " (" << i << "," << j << ")";
    std::cout << "\n  boundary slopes:";
    for (const auto& s : np.slopes) std::cout << " " << s.to_string();
    std::cout << "\n";
  }
  return 0;
}

int cmd_volume(int k, double alpha, double tol, bool as_json, bool as_csv) {
  VolumeCurve curve = volume(k, alpha, tol);
  if (as_csv) {
    std::cout << "omega,re_z,im_z,integrand\n" << std::setprecision(12);
    for (const auto& s : curve.samples)
      std::cout << s.omega << "," << s.z.real() << "," << s.z.imag() << ","
                << s.integrand << "\n";
    return 0;
  }
  if (as_json) {
    json samples = json::array();
    for (const auto& s : curve.samples)
      samples.push_back({{"omega", s.omega},
                         {"re_z", s.z.real()},
                         {"im_z", s.z.imag()},
                         {"integrand", s.integrand}});
    std::cout << json{{"k", k},
                      {"alpha", alpha},
                      {"volume", curve.volume},
                      {"quadrature_error_estimate",
                       curve.quadrature_error_estimate},
                      {"samples", samples},
                      {"warnings", curve.warnings}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "Vol E_W" << k << "(" << fmt(alpha) << ") = " << fmt(curve.volume)
            << "  (error estimate " << fmt(curve.quadrature_error_estimate)
            << ", " << curve.samples.size() << " samples)\n";
  for (const auto& w : curve.warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

int cmd_cover(int k, int r, double tol, bool as_json) {
  double vol = cyclic_cover_volume(k, r, tol);
  if (as_json)
    std::cout << json{{"k", k}, {"r", r}, {"volume", vol}}.dump() << "\n";
  else
    std::cout << "volume of the " << r << "-fold cyclic cover over W_" << k
              << " = " << fmt(vol) << "\n";
  return 0;
}

int cmd_alpha_bound(int k, bool as_json) {
  double bound = estimate_alpha_bound(k);
  if (as_json)
    std::cout << json{{"k", k}, {"alpha_bound", bound}}.dump() << "\n";
  else
    std::cout << "alpha_W" << k << " ~= " << fmt(bound) << " rad ("
              << fmt(bound / M_PI) << " pi)\n";
  return 0;
}

bool report(const std::string& name, bool pass) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << "\n";
  return pass;
}

// The packaged cross-validation suite for one link.
int cmd_verify(int k, int trials, std::uint64_t seed) {
  bool ok = true;

  LaurentPoly from_mats = riley_from_matrices(LinkSpec{TwistedWhitehead{k}});
  RileyData cf = riley_closed_form(TwistedWhitehead{k});
  ok &= report("riley: matrix word equals closed form up to unit",
               equal_up_to_unit(from_mats,
                                cf.riley_xyz.substitute_poly(trace_bindings())));
  LaurentPoly product = C(1);
  for (const auto& f : cf.factors) product *= f;
  ok &= report("riley: factor product reconstructs the polynomial",
               product == cf.riley_xyz);

  if (k >= 1) {
    APolyTuple t = apoly_closed_form(k);
    for (int s : {1, -1}) {
      for (Component comp : {Component::a, Component::b}) {
        LaurentPoly o = squarefree_primitive(elimination_oracle(k, comp, s));
        std::string name = std::string("apoly: elimination oracle (component ") +
                           (comp == Component::a ? "a" : "b") + ", s2=" +
                           (s > 0 ? "+1" : "-1") + ")";
        ok &= report(name, o == t.canonical_factor ||
                               o == primitive_part(-t.canonical_factor));
      }
    }
    ok &= report("apoly: canonical factor passes the Newton-polygon check",
                 canonical_check(k));
    WitnessReport w = numeric_witness(k, trials, seed);
    ok &= report("apoly: canonical witnesses, residual < 1e-8",
                 w.failures.empty() && w.max_canonical_residual < 1e-8);
    if (w.has_noncanonical)
      ok &= report("apoly: non-canonical witnesses on the boundary line",
                   w.max_noncanonical_deviation < 1e-8);
    ok &= report("volume: alpha bound in [2pi/3, pi)", [&] {
      double b = estimate_alpha_bound(k);
      return b >= 2.0 * M_PI / 3.0 - 1e-6 && b < M_PI;
    }());
  } else {
    std::cout << "(W_0 is not hyperbolic; A-polynomial and volume checks "
                 "skipped)\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Whitehead link toolkit: Riley polynomials, "
               "A-polynomial tuples, canonical components and cone-manifold "
               "volumes"};
  app.require_subcommand(1);

  int k = 1, r = 3, trials = 20;
  std::uint64_t seed = 1;
  double alpha = 0.5, tol = 1e-9;
  bool as_json = false, as_csv = false;
  std::string two_bridge;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "JSON output"); };

  auto* riley_cmd = app.add_subcommand("riley", "Riley polynomial of W_k or b(2p,q)");
  riley_cmd->add_option("--k", k, "twist parameter k >= 0");
  riley_cmd->add_option("--two-bridge", two_bridge, "general two-bridge link, as 2p,q");
  add_json(riley_cmd);

  auto* apoly_cmd = app.add_subcommand("apoly", "A-polynomial 2-tuple of W_k");
  apoly_cmd->add_option("--k", k, "twist parameter k >= 1")->required();
  add_json(apoly_cmd);

  auto* canon_cmd = app.add_subcommand("canonical", "canonical component polynomial");
  canon_cmd->add_option("--k", k)->required();
  add_json(canon_cmd);

  auto* newton_cmd = app.add_subcommand("newton", "Newton polygon of the canonical factor");
  newton_cmd->add_option("--k", k)->required();
  add_json(newton_cmd);

  auto* vol_cmd = app.add_subcommand("volume", "hyperbolic cone-manifold volume");
  vol_cmd->add_option("--k", k)->required();
  vol_cmd->add_option("--alpha", alpha, "cone angle in (0, pi]")->required();
  vol_cmd->add_option("--tolerance", tol, "quadrature tolerance");
  vol_cmd->add_flag("--csv", as_csv, "CSV samples: omega,re_z,im_z,integrand");
  add_json(vol_cmd);

  auto* cover_cmd = app.add_subcommand("cover", "r-fold cyclic branched cover volume");
  cover_cmd->add_option("--k", k)->required();
  cover_cmd->add_option("--r", r, "cover degree, r >= 3")->required();
  cover_cmd->add_option("--tolerance", tol, "quadrature tolerance");
  add_json(cover_cmd);

  auto* bound_cmd = app.add_subcommand("alpha-bound", "hyperbolicity angle estimate");
  bound_cmd->add_option("--k", k)->required();
  add_json(bound_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "cross-validation suite for one link");
  verify_cmd->add_option("--k", k)->required();
  verify_cmd->add_option("--trials", trials, "witness trials (default 20)");
  verify_cmd->add_option("--seed", seed, "witness RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (riley_cmd->parsed()) return cmd_riley(k, two_bridge, as_json);
    if (apoly_cmd->parsed()) return cmd_apoly(k, as_json);
    if (canon_cmd->parsed()) return cmd_canonical(k, as_json);
    if (newton_cmd->parsed()) return cmd_newton(k, as_json);
    if (vol_cmd->parsed()) return cmd_volume(k, alpha, tol, as_json, as_csv);
    if (cover_cmd->parsed()) return cmd_cover(k, r, tol, as_json);
    if (bound_cmd->parsed()) return cmd_alpha_bound(k, as_json);
    if (verify_cmd->parsed()) return cmd_verify(k, trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
