// Command-line front end: a multivector calculator plus one subcommand per
// spinor toolkit area.  Text output by default, --json for machine use.
// Exit codes: 0 success, 1 domain error, 2 parse/usage error.

#include <array>
#include <charconv>
#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliffspin/algebra.hpp"
#include "cliffspin/dirac.hpp"
#include "cliffspin/error.hpp"
#include "cliffspin/pauli.hpp"
#include "cliffspin/repr.hpp"
#include "cliffspin/spin_group.hpp"
#include "cliffspin/textio.hpp"
#include "cliffspin/two_spinor.hpp"
#include "cliffspin/wick.hpp"

namespace {

using cliffspin::Multivector;
using cliffspin::Signature;
using cliffspin::Tolerance;
using nlohmann::json;

struct Options {
  std::string sig_text = "1,3";
  bool json_out = false;
  double eps = -1.0;
  int exit_code = 0;
};

Signature parse_sig(const std::string& text) {
  const auto comma = text.find(',');
  int p = -1, q = -1;
  if (comma != std::string::npos) {
    const char* begin = text.data();
    auto r1 = std::from_chars(begin, begin + comma, p);
    auto r2 = std::from_chars(begin + comma + 1, begin + text.size(), q);
    if (r1.ec != std::errc() || r1.ptr != begin + comma ||
        r2.ec != std::errc() || r2.ptr != begin + text.size())
      p = -1;
  }
  if (p < 0 || q < 0 || p + q > Signature::max_dimension)
    throw cliffspin::ParseError("--sig expects p,q with p+q <= 12", 0);
  return Signature{p, q};
}

Tolerance tol_of(const Options& opt) {
  if (opt.eps < 0.0) return Tolerance{};
  return Tolerance{opt.eps, opt.eps};
}

double nz(double value) { return value == 0.0 ? 0.0 : value; }

std::string fmt(double value) {
  char buffer[64];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, nz(value));
  return std::string(buffer, ptr);
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

json sig_json(const Signature& sig) { return json::array({sig.p, sig.q}); }

json term_list(const Multivector& a) {
  json terms = json::array();
  for (const cliffspin::ParsedTerm& t :
       cliffspin::parse_expression(cliffspin::serialize(a), a.signature())
           .terms)
    terms.push_back({{"mask", t.blade_mask}, {"coefficient", t.coefficient}});
  return terms;
}

// component views in basis order: vectors over (gamma0..gamma3), bivectors
// over ascending blade masks {3,5,6,9,10,12}
json vector4(const Multivector& v) {
  json out = json::array();
  for (int mu = 0; mu < 4; ++mu) out.push_back(nz(v.coefficient(1u << mu)));
  return out;
}

json bivector6(const Multivector& b) {
  json out = json::array();
  for (std::uint32_t mask : {3u, 5u, 6u, 9u, 10u, 12u})
    out.push_back(nz(b.coefficient(mask)));
  return out;
}

json optional_int(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

std::string optional_text(const std::optional<int>& v) {
  if (!v) return "none";
  return *v > 0 ? "+1" : "-1";
}

// ---- mv ---------------------------------------------------------------

void run_mv_eval(const Options& opt, const std::string& expr) {
  const Signature sig = parse_sig(opt.sig_text);
  const Multivector a = cliffspin::parse(expr, sig);
  emit(opt,
       {{"sig", sig_json(sig)},
        {"result", cliffspin::serialize(a)},
        {"terms", term_list(a)}},
       cliffspin::serialize(a) + "\n");
}

void run_mv_unary(const Options& opt, const std::string& expr,
                  const std::string& name) {
  const Signature sig = parse_sig(opt.sig_text);
  const Multivector a = cliffspin::parse(expr, sig);
  Multivector out(sig);
  if (name == "rev")
    out = cliffspin::reverse(a);
  else if (name == "conj")
    out = cliffspin::clifford_conjugate(a);
  else if (name == "inv")
    out = cliffspin::versor_inverse(a, tol_of(opt));
  else
    out = cliffspin::exp_bivector(a, +1, tol_of(opt));
  emit(opt,
       {{"sig", sig_json(sig)}, {"result", cliffspin::serialize(out)}},
       cliffspin::serialize(out) + "\n");
}

void run_mv_grade(const Options& opt, const std::string& expr, int k) {
  const Signature sig = parse_sig(opt.sig_text);
  const Multivector out = cliffspin::grade_project(cliffspin::parse(expr, sig), k);
  emit(opt,
       {{"sig", sig_json(sig)},
        {"grade", k},
        {"result", cliffspin::serialize(out)}},
       cliffspin::serialize(out) + "\n");
}

// ---- spin -------------------------------------------------------------

void run_spin_check(const Options& opt, const std::string& expr) {
  const Signature sig = parse_sig(opt.sig_text);
  const Multivector u = cliffspin::parse(expr, sig);
  const cliffspin::VersorClass vc = cliffspin::classify_versor(u, tol_of(opt));
  emit(opt,
       {{"sig", sig_json(sig)},
        {"class", cliffspin::to_string(vc.tag)},
        {"norm", vc.norm}},
       "class = " + cliffspin::to_string(vc.tag) + "\nnorm = " +
           fmt(vc.norm) + "\n");
}

void run_spin_rotate(const Options& opt, const std::string& versor_expr,
                     const std::string& target_expr) {
  const Signature sig = parse_sig(opt.sig_text);
  const Multivector u = cliffspin::parse(versor_expr, sig);
  const Multivector a = cliffspin::parse(target_expr, sig);
  const Multivector out = cliffspin::adjoint_act(u, a, +1, tol_of(opt));
  emit(opt,
       {{"sig", sig_json(sig)}, {"result", cliffspin::serialize(out)}},
       cliffspin::serialize(out) + "\n");
}

// ---- pauli ------------------------------------------------------------

void run_pauli_observables(const Options& opt, const std::string& expr) {
  const Signature sig = cliffspin::pauli_signature();
  const cliffspin::PauliSpinor psi(cliffspin::parse(expr, sig),
                                   cliffspin::pauli_sigma(3), tol_of(opt));
  const cliffspin::PauliObservables obs =
      cliffspin::pauli_observables(psi, tol_of(opt));
  const Eigen::Vector3d s = obs.spin_components();
  emit(opt,
       {{"rho", obs.rho},
        {"spin", {s(0), s(1), s(2)}},
        {"spin_expr", cliffspin::serialize(obs.spin)}},
       "rho = " + fmt(obs.rho) + "\nspin = " + cliffspin::serialize(obs.spin) +
           "\n");
}

void run_pauli_reconstruct(const Options& opt, double rho,
                           const std::string& spin_expr, double alpha) {
  const Signature sig = cliffspin::pauli_signature();
  const Multivector spin = cliffspin::parse(spin_expr, sig);
  const cliffspin::PauliSpinor psi = cliffspin::pauli_reconstruct(
      rho, spin, alpha, cliffspin::pauli_sigma(3), tol_of(opt));
  const cliffspin::PauliObservables back =
      cliffspin::pauli_observables(psi, tol_of(opt));
  const double residual = std::max(
      std::abs(back.rho - rho),
      cliffspin::max_abs_coefficient(back.spin - spin));
  emit(opt,
       {{"spinor", cliffspin::serialize(psi.value())},
        {"rho", back.rho},
        {"residual", residual}},
       "spinor = " + cliffspin::serialize(psi.value()) + "\nresidual = " +
           fmt(residual) + "\n");
}

// ---- dirac ------------------------------------------------------------

cliffspin::DiracSpinor dirac_of(const Options& opt, const std::string& expr) {
  return cliffspin::DiracSpinor(
      cliffspin::parse(expr, cliffspin::dirac_signature()),
      cliffspin::DiracFrame(), tol_of(opt));
}

void run_dirac_bilinears(const Options& opt, const std::string& expr) {
  const cliffspin::DiracSpinor psi = dirac_of(opt, expr);
  const cliffspin::BilinearSet b = cliffspin::dirac_bilinears(psi, tol_of(opt));
  const double fierz = cliffspin::fierz_residuals(b).max();
  emit(opt,
       {{"rho", b.rho},
        {"beta", b.beta},
        {"J", vector4(b.J)},
        {"S", bivector6(b.S)},
        {"K", vector4(b.K)},
        {"fierz_max_residual", fierz}},
       "rho = " + fmt(b.rho) + "\nbeta = " + fmt(b.beta) + "\nJ = " +
           cliffspin::serialize(b.J) + "\nS = " + cliffspin::serialize(b.S) +
           "\nK = " + cliffspin::serialize(b.K) + "\nfierz max residual = " +
           fmt(fierz) + "\n");
}

void run_dirac_fierz(const Options& opt, const std::string& expr) {
  const cliffspin::BilinearSet b =
      cliffspin::dirac_bilinears(dirac_of(opt, expr), tol_of(opt));
  const cliffspin::FierzResiduals r = cliffspin::fierz_residuals(b);
  const std::array<std::pair<const char*, double>, 9> rows = {{
      {"j_square", r.j_square},
      {"k_square", r.k_square},
      {"jk_scalar", r.jk_scalar},
      {"jk", r.jk},
      {"js", r.js},
      {"sj", r.sj},
      {"ks", r.ks},
      {"sk", r.sk},
      {"s_square", r.s_square},
  }};
  json j;
  std::string text;
  for (const auto& [name, value] : rows) {
    j[name] = value;
    text += std::string(name) + " = " + fmt(value) + "\n";
  }
  j["max"] = r.max();
  text += "max = " + fmt(r.max()) + "\n";
  emit(opt, j, text);
}

json classification_json(const cliffspin::LounestoClass& lc) {
  json j = {{"class", cliffspin::to_string(lc.tag)},
            {"rho", lc.bilinears.rho},
            {"beta", lc.bilinears.beta},
            {"charge_conjugation", optional_int(lc.charge_conjugation)},
            {"chirality", optional_int(lc.chirality)}};
  if (lc.null_part) {
    j["h"] = lc.null_part->h;
    j["s"] = vector4(lc.null_part->s);
    j["phi"] = lc.null_part->phi;
  }
  return j;
}

std::string classification_text(const cliffspin::LounestoClass& lc) {
  std::string text = std::string("class = ") + cliffspin::to_string(lc.tag) +
                     "\nrho = " + fmt(lc.bilinears.rho) + "\nbeta = " +
                     fmt(lc.bilinears.beta) + "\ncharge conjugation = " +
                     optional_text(lc.charge_conjugation) + "\nchirality = " +
                     optional_text(lc.chirality) + "\n";
  if (lc.null_part) {
    text += "h = " + fmt(lc.null_part->h) + "\ns = " +
            cliffspin::serialize(lc.null_part->s) + "\nphi = " +
            fmt(lc.null_part->phi) + "\n";
  }
  return text;
}

void run_dirac_classify(const Options& opt, const std::string& expr) {
  const cliffspin::LounestoClass lc =
      cliffspin::lounesto_classify(dirac_of(opt, expr), tol_of(opt));
  emit(opt, classification_json(lc), classification_text(lc));
}

void run_dirac_reconstruct(const Options& opt, const std::string& expr) {
  const cliffspin::DiracSpinor psi = dirac_of(opt, expr);
  const cliffspin::LounestoClass lc =
      cliffspin::lounesto_classify(psi, tol_of(opt));
  const Eigen::Vector3d no_phase = Eigen::Vector3d::Zero();
  cliffspin::DiracSpinor rebuilt =
      lc.null_part
          ? cliffspin::dirac_reconstruct_null(
                lc.bilinears.J, lc.null_part->h, lc.null_part->s, no_phase,
                psi.frame(), tol_of(opt))
          : cliffspin::dirac_reconstruct(lc.bilinears, no_phase, tol_of(opt));
  const cliffspin::BilinearSet back =
      cliffspin::dirac_bilinears(rebuilt, tol_of(opt));
  // the free phase leaves rho, beta and the current invariant
  const double residual = std::max(
      {std::abs(back.rho - lc.bilinears.rho),
       std::abs(back.beta - lc.bilinears.beta),
       cliffspin::max_abs_coefficient(back.J - lc.bilinears.J)});
  emit(opt,
       {{"class", cliffspin::to_string(lc.tag)},
        {"spinor", cliffspin::serialize(rebuilt.value())},
        {"observable_residual", residual}},
       "class = " + std::string(cliffspin::to_string(lc.tag)) +
           "\nspinor = " + cliffspin::serialize(rebuilt.value()) +
           "\nobservable residual = " + fmt(residual) + "\n");
}

// ---- twospinor ----------------------------------------------------------

cliffspin::Projector frame_of(const Options& opt,
                              const std::string& frame_expr) {
  const Multivector e =
      frame_expr.empty()
          ? cliffspin::dirac_sigma(3)
          : cliffspin::parse(frame_expr, cliffspin::dirac_signature());
  return cliffspin::Projector(e, tol_of(opt));
}

json components_json(const std::array<std::complex<double>, 2>& c) {
  return json::array(
      {{nz(c[0].real()), nz(c[0].imag())}, {nz(c[1].real()), nz(c[1].imag())}});
}

std::string components_text(const std::array<std::complex<double>, 2>& c) {
  return "(" + fmt(c[0].real()) + ", " + fmt(c[0].imag()) + "i), (" +
         fmt(c[1].real()) + ", " + fmt(c[1].imag()) + "i)";
}

void run_twospinor_split(const Options& opt, const std::string& expr,
                         const std::string& frame_expr) {
  const cliffspin::Projector l = frame_of(opt, frame_expr);
  const Multivector psi =
      cliffspin::parse(expr, cliffspin::dirac_signature());
  const auto [eta, chi] = cliffspin::split(psi, l, tol_of(opt));
  const auto eta_c = cliffspin::spinor_components(eta, tol_of(opt));
  const auto chi_c = cliffspin::spinor_components(chi, tol_of(opt));
  emit(opt,
       {{"frame", cliffspin::serialize(l.bivector())},
        {"eta",
         {{"value", cliffspin::serialize(eta.value())},
          {"components", components_json(eta_c)}}},
        {"chi",
         {{"value", cliffspin::serialize(chi.value())},
          {"components", components_json(chi_c)}}}},
       "eta = " + cliffspin::serialize(eta.value()) + "\neta components = " +
           components_text(eta_c) + "\nchi = " +
           cliffspin::serialize(chi.value()) + "\nchi components = " +
           components_text(chi_c) + "\n");
}

void run_twospinor_classify(const Options& opt, const std::string& expr) {
  const cliffspin::LounestoClass lc =
      cliffspin::lounesto_classify(dirac_of(opt, expr), tol_of(opt));
  json j = classification_json(lc);
  std::string text = classification_text(lc);
  const bool weyl = lc.chirality.has_value();
  const bool majorana = lc.charge_conjugation.has_value();
  j["weyl"] = weyl;
  j["majorana"] = majorana;
  text += std::string("weyl = ") + (weyl ? "yes" : "no") + "\nmajorana = " +
          (majorana ? "yes" : "no") + "\n";
  emit(opt, j, text);
}

void run_twospinor_tetrad(const Options& opt, const std::string& frame_expr) {
  const cliffspin::Projector l = frame_of(opt, frame_expr);
  const cliffspin::NullTetrad nt = cliffspin::null_tetrad(l, tol_of(opt));
  const std::array<const Multivector*, 4> legs = {&nt.l, &nt.n, &nt.m,
                                                  &nt.m_dagger};
  json metric = json::array();
  std::string metric_text;
  double residual = 0.0;
  for (int a = 0; a < 4; ++a) {
    json row = json::array();
    metric_text += " ";
    for (int b = 0; b < 4; ++b) {
      const Multivector g = (*legs[a]) * cliffspin::reverse(*legs[b]) +
                            (*legs[b]) * cliffspin::reverse(*legs[a]);
      const double value = cliffspin::scalar_part(g);
      row.push_back(nz(value));
      metric_text += " " + fmt(value);
      residual = std::max(
          residual,
          cliffspin::max_abs_coefficient(
              g - Multivector::scalar(cliffspin::dirac_signature(), value)));
    }
    metric.push_back(row);
    metric_text += "\n";
  }
  emit(opt,
       {{"frame", cliffspin::serialize(l.bivector())},
        {"l", cliffspin::serialize(nt.l)},
        {"n", cliffspin::serialize(nt.n)},
        {"m", cliffspin::serialize(nt.m)},
        {"m_dagger", cliffspin::serialize(nt.m_dagger)},
        {"np_metric", metric},
        {"metric_residual", residual}},
       "l = " + cliffspin::serialize(nt.l) + "\nn = " +
           cliffspin::serialize(nt.n) + "\nm = " +
           cliffspin::serialize(nt.m) + "\nm_dagger = " +
           cliffspin::serialize(nt.m_dagger) + "\nnp metric =\n" +
           metric_text + "metric residual = " + fmt(residual) + "\n");
}

void run_twospinor_flag(const Options& opt, const std::string& eta_expr,
                        const std::string& chi_expr,
                        const std::string& frame_expr) {
  const cliffspin::Projector l = frame_of(opt, frame_expr);
  const Signature sig = cliffspin::dirac_signature();
  const cliffspin::TwoSpinor eta(cliffspin::parse(eta_expr, sig), l,
                                 tol_of(opt));
  const cliffspin::TwoSpinor chi(cliffspin::parse(chi_expr, sig), l,
                                 tol_of(opt));
  const Multivector pole = cliffspin::flagpole(eta, tol_of(opt));
  const Multivector f = cliffspin::flag(eta, chi, tol_of(opt));
  const std::complex<double> w =
      cliffspin::inner_product(eta, chi, tol_of(opt));
  emit(opt,
       {{"flagpole", cliffspin::serialize(pole)},
        {"flag", cliffspin::serialize(f)},
        {"bracket", {nz(w.real()), nz(w.imag())}},
        {"flag_square_residual",
         cliffspin::max_abs_coefficient(f * f)}},
       "flagpole = " + cliffspin::serialize(pole) + "\nflag = " +
           cliffspin::serialize(f) + "\nbracket = (" + fmt(w.real()) + ", " +
           fmt(w.imag()) + "i)\n");
}

// ---- rep ----------------------------------------------------------------

void run_rep_lookup(const Options& opt) {
  const Signature sig = parse_sig(opt.sig_text);
  const cliffspin::RepTag tag = cliffspin::rep_lookup(sig);
  emit(opt,
       {{"sig", sig_json(sig)},
        {"tag", cliffspin::to_string(tag)},
        {"ring", cliffspin::to_string(tag.ring)},
        {"size", tag.size},
        {"doubled", tag.doubled},
        {"real_dimension", cliffspin::real_dimension(tag)}},
       cliffspin::to_string(tag) + "\n");
}

void run_rep_verify(const Options& opt) {
  const Signature sig = parse_sig(opt.sig_text);
  const cliffspin::MatrixRep rep = cliffspin::build_rep(sig);
  const cliffspin::RepReport report = cliffspin::verify_rep(rep);
  emit(opt,
       {{"sig", sig_json(sig)},
        {"tag", cliffspin::to_string(rep.tag)},
        {"relation_residual", report.relation_residual},
        {"worst_pair", {report.worst_i, report.worst_j}},
        {"product_residual", report.product_residual},
        {"injective", report.injective}},
       "tag = " + cliffspin::to_string(rep.tag) + "\nrelation residual = " +
           fmt(report.relation_residual) + "\nproduct residual = " +
           fmt(report.product_residual) + "\ninjective = " +
           (report.injective ? "yes" : "no") + "\n");
}

// ---- wick ---------------------------------------------------------------

void run_wick_rotate(Options& opt, const std::string& expr) {
  const Multivector a =
      cliffspin::parse(expr, cliffspin::dirac_signature());
  const cliffspin::WickImage image = cliffspin::wick_rotate(a);
  emit(opt,
       {{"source", cliffspin::serialize(a)},
        {"source_sig", sig_json(image.source_sig)},
        {"image", cliffspin::serialize(image.value)},
        {"image_sig", sig_json(image.value.signature())}},
       cliffspin::serialize(image.value) + "\n");
}

void run_wick_bridge(Options& opt) {
  const cliffspin::BridgeReport report = cliffspin::signature_bridge_check();
  const bool ok = report.passed();
  std::string text = "sigma squared in (1,3) =";
  for (double s : report.sigma_squared_in_13) text += " " + fmt(s);
  text += "\nsigma squared in (3,1) =";
  for (double s : report.sigma_squared_in_31) text += " " + fmt(s);
  text += "\ntable residual = " + fmt(report.table_residual) + "\n";
  text += ok ? "PASS\n" : "FAIL\n";
  emit(opt,
       {{"sigma_squared_13", report.sigma_squared_in_13},
        {"sigma_squared_31", report.sigma_squared_in_31},
        {"table_residual", report.table_residual},
        {"passed", ok}},
       text);
  if (!ok) opt.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebra and spinor toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--sig", opt.sig_text,
                 "algebra signature p,q (commands tied to a fixed algebra "
                 "ignore it)")
      ->capture_default_str();
  app.add_flag("--json", opt.json_out, "emit JSON instead of text");
  app.add_option("--eps", opt.eps,
                 "absolute and relative tolerance for validations");

  struct {
    std::string expr, second, frame;
    int grade = 0;
    double rho = 1.0, alpha = 0.0;
  } args;

  CLI::App* mv = app.add_subcommand("mv", "multivector calculator");
  CLI::App* mv_eval = mv->add_subcommand("eval", "evaluate an expression");
  mv_eval->add_option("expr", args.expr)->required();
  mv_eval->callback([&] { run_mv_eval(opt, args.expr); });
  CLI::App* mv_grade = mv->add_subcommand("grade", "project onto one grade");
  mv_grade->add_option("k", args.grade)->required();
  mv_grade->add_option("expr", args.expr)->required();
  mv_grade->callback([&] { run_mv_grade(opt, args.expr, args.grade); });
  for (const char* name : {"rev", "inv", "conj", "exp"}) {
    CLI::App* sub = mv->add_subcommand(
        name, std::string("apply ") + name + " to an expression");
    sub->add_option("expr", args.expr)->required();
    sub->callback([&, name] { run_mv_unary(opt, args.expr, name); });
  }

  CLI::App* spin = app.add_subcommand("spin", "versor groups");
  CLI::App* spin_check =
      spin->add_subcommand("check", "classify an element under Pin/Spin");
  spin_check->add_option("expr", args.expr)->required();
  spin_check->callback([&] { run_spin_check(opt, args.expr); });
  CLI::App* spin_rotate =
      spin->add_subcommand("rotate", "adjoint action U a ~U");
  spin_rotate->add_option("versor", args.expr)->required();
  spin_rotate->add_option("target", args.second)->required();
  spin_rotate->callback([&] { run_spin_rotate(opt, args.expr, args.second); });

  CLI::App* pauli = app.add_subcommand("pauli", "spinors of Cl(3,0)");
  CLI::App* pauli_obs =
      pauli->add_subcommand("observables", "density and spin vector");
  pauli_obs->add_option("expr", args.expr)->required();
  pauli_obs->callback([&] { run_pauli_observables(opt, args.expr); });
  CLI::App* pauli_rec =
      pauli->add_subcommand("reconstruct", "spinor from observables");
  pauli_rec->add_option("rho", args.rho)->required();
  pauli_rec->add_option("spin", args.expr)->required();
  pauli_rec->add_option("--alpha", args.alpha, "free phase angle");
  pauli_rec->callback(
      [&] { run_pauli_reconstruct(opt, args.rho, args.expr, args.alpha); });

  CLI::App* dirac = app.add_subcommand("dirac", "spinors of Cl(1,3)");
  for (const auto& [name, help] :
       std::vector<std::pair<const char*, const char*>>{
           {"bilinears", "the five bilinear covariants"},
           {"classify", "Lounesto classification"},
           {"reconstruct", "rebuild a spinor from its covariants"},
           {"fierz", "residuals of the nine bilinear identities"}}) {
    CLI::App* sub = dirac->add_subcommand(name, help);
    sub->add_option("expr", args.expr)->required();
    std::string picked = name;
    sub->callback([&, picked] {
      if (picked == "bilinears") run_dirac_bilinears(opt, args.expr);
      else if (picked == "classify") run_dirac_classify(opt, args.expr);
      else if (picked == "reconstruct") run_dirac_reconstruct(opt, args.expr);
      else run_dirac_fierz(opt, args.expr);
    });
  }

  CLI::App* two = app.add_subcommand("twospinor", "ideal spinors of Cl(1,3)");
  CLI::App* two_split =
      two->add_subcommand("split", "project onto the two chiral ideals");
  two_split->add_option("expr", args.expr)->required();
  two_split->add_option("--frame", args.frame, "projector bivector");
  two_split->callback([&] { run_twospinor_split(opt, args.expr, args.frame); });
  CLI::App* two_classify = two->add_subcommand(
      "classify", "Weyl/Majorana report with the null observables");
  two_classify->add_option("expr", args.expr)->required();
  two_classify->callback([&] { run_twospinor_classify(opt, args.expr); });
  CLI::App* two_tetrad =
      two->add_subcommand("tetrad", "null tetrad of a frame");
  two_tetrad->add_option("--frame", args.frame, "projector bivector");
  two_tetrad->callback([&] { run_twospinor_tetrad(opt, args.frame); });
  CLI::App* two_flag = two->add_subcommand("flag", "flagpole and flag");
  two_flag->add_option("eta", args.expr)->required();
  two_flag->add_option("chi", args.second)->required();
  two_flag->add_option("--frame", args.frame, "projector bivector");
  two_flag->callback(
      [&] { run_twospinor_flag(opt, args.expr, args.second, args.frame); });

  CLI::App* rep = app.add_subcommand("rep", "matrix representations");
  rep->add_subcommand("lookup", "classification table entry")->callback([&] {
    run_rep_lookup(opt);
  });
  rep->add_subcommand("verify", "build generators and verify the relations")
      ->callback([&] { run_rep_verify(opt); });

  CLI::App* wick =
      app.add_subcommand("wick", "rotate a spacetime vector to Cl(4,0)");
  wick->add_option("expr", args.expr, "grade-1 expression in Cl(1,3)");
  wick->add_subcommand("bridge",
                       "even-subalgebra bridge between Cl(1,3) and Cl(3,1)")
      ->callback([&] { run_wick_bridge(opt); });
  wick->callback([&] {
    if (wick->get_subcommands().empty()) {
      if (args.expr.empty())
        throw cliffspin::ParseError(
            "wick needs a vector expression or the bridge subcommand", 0);
      run_wick_rotate(opt, args.expr);
    }
  });

  // let --sig/--json/--eps appear after any subcommand
  const std::function<void(CLI::App*)> enable_fallthrough =
      [&enable_fallthrough](CLI::App* cmd) {
        cmd->fallthrough();
        for (CLI::App* sub : cmd->get_subcommands({})) enable_fallthrough(sub);
      };
  for (CLI::App* sub : app.get_subcommands({})) enable_fallthrough(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const cliffspin::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cliffspin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return opt.exit_code;
}
