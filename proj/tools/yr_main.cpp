// Command-line interface: exact Yangian / reflection-algebra computations
// with reproducible JSON output.
//
// Exit codes: 0 success or verification pass, 1 verification failure,
// 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "yr/jsonio.hpp"
#include "yr/yangian.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using yr::json;

struct Output {
  bool as_json = false;
  std::string out_path;

  int emit(json j, const std::string& human, int code) const {
    j["version"] = kVersion;
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      f << text;
    }
    if (as_json)
      std::cout << text;
    else
      std::cout << human << "\n";
    return code;
  }
};

int default_order(int fallback) {
  if (const char* env = std::getenv("YR_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (...) {
    }
  }
  return fallback;
}

std::string series_human(const yr::TruncatedSeries& s) {
  std::string out;
  for (int m = 0; m <= s.order(); ++m) {
    if (s.coeff(m).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + s.coeff(m).str() + ")";
    if (m > 0) out += " u^-" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

const char* status_str(yr::ClassifyStatus s) {
  switch (s) {
    case yr::ClassifyStatus::FiniteDimensional: return "finite-dimensional";
    case yr::ClassifyStatus::VermaViolation: return "verma-violation";
    case yr::ClassifyStatus::NotFiniteDimensional: return "not-finite-dimensional";
    case yr::ClassifyStatus::UndecidedAtBound: return "undecided-at-bound";
  }
  return "unknown";
}

yr::WeightsFile load_weights(const std::string& path, int n_flag, int l_flag) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("weights", "cannot read " + path);
  json j = json::parse(f);
  yr::WeightsFile w = yr::weights_from_json(j);
  if (n_flag > 0) {
    if (j.contains("n") && w.n != n_flag)
      throw CLI::ValidationError("weights", "n mismatch between flag and file");
    w.n = n_flag;
  }
  if (l_flag >= 0) {
    if (j.contains("l") && w.l != l_flag)
      throw CLI::ValidationError("weights", "l mismatch between flag and file");
    w.l = l_flag;
  }
  if (static_cast<int>(w.mu.size()) != w.n)
    throw CLI::ValidationError("weights", "mu size does not match n");
  return w;
}

// Builds the n=2 Yangian tensor module from repeated --alpha/--beta pairs.
yr::FiniteModule build_tensor(const std::vector<std::string>& alphas,
                              const std::vector<std::string>& betas) {
  if (alphas.size() != betas.size())
    throw CLI::ValidationError("module", "--alpha and --beta must be paired");
  if (alphas.empty()) return yr::trivial_module(2);
  yr::FiniteModule m =
      yr::evaluation_module(yr::Rational(alphas[0]), yr::Rational(betas[0]));
  for (size_t t = 1; t < alphas.size(); ++t)
    m = yr::tensor_module(m, yr::evaluation_module(yr::Rational(alphas[t]),
                                                   yr::Rational(betas[t])));
  return m;
}

json module_report(const yr::FiniteModule& m, bool* ok) {
  yr::HighestVectorResult hw = yr::highest_vector(m);
  json out{{"dim", m.dim}, {"kernel_dim", hw.kernel_dim}};
  *ok = hw.ok();
  if (hw.ok()) {
    json mu = json::array();
    for (const auto& f : hw.weight) mu.push_back(yr::to_json(f));
    out["mu"] = mu;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the gl(n) Yangian and its reflection algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.as_json, "emit the full JSON report on stdout");
  app.add_option("--out", out.out_path, "also write the JSON report to a file");

  int n = 2, l = 0, order = -1, max_deg = 20, trials = 50;
  bool perturb = false;
  std::string sign_str, weights_path, gamma_str = "0", alpha_str, beta_str;
  std::vector<std::string> alphas, betas;
  std::string vgamma_str;

  auto* qdet_cmd = app.add_subcommand("qdet", "quantum determinant of T(u)");
  qdet_cmd->add_option("--n", n)->required();
  qdet_cmd->add_option("--order", order);

  auto* sdet_cmd = app.add_subcommand("sdet", "Sklyanin determinant of the embedded B(u)");
  sdet_cmd->add_option("--n", n)->required();
  sdet_cmd->add_option("--l", l)->required();
  sdet_cmd->add_option("--order", order);

  auto* theta_cmd = app.add_subcommand("theta", "scalar factor relating sdet to qdet");
  theta_cmd->add_option("--n", n)->required();
  theta_cmd->add_option("--l", l)->required();

  auto* verify = app.add_subcommand("verify", "run an identity check");
  verify->require_subcommand(1);
  auto add_verify = [&](const char* name, const char* help, bool needs_l,
                        bool has_perturb = true) {
    auto* c = verify->add_subcommand(name, help);
    c->add_option("--n", n);
    if (needs_l) c->add_option("--l", l)->required();
    c->add_option("--order", order);
    if (has_perturb) c->add_flag("--perturb", perturb, "negative control: must fail");
    return c;
  };
  auto* v_rtt = add_verify("rtt", "RTT relation cleared by (u-v)", false);
  v_rtt->get_option("--n")->required();
  auto* v_refl = add_verify("reflection", "reflection equation for the embedded B", true);
  auto* v_unit = add_verify("unitarity", "B(u) B(-u) = 1", true);
  auto* v_coid = add_verify("coideal", "coproduct lands in Y(n) x B(n,l)", true);
  auto* v_sdid = add_verify("sdet-identity", "sdet B = theta qdet ratio and c(u)c(-u)=1", true);
  auto* v_cent = add_verify("central", "qdet coefficients are central", false);
  v_cent->get_option("--n")->required();
  auto* v_twist = verify->add_subcommand("twisted", "twisted-Yangian comparison at n=2");
  v_twist->add_option("--sign", sign_str, "plus (l=1) or minus (l=0)")->required();
  v_twist->add_option("--order", order);
  v_twist->add_flag("--perturb", perturb);
  auto* v_ybe = verify->add_subcommand("ybe", "Yang-Baxter equation at rational parameters");
  v_ybe->add_option("--n", n)->required();
  v_ybe->add_option("--trials", trials);
  v_ybe->add_flag("--perturb", perturb);

  auto* module = app.add_subcommand("module", "finite-dimensional modules over Q(u)");
  module->require_subcommand(1);
  auto* m_eval = module->add_subcommand("eval", "evaluation module L(alpha,beta) for n=2");
  m_eval->add_option("--alpha", alpha_str)->required();
  m_eval->add_option("--beta", beta_str)->required();
  auto* m_tensor = module->add_subcommand("tensor", "tensor product of evaluation modules");
  m_tensor->add_option("--alpha", alphas)->required();
  m_tensor->add_option("--beta", betas)->required();
  auto* m_onedim = module->add_subcommand("onedim", "one-dimensional B(n,l)-module");
  m_onedim->add_option("--n", n)->required();
  m_onedim->add_option("--l", l)->required();
  m_onedim->add_option("--gamma", gamma_str)->required();
  auto* m_restrict = module->add_subcommand("restrict", "restrict a tensor module to B(2,l)");
  m_restrict->add_option("--l", l)->required();
  m_restrict->add_option("--alpha", alphas);
  m_restrict->add_option("--beta", betas);
  auto* m_hw = module->add_subcommand("hw", "highest weight of a restricted or coideal module");
  m_hw->add_option("--l", l)->required();
  m_hw->add_option("--alpha", alphas);
  m_hw->add_option("--beta", betas);
  m_hw->add_option("--vgamma", vgamma_str, "tensor with the one-dimensional module V(vgamma)");

  auto* classify_cmd = app.add_subcommand("classify", "Drinfeld classification of a weight");
  classify_cmd->add_option("--n", n);
  classify_cmd->add_option("--l", l);
  classify_cmd->add_option("--weights", weights_path)->required();
  classify_cmd->add_option("--max-deg", max_deg);

  auto* verma_cmd = app.add_subcommand("verma-check", "Verma module existence conditions");
  verma_cmd->add_option("--n", n);
  verma_cmd->add_option("--l", l);
  verma_cmd->add_option("--weights", weights_path)->required();

  // Let --json/--out appear after any subcommand.
  for (auto* sub :
       {qdet_cmd, sdet_cmd, theta_cmd, verify, v_rtt, v_refl, v_unit, v_coid, v_sdid, v_cent,
        v_twist, v_ybe, module, m_eval, m_tensor, m_onedim, m_restrict, m_hw, classify_cmd,
        verma_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);

    if (qdet_cmd->parsed()) {
      const int d = order >= 0 ? order : default_order(6);
      yr::TruncatedSeries s = yr::qdet(n, d);
      return out.emit(json{{"command", "qdet"}, {"n", n}, {"order", d}, {"qdet", yr::to_json(s)}},
                      "qdet T(u), n=" + std::to_string(n) + ": " + series_human(s), 0);
    }
    if (sdet_cmd->parsed()) {
      const int d = order >= 0 ? order : default_order(6);
      yr::EmbeddedB eb = yr::embed_b(yr::Signature(n, l), d);
      yr::TruncatedSeries s = yr::sklyanin_det(eb);
      return out.emit(json{{"command", "sdet"},
                           {"n", n},
                           {"l", l},
                           {"order", d},
                           {"sdet", yr::to_json(s)}},
                      "sdet B(u), (n,l)=(" + std::to_string(n) + "," + std::to_string(l) +
                          "): " + series_human(s),
                      0);
    }
    if (theta_cmd->parsed()) {
      yr::RationalFunction th = yr::theta(yr::Signature(n, l));
      return out.emit(json{{"command", "theta"}, {"n", n}, {"l", l}, {"theta", yr::to_json(th)}},
                      "theta(u) = " + th.str(), 0);
    }

    if (verify->parsed()) {
      bool pass = false;
      json params{{"command", "verify"}};
      std::string name;
      if (v_rtt->parsed()) {
        name = "rtt";
        const int d = order >= 0 ? order : default_order(6);
        yr::MatrixSeries t = yr::t_matrix(n, d);
        if (perturb) t = yr::perturb_entry(t, 0, std::min(1, n - 1), std::min(1, d));
        pass = yr::rtt_residual_for(t, n).is_zero();
        params["n"] = n;
        params["order"] = d;
      } else if (v_refl->parsed() || v_unit->parsed()) {
        name = v_refl->parsed() ? "reflection" : "unitarity";
        const int d = order >= 0 ? order : default_order(6);
        yr::EmbeddedB eb = yr::embed_b(yr::Signature(n, l), d);
        yr::MatrixSeries b = perturb
                                 ? yr::perturb_entry(eb.b, 0, std::min(1, n - 1), std::min(2, d))
                                 : eb.b;
        pass = v_refl->parsed() ? yr::reflection_residual(b, n).is_zero()
                                : yr::unitarity_residual(b).is_zero();
        params["n"] = n;
        params["l"] = l;
        params["order"] = d;
      } else if (v_coid->parsed()) {
        name = "coideal";
        const int d = order >= 0 ? order : default_order(3);
        pass = yr::coideal_check(yr::Signature(n, l), d, perturb);
        params["n"] = n;
        params["l"] = l;
        params["order"] = d;
      } else if (v_sdid->parsed()) {
        name = "sdet-identity";
        const int d = order >= 0 ? order : default_order(6);
        yr::EmbeddedB eb = yr::embed_b(yr::Signature(n, l), d);
        if (perturb) eb.b = yr::perturb_entry(eb.b, 0, 0, std::min(1, d));
        yr::SdetIdentityReport rep = yr::sdet_identity_check_for(eb);
        pass = rep.all_ok();
        params["n"] = n;
        params["l"] = l;
        params["order"] = d;
        params["identity"] = rep.identity_ok;
        params["constant_term"] = rep.const_term_ok;
        params["cucu"] = rep.cucu_ok;
      } else if (v_cent->parsed()) {
        name = "central";
        const int d = order >= 0 ? order : default_order(6);
        yr::TruncatedSeries s = yr::qdet(n, d);
        if (perturb && d >= 1) s.coeff(1) += yr::NCPolynomial::generator(1, std::min(2, n), 1);
        std::optional<yr::CentralityWitness> witness;
        pass = yr::is_central_series(s, n, &witness);
        params["n"] = n;
        params["order"] = d;
        if (!pass && witness)
          params["witness"] = json::array({witness->i, witness->j, witness->r});
      } else if (v_twist->parsed()) {
        name = "twisted";
        const int d = order >= 0 ? order : default_order(4);
        int sign = 0;
        if (sign_str == "plus" || sign_str == "+")
          sign = 1;
        else if (sign_str == "minus" || sign_str == "-")
          sign = -1;
        else
          throw CLI::ValidationError("--sign", "expected plus or minus");
        yr::TwistedMapReport rep = yr::twisted_map_check(sign, d, perturb);
        pass = rep.all_ok();
        params["sign"] = sign_str;
        params["order"] = d;
        params["quatw"] = rep.quatw_ok;
        params["delta_scalar"] = rep.delta_scalar_ok;
        params["delta_unitary"] = rep.delta_unitary_ok;
      } else if (v_ybe->parsed()) {
        name = "ybe";
        pass = true;
        for (int t = 0; t < trials; ++t) {
          // Deterministic small rational triples.
          auto r = [&](int k) {
            return yr::Rational(((t * 7 + k * 3) % 19) - 9, (t + k) % 3 + 1);
          };
          yr::Rational u1 = r(0), u2 = r(1), u3 = r(2);
          bool ok = perturb ? yr::ybe_holds(n, u1, u2, u2)  // degenerate on purpose
                            : yr::ybe_holds(n, u1, u2, u3);
          if (perturb) {
            // Negative control: swapped factor order fails generically.
            const int dim = yr::tensor_dim(n, 3);
            auto cr = [&](int a, int b, const yr::Rational& arg) {
              yr::QMatrix m = yr::QMatrix::identity(dim);
              m.scale(arg);
              return m - yr::swap_operator(n, 3, a, b);
            };
            ok = cr(0, 1, u1 - u2) * cr(1, 2, u2 - u3) * cr(0, 2, u1 - u3) ==
                 cr(1, 2, u2 - u3) * cr(0, 2, u1 - u3) * cr(0, 1, u1 - u2);
          }
          if (!ok) {
            pass = false;
            break;
          }
        }
        params["n"] = n;
        params["trials"] = trials;
      }
      params["check"] = name;
      params["pass"] = pass;
      if (perturb) params["perturb"] = true;
      return out.emit(std::move(params), std::string(name) + ": " + (pass ? "PASS" : "FAIL"),
                      pass ? 0 : 1);
    }

    if (module->parsed()) {
      json rep{{"command", "module"}};
      bool ok = true;
      if (m_eval->parsed()) {
        rep["kind"] = "eval";
        yr::FiniteModule m =
            yr::evaluation_module(yr::Rational(alpha_str), yr::Rational(beta_str));
        rep.update(module_report(m, &ok));
      } else if (m_tensor->parsed()) {
        rep["kind"] = "tensor";
        rep.update(module_report(build_tensor(alphas, betas), &ok));
      } else if (m_onedim->parsed()) {
        rep["kind"] = "onedim";
        yr::FiniteModule m = yr::one_dim_b_module(yr::Signature(n, l), yr::Rational(gamma_str));
        rep["n"] = n;
        rep["l"] = l;
        rep.update(module_report(m, &ok));
      } else if (m_restrict->parsed() || m_hw->parsed()) {
        rep["kind"] = m_restrict->parsed() ? "restrict" : "hw";
        yr::FiniteModule t = build_tensor(alphas, betas);
        yr::FiniteModule m =
            (m_hw->parsed() && !vgamma_str.empty())
                ? yr::b_tensor_module(
                      t, yr::one_dim_b_module(yr::Signature(2, l), yr::Rational(vgamma_str)))
                : yr::restrict_to_b(t, l);
        rep["l"] = l;
        rep.update(module_report(m, &ok));
      }
      return out.emit(std::move(rep),
                      ok ? "dim " + std::to_string(rep["dim"].get<int>()) + ", weight extracted"
                         : "highest vector extraction failed",
                      ok ? 0 : 1);
    }

    if (classify_cmd->parsed() || verma_cmd->parsed()) {
      CLI::App* cmd = classify_cmd->parsed() ? classify_cmd : verma_cmd;
      const int n_flag = cmd->count("--n") ? n : 0;
      const int l_flag = cmd->count("--l") ? l : -1;
      yr::WeightsFile w = load_weights(weights_path, n_flag, l_flag);
      yr::Signature sig(w.n, w.l);
      if (verma_cmd->parsed()) {
        yr::VermaReport rep = yr::verma_exists(w.mu, sig);
        json violations = json::array();
        if (!rep.ok)
          violations.push_back(json{{"index", rep.bad_index}, {"condition", rep.condition}});
        return out.emit(json{{"command", "verma-check"},
                             {"n", w.n},
                             {"l", w.l},
                             {"pass", rep.ok},
                             {"violations", violations}},
                        std::string("verma-check: ") + (rep.ok ? "PASS" : "FAIL"),
                        rep.ok ? 0 : 1);
      }
      yr::ClassifyResult cr = yr::classify_finite_dim(w.mu, sig, max_deg);
      json rep{{"command", "classify"},
               {"n", w.n},
               {"l", w.l},
               {"max_deg", max_deg},
               {"status", status_str(cr.status)}};
      if (cr.status == yr::ClassifyStatus::FiniteDimensional) {
        rep.update(yr::to_json(cr.data));
      } else {
        rep["detail"] = cr.detail;
        if (cr.status == yr::ClassifyStatus::VermaViolation)
          rep["violations"] = json::array(
              {json{{"index", cr.verma.bad_index}, {"condition", cr.verma.condition}}});
      }
      const bool good = cr.status == yr::ClassifyStatus::FiniteDimensional;
      return out.emit(std::move(rep), std::string("classify: ") + status_str(cr.status),
                      good ? 0 : 1);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
