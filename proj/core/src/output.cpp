// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include "qes/output.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qes {

namespace {

using nlohmann::json;

std::string fmt(const Float256& x, int bits) {
  return real_to_string(x, max_digits10(precision_from_bits(bits)));
}

json complex_json(const Complex256& z, int bits) {
  return json::array({fmt(z.real(), bits), fmt(z.imag(), bits)});
}

Float256 parse_float(const std::string& s) { return Float256(s); }

Complex256 parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error("expected [re, im] string pair");
  return {parse_float(j.at(0).get<std::string>()), parse_float(j.at(1).get<std::string>())};
}

std::string branch_label(const QesSolution& s) {
  return s.branch_k >= 0 ? "k=" + std::to_string(s.branch_k) : "scan";
}

json solution_json(const QesSolution& s, const Rational& D) {
  json j;
  j["E_re"] = fmt(s.E.real(), s.precision_bits);
  j["E_im"] = fmt(s.E.imag(), s.precision_bits);
  j["F_re"] = fmt(s.F.real(), s.precision_bits);
  j["F_im"] = fmt(s.F.imag(), s.precision_bits);
  j["D"] = fmt(to_real<Float256>(D), s.precision_bits);
  json om = json::array();
  for (const auto& v : s.omega) om.push_back(complex_json(v, s.precision_bits));
  j["omega"] = std::move(om);
  j["residual_norm"] = fmt(s.residual_norm, s.precision_bits);
  j["real_flag"] = s.real_flag;
  j["branch"] = branch_label(s);
  j["indicial_shift"] = s.indicial_shift;
  j["kernel_dim"] = s.kernel_dim;
  j["method_tag"] = to_string(s.method);
  j["precision_bits"] = s.precision_bits;
  j["escalated"] = s.escalated;
  return j;
}

json parameters_json(const SolveParameters& p) {
  json j;
  j["N"] = p.N;
  j["precision_bits"] = p.precision_bits;
  j["strategy"] = p.strategy;
  j["model"] = {{"B", to_string(p.model.B)}, {"C", to_string(p.model.C)},
                {"D", to_string(p.model.D)}, {"F", to_string(p.model.F)},
                {"G", to_string(p.model.G)}, {"L", to_string(p.model.L)}};
  j["internal"] = {{"beta", to_string(p.internal.beta)},
                   {"gamma", to_string(p.internal.gamma)},
                   {"ell", to_string(p.internal.ell)},
                   {"ell_exact", p.internal.ell_exact}};
  return j;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

std::string omega_csv(const QesSolution& s) {
  std::string out;
  for (size_t i = 0; i < s.omega.size(); ++i) {
    if (i) out += ";";
    out += fmt(s.omega[i].real(), s.precision_bits) + "," + fmt(s.omega[i].imag(), s.precision_bits);
  }
  return out;
}

}  // namespace

std::string emit_json(const SolveDocument& doc) {
  json j;
  j["schema_version"] = "1";
  j["command"] = "solve";
  j["parameters"] = parameters_json(doc.params);
  const Rational D =
      d_coupling(doc.params.internal.ell, doc.params.internal.beta, doc.params.internal.gamma,
                 doc.params.N);
  json sols = json::array();
  for (const auto& s : doc.solutions) sols.push_back(solution_json(s, D));
  j["solutions"] = std::move(sols);
  j["warnings"] = doc.warnings;
  return j.dump(2) + "\n";
}

std::string emit_csv(const SolveDocument& doc) {
  const Rational D =
      d_coupling(doc.params.internal.ell, doc.params.internal.beta, doc.params.internal.gamma,
                 doc.params.N);
  std::ostringstream os;
  os << "E_re,E_im,F_re,F_im,D,residual_norm,real_flag,branch,indicial_shift,kernel_dim,"
        "method_tag,precision_bits,omega\n";
  for (const auto& s : doc.solutions) {
    os << fmt(s.E.real(), s.precision_bits) << "," << fmt(s.E.imag(), s.precision_bits) << ","
       << fmt(s.F.real(), s.precision_bits) << "," << fmt(s.F.imag(), s.precision_bits) << ","
       << fmt(to_real<Float256>(D), s.precision_bits) << ","
       << fmt(s.residual_norm, s.precision_bits) << "," << (s.real_flag ? "true" : "false") << ","
       << branch_label(s) << "," << s.indicial_shift << "," << s.kernel_dim << ","
       << to_string(s.method) << "," << s.precision_bits << "," << csv_quote(omega_csv(s)) << "\n";
  }
  return os.str();
}

SolveDocument parse_solve_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("ill-formed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  try {
    if (j.at("schema_version").get<std::string>() != "1")
      throw std::runtime_error("unsupported schema_version");
    SolveDocument doc;
    const json& p = j.at("parameters");
    doc.params.N = p.at("N").get<int>();
    doc.params.precision_bits = p.at("precision_bits").get<int>();
    doc.params.strategy = p.at("strategy").get<std::string>();
    const json& m = p.at("model");
    doc.params.model.B = parse_rational(m.at("B").get<std::string>());
    doc.params.model.C = parse_rational(m.at("C").get<std::string>());
    doc.params.model.D = parse_rational(m.at("D").get<std::string>());
    doc.params.model.F = parse_rational(m.at("F").get<std::string>());
    doc.params.model.G = parse_rational(m.at("G").get<std::string>());
    doc.params.model.L = parse_rational(m.at("L").get<std::string>());
    doc.params.model.N = doc.params.N;
    const json& in = p.at("internal");
    doc.params.internal.beta = parse_rational(in.at("beta").get<std::string>());
    doc.params.internal.gamma = parse_rational(in.at("gamma").get<std::string>());
    doc.params.internal.ell = parse_rational(in.at("ell").get<std::string>());
    doc.params.internal.ell_exact = in.at("ell_exact").get<bool>();

    for (const json& js : j.at("solutions")) {
      QesSolution s;
      s.E = {parse_float(js.at("E_re").get<std::string>()),
             parse_float(js.at("E_im").get<std::string>())};
      s.F = {parse_float(js.at("F_re").get<std::string>()),
             parse_float(js.at("F_im").get<std::string>())};
      for (const json& jo : js.at("omega")) s.omega.push_back(parse_complex(jo));
      s.residual_norm = parse_float(js.at("residual_norm").get<std::string>());
      s.real_flag = js.at("real_flag").get<bool>();
      s.indicial_shift = js.at("indicial_shift").get<int>();
      s.kernel_dim = js.value("kernel_dim", 1);
      s.precision_bits = js.at("precision_bits").get<int>();
      s.escalated = js.value("escalated", false);
      const std::string branch = js.at("branch").get<std::string>();
      s.branch_k = branch.rfind("k=", 0) == 0 ? std::stoi(branch.substr(2)) : -1;
      const auto method = method_from_string(js.at("method_tag").get<std::string>());
      if (!method) throw std::runtime_error("unknown method_tag");
      s.method = *method;
      doc.solutions.push_back(std::move(s));
    }
    if (j.contains("warnings"))
      doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    return doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("solve record missing or mistyped field: ") + e.what());
  }
}

std::string emit_json(const AsymptoticDocument& doc) {
  json j;
  j["schema_version"] = "1";
  j["command"] = "asymptotic";
  j["parameters"]["N"] = doc.N;
  if (doc.ell) {
    j["parameters"]["ell"] = to_string(*doc.ell);
    j["parameters"]["beta"] = to_string(*doc.beta);
    j["parameters"]["gamma"] = to_string(*doc.gamma);
  }
  json ms = json::array();
  for (size_t i = 0; i < doc.multiplets.size(); ++i) {
    const auto& m = doc.multiplets[i];
    json jm;
    jm["k"] = m.k;
    jm["t"] = m.t;
    json h = json::array();
    for (const auto& v : m.h) h.push_back(to_string(v));
    jm["h"] = std::move(h);
    if (i < doc.spectra.size()) {
      jm["E"] = real_to_string(doc.spectra[i].first, 37);
      jm["F"] = real_to_string(doc.spectra[i].second, 37);
    }
    ms.push_back(std::move(jm));
  }
  j["multiplets"] = std::move(ms);
  return j.dump(2) + "\n";
}

std::string emit_csv(const AsymptoticDocument& doc) {
  std::ostringstream os;
  os << "k,t,E,F,h\n";
  for (size_t i = 0; i < doc.multiplets.size(); ++i) {
    const auto& m = doc.multiplets[i];
    os << m.k << "," << m.t << ",";
    if (i < doc.spectra.size())
      os << real_to_string(doc.spectra[i].first, 37) << ","
         << real_to_string(doc.spectra[i].second, 37);
    else
      os << ",";
    std::string h;
    for (size_t n = 0; n < m.h.size(); ++n) {
      if (n) h += ";";
      h += to_string(m.h[n]);
    }
    os << "," << csv_quote(h) << "\n";
  }
  return os.str();
}

std::string emit_json(const SweepDocument& doc) {
  const int bits = doc.record.precision_bits;
  json j;
  j["schema_version"] = "1";
  j["command"] = "sweep";
  j["parameters"] = {{"N", doc.record.N},
                     {"k", doc.record.k},
                     {"beta", to_string(doc.beta)},
                     {"gamma", to_string(doc.gamma)},
                     {"precision_bits", bits}};
  json pts = json::array();
  for (const auto& p : doc.record.points) {
    json jp;
    jp["ell"] = fmt(p.ell, bits);
    jp["E_re"] = fmt(p.E.real(), bits);
    jp["E_im"] = fmt(p.E.imag(), bits);
    jp["F_re"] = fmt(p.F.real(), bits);
    jp["F_im"] = fmt(p.F.imag(), bits);
    jp["s_re"] = fmt(p.s.real(), bits);
    jp["s_im"] = fmt(p.s.imag(), bits);
    jp["t_re"] = fmt(p.t.real(), bits);
    jp["t_im"] = fmt(p.t.imag(), bits);
    jp["residual_norm"] = fmt(p.residual_norm, bits);
    json om = json::array();
    for (const auto& v : p.omega) om.push_back(complex_json(v, bits));
    jp["omega"] = std::move(om);
    pts.push_back(std::move(jp));
  }
  j["records"] = std::move(pts);
  j["footer"]["complete"] = doc.record.complete;
  if (doc.record.fitted_exponent)
    j["footer"]["fitted_exponent"] = *doc.record.fitted_exponent;
  else
    j["footer"]["fitted_exponent"] = nullptr;
  return j.dump(2) + "\n";
}

std::string emit_csv(const SweepDocument& doc) {
  const int bits = doc.record.precision_bits;
  std::ostringstream os;
  os << "ell,E_re,E_im,F_re,F_im,s_re,s_im,t_re,t_im,residual_norm\n";
  for (const auto& p : doc.record.points) {
    os << fmt(p.ell, bits) << "," << fmt(p.E.real(), bits) << "," << fmt(p.E.imag(), bits) << ","
       << fmt(p.F.real(), bits) << "," << fmt(p.F.imag(), bits) << "," << fmt(p.s.real(), bits)
       << "," << fmt(p.s.imag(), bits) << "," << fmt(p.t.real(), bits) << ","
       << fmt(p.t.imag(), bits) << "," << fmt(p.residual_norm, bits) << "\n";
  }
  os << "# complete=" << (doc.record.complete ? "true" : "false") << "\n";
  if (doc.record.fitted_exponent) os << "# fitted_exponent=" << *doc.record.fitted_exponent << "\n";
  return os.str();
}

}  // namespace qes
