// Copyright 2026 The polysubreg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBREG_REPORT_HPP_
#define SUBREG_REPORT_HPP_

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "subreg/analyze.hpp"
#include "subreg/catalog.hpp"
#include "subreg/instance_io.hpp"

#ifndef SUBREG_VERSION
#define SUBREG_VERSION "0.1.0"
#endif

namespace subreg {

using ojson = nlohmann::ordered_json;

enum class Format { kJson, kText };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "text") return Format::kText;
  fail(ErrorCode::kInvalidArgument, "format must be json or text, got '" + s + "'");
}

/// +∞ as the string "inf", NaN (unavailable) as null, finite as a number.
inline ojson encode_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline double decode_number(const ojson& j) {
  if (j.is_null()) return kNaN;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    fail(ErrorCode::kParse, "unexpected numeric string '" + s + "'");
  }
  return j.get<double>();
}

inline ojson encode_array(const std::vector<double>& v) {
  ojson a = ojson::array();
  for (double x : v) a.push_back(encode_number(x));
  return a;
}

inline std::vector<double> decode_array(const ojson& j) {
  std::vector<double> v;
  for (const auto& x : j) v.push_back(decode_number(x));
  return v;
}

namespace detail {

inline void dump17(const ojson& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + ojson(it.key()).dump() + ": ";
        dump17(it.value(), out, indent, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool scalars = true;
      for (const auto& x : j) scalars = scalars && !x.is_structured();
      if (scalars) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump17(j[i], out, indent, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump17(j[i], out, indent, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case ojson::value_t::number_float: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      std::string s = buf;
      if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
      out += s;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// JSON text with every double printed to 17 significant digits.
inline std::string dump17(const ojson& j, int indent = 2) {
  std::string out;
  detail::dump17(j, out, indent, 0);
  return out;
}

inline ojson quantity_json(double value, Method method, const std::vector<double>& curve) {
  ojson q;
  q["value"] = encode_number(value);
  q["method"] = to_string(method);
  q["curve"] = encode_array(curve);
  return q;
}

inline ojson analysis_to_json(const Analysis& a) {
  const ModulusReport& m = a.modulus;
  const StrongReport& s = a.strong;
  ojson j;
  j["tool"] = "subreg";
  j["version"] = SUBREG_VERSION;
  j["name"] = m.name;
  j["seed"] = m.seed;
  j["n_samples"] = m.n_samples;
  j["norm"] = m.norm;
  j["delta_schedule"] = encode_array(m.delta_schedule);
  ojson q;
  q["subreg_est"] = quantity_json(m.subreg_est, m.subreg_method, m.subreg_curve);
  q["eta"] = quantity_json(m.eta, m.eta_method, m.eta_curve);
  q["eta"]["degenerate"] = m.degenerate;
  q["tau"] = quantity_json(m.tau, m.tau_method, m.tau_curve);
  q["bcq_tau"] = quantity_json(m.bcq_tau, m.bcq_method, m.bcq_curve);
  j["quantities"] = q;
  j["chain_residual"] = encode_number(m.chain_residual);
  ojson st;
  st["ssubreg_est"] = encode_number(s.ssubreg_est);
  st["ssubreg_curve"] = encode_array(s.ssubreg_curve);
  st["eta_strong"] = encode_number(s.eta_strong);
  st["eta_strong_method"] = to_string(s.eta_strong_method);
  st["kernel_trivial"] = s.kernel_trivial;
  st["singleton"] = s.singleton;
  j["strong"] = st;
  ojson c;
  c["applicable"] = a.conical.applicable;
  c["locally_conical"] = a.conical.locally_conical;
  c["eta_at_xbar"] = encode_number(a.conical.eta_at_xbar);
  c["at_cap"] = a.conical.at_cap;
  j["conical"] = c;
  ojson t;
  t["tol_lp"] = tol::kLp;
  t["tol_active"] = tol::kActive;
  t["tol_bisect"] = kTolBisect;
  t["eps_grid"] = kEpsGrid;
  t["eta_cap"] = kEtaCap;
  t["tau_cap"] = kTauCap;
  j["tolerances"] = t;
  return j;
}

inline Method parse_method(const std::string& s) {
  if (s == "exact") return Method::kExact;
  if (s == "sampled") return Method::kSampled;
  if (s == "unavailable") return Method::kUnavailable;
  fail(ErrorCode::kParse, "unknown method tag '" + s + "'");
}

/// Inverse of analysis_to_json on every field it writes.
inline Analysis analysis_from_json(const ojson& j) {
  Analysis a;
  ModulusReport& m = a.modulus;
  m.name = j.at("name").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.n_samples = j.at("n_samples").get<int>();
  m.norm = j.at("norm").get<std::string>();
  m.delta_schedule = decode_array(j.at("delta_schedule"));
  const ojson& q = j.at("quantities");
  auto read = [&](const char* key, double& v, Method& meth, std::vector<double>& curve) {
    const ojson& e = q.at(key);
    v = decode_number(e.at("value"));
    meth = parse_method(e.at("method").get<std::string>());
    curve = decode_array(e.at("curve"));
  };
  read("subreg_est", m.subreg_est, m.subreg_method, m.subreg_curve);
  read("eta", m.eta, m.eta_method, m.eta_curve);
  m.degenerate = q.at("eta").at("degenerate").get<bool>();
  read("tau", m.tau, m.tau_method, m.tau_curve);
  read("bcq_tau", m.bcq_tau, m.bcq_method, m.bcq_curve);
  m.chain_residual = decode_number(j.at("chain_residual"));
  const ojson& st = j.at("strong");
  a.strong.ssubreg_est = decode_number(st.at("ssubreg_est"));
  a.strong.ssubreg_curve = decode_array(st.at("ssubreg_curve"));
  a.strong.eta_strong = decode_number(st.at("eta_strong"));
  a.strong.eta_strong_method = parse_method(st.at("eta_strong_method").get<std::string>());
  a.strong.kernel_trivial = st.at("kernel_trivial").get<bool>();
  a.strong.singleton = st.at("singleton").get<bool>();
  const ojson& c = j.at("conical");
  a.conical.applicable = c.at("applicable").get<bool>();
  a.conical.locally_conical = c.at("locally_conical").get<bool>();
  a.conical.eta_at_xbar = decode_number(c.at("eta_at_xbar"));
  a.conical.at_cap = c.at("at_cap").get<bool>();
  return a;
}

inline ojson catalog_to_json(const CatalogReport& r) {
  ojson j;
  j["tool"] = "subreg";
  j["version"] = SUBREG_VERSION;
  j["catalog"] = r.id;
  j["expected"] = r.expected_subregular ? "subregular" : "not_subregular";
  j["seed"] = r.seed;
  j["n_samples"] = r.n_samples;
  j["delta_schedule"] = encode_array(r.delta_schedule);
  j["subreg_curve"] = encode_array(r.subreg_curve);
  j["ssubreg_curve"] = encode_array(r.ssubreg_curve);
  j["tau_sampled"] = encode_number(r.tau_sampled);
  j["eta_sampled"] = encode_number(r.eta_sampled);
  j["eta_exact"] = encode_number(r.eta_exact);
  j["kernel_trivial"] = r.kernel_trivial ? ojson(*r.kernel_trivial) : ojson(nullptr);
  j["probes_ok"] = r.probes_ok;
  j["stable"] = r.stable;
  return j;
}

namespace detail {

inline std::string cell(double v) {
  if (std::isnan(v)) return "n/a";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string fixed(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

inline std::string row(const std::string& name, const std::string& method, double value,
                       const std::vector<double>& curve) {
  std::string line = fixed(name, 14) + fixed(method, 12) + fixed(cell(value), 14);
  for (double c : curve) line += fixed(cell(c), 14);
  return line + "\n";
}

}  // namespace detail

/// Fixed-width table, one row per quantity.
inline std::string analysis_to_text(const Analysis& a) {
  using detail::row;
  const ModulusReport& m = a.modulus;
  std::string out = "instance " + m.name + "  norm " + m.norm + "  seed " +
                    std::to_string(m.seed) + "  samples " + std::to_string(m.n_samples) + "\n";
  std::string head = detail::fixed("quantity", 14) + detail::fixed("method", 12) +
                     detail::fixed("value", 14);
  for (double d : m.delta_schedule) head += detail::fixed("d=" + detail::cell(d), 14);
  out += head + "\n";
  out += row("subreg_est", to_string(m.subreg_method), m.subreg_est, m.subreg_curve);
  out += row("eta", to_string(m.eta_method), m.eta, m.eta_curve);
  out += row("tau", to_string(m.tau_method), m.tau, m.tau_curve);
  out += row("bcq_tau", to_string(m.bcq_method), m.bcq_tau, m.bcq_curve);
  out += row("chain_resid", "", m.chain_residual, {});
  out += row("ssubreg_est", "sampled", a.strong.ssubreg_est, a.strong.ssubreg_curve);
  out += row("eta_strong", to_string(a.strong.eta_strong_method), a.strong.eta_strong, {});
  out += detail::fixed("kernel_triv", 14) + (a.strong.kernel_trivial ? "true" : "false") + "\n";
  out += detail::fixed("singleton", 14) + (a.strong.singleton ? "true" : "false") + "\n";
  out += detail::fixed("conical", 14) + (a.conical.applicable ? "true" : "false") + "\n";
  if (m.degenerate) out += "note: eta reached the cap " + detail::cell(kEtaCap) + "\n";
  return out;
}

inline std::string catalog_to_text(const CatalogReport& r) {
  std::string out = "catalog " + r.id + "  expected " +
                    (r.expected_subregular ? "subregular" : "not_subregular") + "\n";
  std::string head = detail::fixed("quantity", 14) + detail::fixed("method", 12) +
                     detail::fixed("value", 14);
  for (double d : r.delta_schedule) head += detail::fixed("d=" + detail::cell(d), 14);
  out += head + "\n";
  out += detail::row("subreg_est", "sampled", r.subreg_curve.back(), r.subreg_curve);
  out += detail::row("ssubreg_est", "sampled", r.ssubreg_curve.back(), r.ssubreg_curve);
  out += detail::row("tau", "sampled", r.tau_sampled, {});
  out += detail::row("eta", "sampled", r.eta_sampled, {});
  if (!std::isnan(r.eta_exact)) out += detail::row("eta", "exact", r.eta_exact, {});
  out += detail::fixed("stable", 14) + (r.stable ? "true" : "false") + "\n";
  out += detail::fixed("probes_ok", 14) + (r.probes_ok ? "true" : "false") + "\n";
  return out;
}

inline std::string render(const std::vector<Analysis>& reports, Format fmt) {
  if (fmt == Format::kText) {
    std::string out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out += "\n";
      out += analysis_to_text(reports[i]);
    }
    return out;
  }
  ojson arr = ojson::array();
  for (const auto& r : reports) arr.push_back(analysis_to_json(r));
  return dump17(arr) + "\n";
}

/// Writes to `path` atomically, or to stdout when the path is empty or "-".
inline void emit_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!std::cout) fail(ErrorCode::kIo, "write to stdout failed");
    return;
  }
  write_atomically(path, text);
}

inline void emit_report(const std::vector<Analysis>& reports, Format fmt, const std::string& path) {
  emit_text(render(reports, fmt), path);
}

}  // namespace subreg

#endif  // SUBREG_REPORT_HPP_
