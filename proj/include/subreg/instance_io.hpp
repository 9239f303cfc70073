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

#ifndef SUBREG_INSTANCE_IO_HPP_
#define SUBREG_INSTANCE_IO_HPP_

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "subreg/constraint_system.hpp"

namespace subreg {

/// The on-disk description of a system. Absent matrices mean no rows.
struct InstanceFile {
  std::string name;
  Eigen::Index nx = 0;
  Eigen::Index ny = 0;
  Mat graph_ineq;
  Vec graph_rhs;
  Mat graph_eq;
  Vec graph_eq_rhs;
  Mat A_ineq;
  Vec A_rhs;
  Mat A_eq;
  Vec A_eq_rhs;
  Vec xbar;
  Vec ybar;
  std::string norm = "linf";

  ConstraintSystem to_system() const {
    const PolyNorm nm = PolyNorm::parse(norm);
    auto poly = [](const Mat& g, const Vec& b, const Mat& e, const Vec& eb, const char* what) {
      try {
        return Polyhedron(g, b, e, eb);
      } catch (const Error& err) {
        fail(ErrorCode::kInvalidInstance, std::string(what) + ": " + err.what());
      }
    };
    return ConstraintSystem::create(poly(graph_ineq, graph_rhs, graph_eq, graph_eq_rhs, "graph"),
                                    poly(A_ineq, A_rhs, A_eq, A_eq_rhs, "A"), xbar, ybar, nm, nm,
                                    name);
  }
};

namespace detail {

using nlohmann::json;

inline Vec json_vec(const json& j, const std::string& key) {
  if (!j.contains(key) || j[key].is_null()) return Vec(0);
  const json& a = j[key];
  if (!a.is_array()) fail(ErrorCode::kParse, key + " must be an array of numbers");
  Vec v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) fail(ErrorCode::kParse, key + "[" + std::to_string(i) + "] is not a number");
    v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  }
  return v;
}

inline int line_of(const std::string& text, std::size_t byte) {
  return 1 + static_cast<int>(std::count(text.begin(),
                                         text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size())),
                                         '\n'));
}

/// Line of row `row` of the matrix stored under `key`, 0 when not found.
/// A bracket scan over the raw text; strings inside matrices do not occur
/// in valid files, so quotes are only honored for the key itself.
inline int locate_row(const std::string* text, const std::string& key, std::size_t row) {
  if (!text) return 0;
  const std::size_t k = text->find("\"" + key + "\"");
  if (k == std::string::npos) return 0;
  std::size_t pos = text->find('[', k);
  if (pos == std::string::npos) return 0;
  int depth = 0;
  std::size_t seen = 0;
  for (; pos < text->size(); ++pos) {
    const char c = (*text)[pos];
    if (c == '[') {
      ++depth;
      if (depth == 2 && seen++ == row) return line_of(*text, pos);
    } else if (c == ']') {
      if (--depth == 0) break;
    } else if (depth == 1 && c != ',' && !std::isspace(static_cast<unsigned char>(c))) {
      if (seen++ == row) return line_of(*text, pos);
    }
  }
  return 0;
}

inline Mat json_mat(const json& j, const std::string& key, Eigen::Index cols,
                    const std::string* text = nullptr) {
  if (!j.contains(key) || j[key].is_null()) return Mat(0, cols);
  const json& a = j[key];
  if (!a.is_array()) fail(ErrorCode::kParse, key + " must be an array of rows");
  Mat m(static_cast<Eigen::Index>(a.size()), cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const json& row = a[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      const int line = locate_row(text, key, i);
      fail(ErrorCode::kParse, (line ? "line " + std::to_string(line) + ": " : std::string()) +
                                  key + " row " + std::to_string(i) + " has " +
                                  std::to_string(row.is_array() ? row.size() : 0) +
                                  " entries, expected " + std::to_string(cols));
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_number()) {
        fail(ErrorCode::kParse, key + " row " + std::to_string(i) + " entry " +
                                    std::to_string(k) + " is not a number");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = row[k].get<double>();
    }
  }
  return m;
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline json to_json(const Mat& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(to_json(Vec(m.row(i).transpose())));
  return a;
}

inline json parse_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, origin + ": line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace detail

inline InstanceFile instance_from_json(const nlohmann::json& j,
                                       const std::string* text = nullptr) {
  using detail::json_mat;
  using detail::json_vec;
  if (!j.is_object()) fail(ErrorCode::kParse, "instance must be a JSON object");
  InstanceFile f;
  if (!j.contains("nx") || !j["nx"].is_number_integer() || !j.contains("ny") ||
      !j["ny"].is_number_integer()) {
    fail(ErrorCode::kParse, "nx and ny must be integers");
  }
  f.nx = j["nx"].get<Eigen::Index>();
  f.ny = j["ny"].get<Eigen::Index>();
  if (f.nx < 1 || f.ny < 1) fail(ErrorCode::kInvalidInstance, "nx and ny must be positive");
  f.name = j.value("name", std::string());
  f.norm = j.value("norm", std::string("linf"));
  f.graph_ineq = json_mat(j, "graph_ineq", f.nx + f.ny, text);
  f.graph_rhs = json_vec(j, "graph_rhs");
  f.graph_eq = json_mat(j, "graph_eq", f.nx + f.ny, text);
  f.graph_eq_rhs = json_vec(j, "graph_eq_rhs");
  f.A_ineq = json_mat(j, "A_ineq", f.nx, text);
  f.A_rhs = json_vec(j, "A_rhs");
  f.A_eq = json_mat(j, "A_eq", f.nx, text);
  f.A_eq_rhs = json_vec(j, "A_eq_rhs");
  f.xbar = j.contains("xbar") ? json_vec(j, "xbar") : Vec(Vec::Zero(f.nx));
  f.ybar = j.contains("ybar") ? json_vec(j, "ybar") : Vec(Vec::Zero(f.ny));
  auto check_len = [](Eigen::Index got, Eigen::Index want, const char* what) {
    if (got != want) {
      fail(ErrorCode::kParse, std::string(what) + " has length " + std::to_string(got) +
                                  ", expected " + std::to_string(want));
    }
  };
  check_len(f.graph_rhs.size(), f.graph_ineq.rows(), "graph_rhs");
  check_len(f.graph_eq_rhs.size(), f.graph_eq.rows(), "graph_eq_rhs");
  check_len(f.A_rhs.size(), f.A_ineq.rows(), "A_rhs");
  check_len(f.A_eq_rhs.size(), f.A_eq.rows(), "A_eq_rhs");
  check_len(f.xbar.size(), f.nx, "xbar");
  check_len(f.ybar.size(), f.ny, "ybar");
  if (f.norm != "linf" && f.norm != "l1") {
    fail(ErrorCode::kParse, "norm must be \"linf\" or \"l1\", got \"" + f.norm + "\"");
  }
  return f;
}

inline nlohmann::json instance_to_json(const InstanceFile& f) {
  using detail::to_json;
  nlohmann::json j;
  j["name"] = f.name;
  j["nx"] = f.nx;
  j["ny"] = f.ny;
  j["graph_ineq"] = to_json(f.graph_ineq);
  j["graph_rhs"] = to_json(f.graph_rhs);
  if (f.graph_eq.rows() > 0) {
    j["graph_eq"] = to_json(f.graph_eq);
    j["graph_eq_rhs"] = to_json(f.graph_eq_rhs);
  }
  j["A_ineq"] = to_json(f.A_ineq);
  j["A_rhs"] = to_json(f.A_rhs);
  if (f.A_eq.rows() > 0) {
    j["A_eq"] = to_json(f.A_eq);
    j["A_eq_rhs"] = to_json(f.A_eq_rhs);
  }
  j["xbar"] = to_json(f.xbar);
  j["ybar"] = to_json(f.ybar);
  j["norm"] = f.norm;
  return j;
}

inline InstanceFile parse_instance(const std::string& text, const std::string& origin = "<string>") {
  const nlohmann::json j = detail::parse_text(text, origin);
  try {
    return instance_from_json(j, &text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse || origin == "<string>") throw;
    const std::string msg = e.what();
    const std::string prefix = std::string(to_string(e.code())) + ": ";
    fail(ErrorCode::kParse, origin + ": " + (msg.rfind(prefix, 0) == 0 ? msg.substr(prefix.size()) : msg));
  }
}

inline InstanceFile read_instance(const std::string& path) {
  InstanceFile f = parse_instance(detail::read_file(path), path);
  if (f.name.empty()) f.name = std::filesystem::path(path).stem().string();
  return f;
}

inline ConstraintSystem load_instance(const std::string& path) {
  return read_instance(path).to_system();
}

/// Writes through a temporary file in the same directory, then renames.
inline void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::kIo, "cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) fail(ErrorCode::kIo, "write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(ErrorCode::kIo, "cannot rename onto " + path);
  }
}

inline void write_instance(const InstanceFile& f, const std::string& path) {
  write_atomically(path, instance_to_json(f).dump(2) + "\n");
}

}  // namespace subreg

#endif  // SUBREG_INSTANCE_IO_HPP_
