#include "conehodge/table_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace conehodge {

using nlohmann::json;

namespace {

[[noreturn]] void reject(const std::string& path, const std::string& what) {
  throw error(path + ": " + what);
}

std::int64_t require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) reject(path, "expected an integer");
  return j.get<std::int64_t>();
}

bool require_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) reject(path, "expected a boolean");
  return j.get<bool>();
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) reject(path, "expected a string");
  return j.get<std::string>();
}

const json& require_key(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) reject(path, "missing key '" + key + "'");
  return j.at(key);
}

Tail parse_tail(const json& j, const std::string& path) {
  const std::string type = require_string(require_key(j, "type", path), path + ".type");
  if (type == "zero") return Tail::zero();
  if (type == "poly") {
    const json& coeffs = require_key(j, "coeffs", path);
    if (!coeffs.is_array()) reject(path + ".coeffs", "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const std::string item = require_string(coeffs[i], path + ".coeffs[" + std::to_string(i) + "]");
      try {
        out.push_back(rational_from_string(item));
      } catch (const error& e) {
        reject(path + ".coeffs[" + std::to_string(i) + "]", e.what());
      }
    }
    return Tail::polynomial(Polynomial(std::move(out)));
  }
  reject(path + ".type", "unknown tail type '" + type + "'");
}

json tail_to_json(const Tail& tail) {
  json out;
  if (tail.kind == Tail::Kind::Zero) {
    out["type"] = "zero";
  } else {
    out["type"] = "poly";
    json coeffs = json::array();
    for (const auto& c : tail.poly.coeffs()) coeffs.push_back(rational_to_string(c));
    out["coeffs"] = std::move(coeffs);
  }
  return out;
}

GradedDimension parse_graded(const json& j, const std::string& path) {
  GradedDimension g;
  g.window_lo = static_cast<int>(require_int(require_key(j, "window_lo", path), path + ".window_lo"));
  g.window_hi = static_cast<int>(require_int(require_key(j, "window_hi", path), path + ".window_hi"));
  if (g.window_lo > g.window_hi) reject(path, "window_lo > window_hi");
  const json& values = require_key(j, "values", path);
  if (!values.is_object()) reject(path + ".values", "expected an object");
  for (const auto& [key, value] : values.items()) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      reject(path + ".values." + key, "key is not an integer");
    }
    const std::int64_t v = require_int(value, path + ".values." + key);
    if (v < 0) reject(path + ".values." + key, "negative dimension " + std::to_string(v));
    if (m < g.window_lo || m > g.window_hi) {
      reject(path + ".values." + key, "m outside the declared window");
    }
    g.values[m] = v;
  }
  if (j.contains("pos_tail")) g.pos_tail = parse_tail(j.at("pos_tail"), path + ".pos_tail");
  if (j.contains("neg_tail")) g.neg_tail = parse_tail(j.at("neg_tail"), path + ".neg_tail");
  return g;
}

json graded_to_json(const GradedDimension& g) {
  json out;
  out["window_lo"] = g.window_lo;
  out["window_hi"] = g.window_hi;
  json values = json::object();
  for (const auto& [m, v] : g.values) values[std::to_string(m)] = v;
  out["values"] = std::move(values);
  if (g.pos_tail.declared()) out["pos_tail"] = tail_to_json(g.pos_tail);
  if (g.neg_tail.declared()) out["neg_tail"] = tail_to_json(g.neg_tail);
  return out;
}

}  // namespace

LoadedTable load_table(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw error(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw error("$: expected a JSON object");

  LoadedTable out;
  HodgeDuBoisTable& table = out.table;
  table.name = require_string(require_key(root, "name", "$"), "$.name");
  table.n = static_cast<int>(require_int(require_key(root, "dim", "$"), "$.dim"));
  if (table.n < 0) reject("$.dim", "negative dimension");
  table.smooth = require_bool(require_key(root, "smooth", "$"), "$.smooth");
  table.seminormal = require_bool(require_key(root, "seminormal", "$"), "$.seminormal");
  table.lcdef_x = static_cast<int>(require_int(require_key(root, "lcdef", "$"), "$.lcdef"));
  if (table.lcdef_x < 0 || table.lcdef_x > table.n) {
    reject("$.lcdef", "lcdef must satisfy 0 <= lcdef <= dim");
  }

  if (root.contains("betti")) {
    const json& betti = root.at("betti");
    if (!betti.is_array()) reject("$.betti", "expected an array");
    if (static_cast<int>(betti.size()) != 2 * table.n + 1) {
      reject("$.betti", "expected 2*dim+1 = " + std::to_string(2 * table.n + 1) + " entries");
    }
    std::vector<std::int64_t> b;
    for (std::size_t i = 0; i < betti.size(); ++i) {
      const std::int64_t v = require_int(betti[i], "$.betti[" + std::to_string(i) + "]");
      if (v < 0) reject("$.betti[" + std::to_string(i) + "]", "negative Betti number");
      b.push_back(v);
    }
    table.betti = std::move(b);
  }

  if (root.contains("coordinate_ring")) {
    table.coordinate_ring = parse_graded(root.at("coordinate_ring"), "$.coordinate_ring");
  }

  const json& hodge = require_key(root, "hodge", "$");
  if (!hodge.is_array()) reject("$.hodge", "expected an array");
  for (std::size_t i = 0; i < hodge.size(); ++i) {
    const std::string path = "$.hodge[" + std::to_string(i) + "]";
    const json& item = hodge[i];
    const int p = static_cast<int>(require_int(require_key(item, "p", path), path + ".p"));
    const int q = static_cast<int>(require_int(require_key(item, "q", path), path + ".q"));
    if (p < 0 || p > table.n || q < 0 || q > table.n) reject(path, "(p, q) outside [0, dim]^2");
    if (table.entries.count({p, q})) reject(path, "duplicate entry for this (p, q)");
    table.entries[{p, q}] = parse_graded(item, path);
  }
  for (int p = 0; p <= table.n; ++p) {
    for (int q = 0; q <= table.n; ++q) {
      if (!table.entries.count({p, q})) {
        reject("$.hodge", "missing entry for (p, q) = (" + std::to_string(p) + ", " +
                              std::to_string(q) + ")");
      }
    }
  }

  if (root.contains("lefschetz")) {
    const json& blocks = root.at("lefschetz");
    if (!blocks.is_array()) reject("$.lefschetz", "expected an array");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string path = "$.lefschetz[" + std::to_string(i) + "]";
      const json& item = blocks[i];
      const int p = static_cast<int>(require_int(require_key(item, "p", path), path + ".p"));
      const int q = static_cast<int>(require_int(require_key(item, "q", path), path + ".q"));
      if (p < 0 || p > table.n - 1 || q < 0 || q > table.n - 1) {
        reject(path, "(p, q) outside [0, dim-1]^2");
      }
      if (out.lefschetz.matrices.count({p, q})) reject(path, "duplicate block for this (p, q)");
      const json& rows = require_key(item, "matrix", path);
      if (!rows.is_array()) reject(path + ".matrix", "expected an array of rows");
      const std::int64_t target = table.dim(p + 1, q + 1, 0);
      const std::int64_t source = table.dim(p, q, 0);
      if (static_cast<std::int64_t>(rows.size()) != target) {
        reject(path + ".matrix", "expected " + std::to_string(target) + " rows (the untwisted "
                                 "target dimension), got " + std::to_string(rows.size()));
      }
      RationalMatrix matrix(static_cast<std::size_t>(target), static_cast<std::size_t>(source));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const std::string row_path = path + ".matrix[" + std::to_string(r) + "]";
        if (!rows[r].is_array() || static_cast<std::int64_t>(rows[r].size()) != source) {
          reject(row_path, "expected " + std::to_string(source) + " entries");
        }
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          const std::string cell_path = row_path + "[" + std::to_string(c) + "]";
          const std::string text = require_string(rows[r][c], cell_path);
          try {
            matrix.at(r, c) = rational_from_string(text);
          } catch (const error& e) {
            reject(cell_path, e.what());
          }
        }
      }
      out.lefschetz.matrices[{p, q}] = std::move(matrix);
    }
  }

  out.report = validate_table(table);
  ValidationReport op_report = validate_operator(table, out.lefschetz);
  out.report.insert(out.report.end(), op_report.begin(), op_report.end());
  return out;
}

std::string save_table(const HodgeDuBoisTable& table, const LefschetzOperator& op) {
  json root;
  root["name"] = table.name;
  root["dim"] = table.n;
  root["smooth"] = table.smooth;
  root["seminormal"] = table.seminormal;
  root["lcdef"] = table.lcdef_x;
  if (table.betti) root["betti"] = *table.betti;
  if (table.coordinate_ring) root["coordinate_ring"] = graded_to_json(*table.coordinate_ring);

  json hodge = json::array();
  for (const auto& [key, graded] : table.entries) {
    json item = graded_to_json(graded);
    item["p"] = key.first;
    item["q"] = key.second;
    hodge.push_back(std::move(item));
  }
  root["hodge"] = std::move(hodge);

  if (!op.matrices.empty()) {
    json blocks = json::array();
    for (const auto& [key, matrix] : op.matrices) {
      json item;
      item["p"] = key.first;
      item["q"] = key.second;
      json rows = json::array();
      for (std::size_t r = 0; r < matrix.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
          row.push_back(rational_to_string(matrix.at(r, c)));
        }
        rows.push_back(std::move(row));
      }
      item["matrix"] = std::move(rows);
      blocks.push_back(std::move(item));
    }
    root["lefschetz"] = std::move(blocks);
  }
  return root.dump(2) + "\n";
}

LoadedTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_table(buffer.str());
}

void save_table_file(const std::string& path, const HodgeDuBoisTable& table,
                     const LefschetzOperator& op) {
  std::ofstream outfile(path);
  if (!outfile) throw error("cannot open '" + path + "' for writing");
  outfile << save_table(table, op);
}

}  // namespace conehodge
