#include "cluspat/json_io.hpp"

namespace cluspat {

namespace {

const BigInt kJsonSafeMax = (BigInt(1) << 53) - 1;

nlohmann::json entry_to_json(const BigInt& v) {
  if (v <= kJsonSafeMax && -v <= kJsonSafeMax) return nlohmann::json(v.get_si());
  return nlohmann::json(v.get_str());
}

BigInt entry_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidArgument("matrix entry must be an integer or a decimal string");
}

}  // namespace

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw InvalidArgument("matrix JSON must carry rows/cols/entries");
  const auto& entries = j.at("entries");
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  if (static_cast<int>(entries.size()) != rows)
    throw InvalidArgument("matrix JSON: row count mismatch");
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[i].size()) != cols)
      throw InvalidArgument("matrix JSON: column count mismatch");
    for (int c = 0; c < cols; ++c) m(i, c) = entry_from_json(entries[i][c]);
  }
  return m;
}

IntMatrix matrix_from_json_flexible(const nlohmann::json& j) {
  if (j.is_object()) return matrix_from_json(j);
  if (!j.is_array()) throw InvalidArgument("matrix JSON must be an object or an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw InvalidArgument("matrix JSON: ragged rows");
    for (int c = 0; c < cols; ++c) m(i, c) = entry_from_json(j[i][c]);
  }
  return m;
}

nlohmann::json poly_to_json(const SparsePoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::json term;
    term["exp"] = it->first;
    term["coef"] = it->second.get_str();
    out.push_back(std::move(term));
  }
  return out;
}

SparsePoly poly_from_json(const VarSet& vars, const nlohmann::json& j) {
  SparsePoly p(vars);
  for (const auto& term : j) {
    SparsePoly::Exp e = term.at("exp").get<SparsePoly::Exp>();
    p.add_term(e, BigInt(term.at("coef").get<std::string>()));
  }
  return p;
}

nlohmann::json node_to_json(const PatternNode& node) {
  nlohmann::json fpolys = nlohmann::json::array();
  for (const auto& f : node.fpolys) fpolys.push_back(f.to_text());
  return nlohmann::json{{"walk", node.walk.labels},
                        {"B_t", matrix_to_json(node.b.matrix())},
                        {"C", matrix_to_json(node.c)},
                        {"G", matrix_to_json(node.g)},
                        {"F", matrix_to_json(node.f)},
                        {"fpolys", std::move(fpolys)},
                        {"H", matrix_to_json(h_matrix(node))}};
}

}  // namespace cluspat
