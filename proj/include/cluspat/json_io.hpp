#ifndef CLUSPAT_JSON_IO_HPP
#define CLUSPAT_JSON_IO_HPP

#include <json.hpp>

#include "cluspat/pattern.hpp"
#include "cluspat/semifield.hpp"

namespace cluspat {

// {"rows": n, "cols": n, "entries": [[...], ...]}; entries are JSON numbers
// while |v| < 2^53 and decimal strings beyond.
nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);

// Accepts either the object form above or a bare [[...], ...] array.
IntMatrix matrix_from_json_flexible(const nlohmann::json& j);

// [{"exp": [...], "coef": "..."}, ...] sorted leading term first.
nlohmann::json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const VarSet& vars, const nlohmann::json& j);

// {"walk": [...], "B_t": ..., "C": ..., "G": ..., "F": ..., "fpolys": [...],
//  "H": ...}
nlohmann::json node_to_json(const PatternNode& node);

}  // namespace cluspat

#endif
