#include "tlq/serialize.hpp"

#include "tlq/errors.hpp"

namespace tlq {

Json to_json(const TLMorphism& f) {
  Json terms = Json::array();
  for (const auto& [d, c] : f.terms()) {
    terms.push_back({{"matching", d.export_matching()}, {"coefficient", c.to_string()}});
  }
  return {{"inputs", f.inputs()}, {"outputs", f.outputs()}, {"terms", terms}};
}

Json to_json(const TensorVector& v) {
  Json comps = Json::object();
  for (const auto& [x, c] : v.components()) comps[bitstring(x, v.rank())] = c.to_string();
  return {{"rank", v.rank()}, {"components", comps}};
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json to_json_repmap(const RepMap& m) {
  auto log2 = [](int n) {
    int k = 0;
    while ((1 << k) < n) ++k;
    return k;
  };
  return {{"source_rank", log2(m.cols())}, {"target_rank", log2(m.rows())}, {"entries", to_json(m)}};
}

Json to_json(const FunctorReport& r) {
  return {{"source", r.source.to_string()},
          {"target", r.target.to_string()},
          {"mode", r.mode.to_string()},
          {"dim_diagram_side", r.dim_diagram_side},
          {"dim_rep_side", r.dim_rep_side},
          {"matrix_rank", r.matrix_rank},
          {"verdict", r.iso ? "iso" : "not-iso"}};
}

Matrix matrix_from_json(const Json& j, const Field& field) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw ParseError("ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const Json& e = row[static_cast<std::size_t>(c)];
      if (!e.is_string()) throw ParseError("matrix entries must be strings");
      m(i, c) = field.parse_scalar(e.get<std::string>());
    }
  }
  return m;
}

}  // namespace tlq
