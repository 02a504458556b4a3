#include "skt/io.hpp"

#include <json.hpp>

namespace skt {

using nlohmann::json;

namespace {

Mat parse_matrix(const json& arr, int n, const char* what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != n)
    throw InputError(std::string(what) + ": expected " + std::to_string(n) + " rows");
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = arr[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError(std::string(what) + ": bad row length");
    for (int j = 0; j < n; ++j) m(i, j) = row[j].get<double>();
  }
  if (!all_finite(m)) throw InputError(std::string(what) + ": non-finite entry");
  return m;
}

json dump_matrix(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

AlgebraFile read_algebra_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim")) throw InputError("algebra JSON: missing 'dim'");
  int n = doc["dim"].get<int>();
  if (n < 1 || n > 64) throw InputError("algebra JSON: dim out of range");
  AlgebraFile f;
  f.algebra = LieAlgebra(n);
  if (doc.contains("structure")) {
    for (const auto& entry : doc["structure"]) {
      int i = entry.at("i").get<int>(), j = entry.at("j").get<int>(), k = entry.at("k").get<int>();
      double c = entry.at("c").get<double>();
      if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
        throw InputError("algebra JSON: structure index out of range");
      if (i >= j) throw InputError("algebra JSON: structure entries require i < j");
      if (!std::isfinite(c)) throw InputError("algebra JSON: non-finite structure constant");
      Vec v = Vec::Zero(n);
      v(k - 1) = c;
      f.algebra.add_bracket(i - 1, j - 1, v);
    }
  }
  if (doc.contains("metric")) f.metric = parse_matrix(doc["metric"], n, "metric");
  if (doc.contains("J")) f.j = parse_matrix(doc["J"], n, "J");
  return f;
}

std::string write_algebra_json(const AlgebraFile& f, int indent) {
  const int n = f.algebra.dim();
  json doc;
  doc["dim"] = n;
  json st = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = f.algebra.bracket_basis(i, j);
      for (int k = 0; k < n; ++k)
        if (v(k) != 0.0)
          st.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", v(k)}});
    }
  doc["structure"] = st;
  if (f.metric) doc["metric"] = dump_matrix(*f.metric);
  if (f.j) doc["J"] = dump_matrix(*f.j);
  return doc.dump(indent);
}

HermitianStructure AlgebraFile::hermitian() const {
  const int n = algebra.dim();
  HermitianStructure h;
  h.algebra = algebra;
  h.g = metric ? *metric : Mat::Identity(n, n);
  if (j) {
    h.j = *j;
  } else {
    if (n % 2 != 0)
      throw InputError("algebra JSON: odd dimension requires an explicit J");
    h.j = standard_j(n / 2);
  }
  return h;
}

}  // namespace skt
