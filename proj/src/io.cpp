#include "lbw/io.hpp"

#include <set>
#include <utility>

namespace lbw::io {

namespace {

std::size_t index_from_json(const Json& j, std::size_t bound, const char* what) {
  long long v;
  if (j.is_number_integer()) {
    v = j.get<long long>();
  } else if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t used = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad ") + what + " index '" + s + "'");
    }
    if (used != s.size()) throw ParseError(std::string("bad ") + what + " index '" + s + "'");
  } else {
    throw ParseError(std::string(what) + " index must be an integer");
  }
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw ShapeError(std::string(what) + " index " + std::to_string(v) + " out of range [0," +
                     std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

std::size_t dim_from_json(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const auto& d = j.at(key);
  if (!d.is_number_integer() || d.get<long long>() < 0)
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  return d.get<std::size_t>();
}

const Json& array_at(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
  const auto& a = j.at(key);
  if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  return a;
}

// Shared reader for bracket-style and product-style tables.
Tensor3 read_table(const Json& rows, std::size_t n, bool strict_upper, const char* what) {
  Tensor3 t(n, n, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : rows) {
    if (!e.is_object()) throw ParseError(std::string(what) + " entry must be an object");
    std::size_t i = index_from_json(e.at("i"), n, "i");
    std::size_t j = index_from_json(e.at("j"), n, "j");
    if (strict_upper && i >= j)
      throw InvalidInput(std::string(what) + " entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") must have i < j");
    if (!seen.insert({i, j}).second)
      throw InvalidInput(std::string("duplicate ") + what + " entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    std::set<std::size_t> ks;
    for (const auto& term : array_at(e, "out")) {
      if (!term.is_array() || term.size() != 2)
        throw ParseError(std::string(what) + " term must be [k, \"p/q\"]");
      std::size_t k = index_from_json(term[0], n, "k");
      if (!ks.insert(k).second)
        throw InvalidInput(std::string("repeated output index ") + std::to_string(k) + " in " + what +
                           " entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      t(i, j, k) += scalar_from_json(term[1]);
      if (strict_upper) t(j, i, k) -= scalar_from_json(term[1]);
    }
  }
  return t;
}

Json write_table(const Tensor3& t, bool strict_upper) {
  std::size_t n = t.dim0();
  Json rows = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = strict_upper ? i + 1 : 0; j < n; ++j) {
      Json out = Json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (t(i, j, k) != 0) out.push_back(Json::array({k, to_json(t(i, j, k))}));
      if (!out.empty()) rows.push_back(Json{{"i", i}, {"j", j}, {"out", out}});
    }
  return rows;
}

}  // namespace

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get_ref<const std::string&>());
  if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
  throw ParseError("scalar must be a \"p/q\" string or an integer");
}

Json to_json(const Scalar& q) { return to_string(q); }

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ShapeError("expected a matrix with " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ShapeError("matrix row " + std::to_string(r) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

LieAlgebra lie_from_json(const Json& j) {
  std::size_t n = dim_from_json(j, "dim");
  if (!j.contains("brackets")) return LieAlgebra::abelian(n);
  return LieAlgebra::from_constants(read_table(array_at(j, "brackets"), n, true, "bracket"));
}

Json to_json(const LieAlgebra& L) {
  const auto& c = L.constants();
  std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw InvalidInput("structure constants are not antisymmetric; cannot serialize");
  return Json{{"dim", n}, {"brackets", write_table(c, true)}};
}

Cobracket cobracket_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("\"delta\" must be an array");
  Tensor3 d(n, n, n);
  std::set<std::size_t> seen;
  for (const auto& e : j) {
    if (!e.is_object()) throw ParseError("delta entry must be an object");
    std::size_t k = index_from_json(e.at("k"), n, "k");
    if (!seen.insert(k).second) throw InvalidInput("duplicate delta entry k=" + std::to_string(k));
    std::set<std::pair<std::size_t, std::size_t>> ab;
    for (const auto& term : array_at(e, "out")) {
      if (!term.is_array() || term.size() != 3)
        throw ParseError("delta term must be [i, j, \"p/q\"]");
      std::size_t a = index_from_json(term[0], n, "i");
      std::size_t b = index_from_json(term[1], n, "j");
      if (a >= b) throw InvalidInput("delta term must have i < j");
      if (!ab.insert({a, b}).second)
        throw InvalidInput("repeated delta term (" + std::to_string(a) + "," + std::to_string(b) + ")");
      Scalar v = scalar_from_json(term[2]);
      d(k, a, b) += v;
      d(k, b, a) -= v;
    }
  }
  return Cobracket(std::move(d));
}

Json cobracket_to_json(const Cobracket& delta) {
  std::size_t n = delta.dim();
  Json rows = Json::array();
  for (std::size_t k = 0; k < n; ++k) {
    Json out = Json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (delta.d(k, i, j) != -delta.d(k, j, i))
          throw InvalidInput("cobracket is not coantisymmetric; cannot serialize");
        if (i < j && delta.d(k, i, j) != 0)
          out.push_back(Json::array({i, j, to_json(delta.d(k, i, j))}));
      }
    if (!out.empty()) rows.push_back(Json{{"k", k}, {"out", out}});
  }
  return rows;
}

PreLieAlgebra prelie_from_json(const Json& j) {
  std::size_t n = dim_from_json(j, "dim");
  if (!j.contains("products")) return PreLieAlgebra(Tensor3(n, n, n));
  return PreLieAlgebra(read_table(array_at(j, "products"), n, false, "product"));
}

Json to_json(const PreLieAlgebra& A) {
  return Json{{"dim", A.dim()}, {"products", write_table(A.constants(), false)}};
}

Json rho_to_json(const Representation& R) {
  Json maps = Json::array();
  for (const auto& m : R.maps()) maps.push_back(to_json(m));
  return maps;
}

Json report_to_json(const Report& r) {
  Json items = Json::array();
  for (const auto& it : r.items()) {
    Json o{{"identity", it.identity}, {"formula", it.formula}, {"pass", it.pass}};
    if (!it.witness.empty()) o["witness"] = it.witness;
    if (!it.residual.empty()) o["residual"] = it.residual;
    if (it.diagnostic) o["diagnostic"] = true;
    if (!it.note.empty()) o["note"] = it.note;
    items.push_back(std::move(o));
  }
  return Json{{"subject", r.subject()}, {"pass", r.pass()}, {"items", items}};
}

}  // namespace lbw::io
