#include "documents.hpp"

#include <array>
#include <fstream>
#include <set>

#include "mdlie/error.hpp"

namespace mdlie::cli {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

std::size_t parse_count(const Json& j, const std::string& where, std::size_t min = 0) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() < min)
    throw ParseError(where, "expected an integer >= " + std::to_string(min));
  return j.get<std::size_t>();
}

// 1-based index in [1, dim] converted to 0-based.
std::size_t parse_index(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > static_cast<long long>(dim))
    throw ParseError(where, "expected an index in 1.." + std::to_string(dim));
  return static_cast<std::size_t>(j.get<long long>() - 1);
}

const Json& array_of(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size) throw ParseError(where, "expected an array of length " + std::to_string(size));
  return j;
}

// {"1": "2/3", ...} as a vector of length dim.
Vector parse_sparse_vector(const Json& j, std::size_t dim, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object from basis index to scalar");
  Vector v(dim);
  for (const auto& [key, value] : j.items()) {
    std::size_t pos = 0;
    long long k = 0;
    try {
      k = std::stoll(key, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != key.size() || k < 1 || k > static_cast<long long>(dim))
      throw ParseError(at(where, key), "basis index must be in 1.." + std::to_string(dim));
    v[static_cast<std::size_t>(k - 1)] = parse_scalar_json(value, at(where, key));
  }
  return v;
}

Json sparse_vector(const Vector& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out[std::to_string(i + 1)] = to_json(v[i]);
  return out;
}

// Entries {"args": [i<j<k], "value": {...}} into a tensor.
void parse_triples(const Json& list, SkewTernaryTensor& t, const std::string& where) {
  if (!list.is_array()) throw ParseError(where, "expected an array of entries");
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string w = at(where, e);
    const Json& args = array_of(member(list[e], "args", w), 3, at(w, "args"));
    std::array<std::size_t, 3> idx{};
    for (std::size_t s = 0; s < 3; ++s) idx[s] = parse_index(args[s], t.dim_in(), at(at(w, "args"), s));
    if (!(idx[0] < idx[1] && idx[1] < idx[2])) throw ParseError(at(w, "args"), "indices must be strictly increasing");
    if (!seen.insert(idx).second) throw ParseError(at(w, "args"), "duplicate triple");
    t.set(idx[0], idx[1], idx[2], parse_sparse_vector(member(list[e], "value", w), t.dim_out(), at(w, "value")));
  }
}

Json triples(const SkewTernaryTensor& t) {
  Json out = Json::array();
  for (std::size_t s = 0; s < t.triple_count(); ++s) {
    const Vector& v = t.canonical_value(s);
    if (is_zero(v)) continue;
    const auto [i, j, k] = t.triple(s);
    out.push_back({{"args", {i + 1, j + 1, k + 1}}, {"value", sparse_vector(v)}});
  }
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string(), std::string("invalid JSON: ") + e.what());
  }
}

Scalar parse_scalar_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where, "expected a scalar string such as \"-3/4\"");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const InputError& e) {
    throw ParseError(where, e.what());
  }
}

Matrix parse_matrix_rows(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  array_of(j, rows, where);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = array_of(j[r], cols, at(where, r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar_json(row[c], at(at(where, r), c));
  }
  return m;
}

Matrix parse_matrix_document(const Json& j, const std::string& where) {
  const Json& rows = member(j, "matrix", where);
  const std::string w = at(where, "matrix");
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw ParseError(w, "expected a non-empty array of rows");
  return parse_matrix_rows(rows, rows.size(), rows[0].size(), w);
}

MD3LieAlgebra parse_algebra(const Json& j, const std::string& where) {
  const std::size_t n = parse_count(member(j, "dim", where), at(where, "dim"), 1);
  SkewTernaryTensor t(n, n);
  if (const Json* b = optional_member(j, "bracket", where)) parse_triples(*b, t, at(where, "bracket"));
  Scalar lambda = 0;
  if (const Json* l = optional_member(j, "lambda", where)) lambda = parse_scalar_json(*l, at(where, "lambda"));
  Matrix d(n, n);
  if (const Json* dj = optional_member(j, "differential", where)) d = parse_matrix_rows(*dj, n, n, at(where, "differential"));
  return MD3LieAlgebra(ThreeLieAlgebra(std::move(t)), std::move(d), lambda);
}

Representation parse_representation(const Json& j, const MD3LieAlgebra& md, const std::string& where) {
  const std::size_t n = md.dim();
  const std::size_t m = parse_count(member(j, "module_dim", where), at(where, "module_dim"), 1);
  Matrix dM(m, m);
  if (const Json* dj = optional_member(j, "d_M", where)) dM = parse_matrix_rows(*dj, m, m, at(where, "d_M"));
  Representation rep(n, m, std::move(dM), md.lambda());
  if (const Json* list = optional_member(j, "rho", where)) {
    const std::string lw = at(where, "rho");
    if (!list->is_array()) throw ParseError(lw, "expected an array of pair actions");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t e = 0; e < list->size(); ++e) {
      const std::string w = at(lw, e);
      const Json& pair = array_of(member((*list)[e], "pair", w), 2, at(w, "pair"));
      const std::size_t i = parse_index(pair[0], n, at(at(w, "pair"), 0));
      const std::size_t k = parse_index(pair[1], n, at(at(w, "pair"), 1));
      if (i >= k) throw ParseError(at(w, "pair"), "pair must be strictly increasing");
      if (!seen.insert({i, k}).second) throw ParseError(at(w, "pair"), "duplicate pair");
      rep.set_action(i, k, parse_matrix_rows(member((*list)[e], "matrix", w), m, m, at(w, "matrix")));
    }
  }
  return rep;
}

SkewTernaryTensor parse_tensor(const Json& j, const std::string& where) {
  const std::size_t n = parse_count(member(j, "dim_in", where), at(where, "dim_in"), 1);
  const std::size_t m = parse_count(member(j, "dim_out", where), at(where, "dim_out"), 1);
  SkewTernaryTensor t(n, m);
  if (const Json* e = optional_member(j, "entries", where)) parse_triples(*e, t, at(where, "entries"));
  return t;
}

AbelianExtension parse_extension(const Json& j, const std::string& where) {
  MD3LieAlgebra base = parse_algebra(member(j, "base", where), at(where, "base"));
  MD3LieAlgebra total = parse_algebra(member(j, "total", where), at(where, "total"));
  const std::size_t n = base.dim(), t = total.dim();
  if (t <= n) throw ParseError(at(where, "total"), "total algebra must be larger than the base");
  const std::size_t m = t - n;
  AbelianExtension ext{std::move(base),
                       parse_matrix_rows(member(j, "module_d", where), m, m, at(where, "module_d")),
                       std::move(total),
                       parse_matrix_rows(member(j, "inclusion", where), t, m, at(where, "inclusion")),
                       parse_matrix_rows(member(j, "projection", where), n, t, at(where, "projection")),
                       SkewTernaryTensor(n, m),
                       Matrix(m, n)};
  if (const Json* f = optional_member(j, "f", where)) {
    ext.f = parse_tensor(*f, at(where, "f"));
    if (ext.f.dim_in() != n || ext.f.dim_out() != m) throw ParseError(at(where, "f"), "f must map A x A x A into M");
  }
  if (const Json* g = optional_member(j, "g", where)) ext.g = parse_matrix_rows(*g, m, n, at(where, "g"));
  return ext;
}

Json to_json(const Scalar& s) { return format_scalar(s); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json matrix_rows(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    out.push_back(to_json(Vector(row.begin(), row.end())));
  }
  return out;
}

Json matrix_document(const Matrix& m) { return {{"matrix", matrix_rows(m)}}; }

Json algebra_document(const MD3LieAlgebra& md) {
  return {{"dim", md.dim()},
          {"bracket", triples(md.algebra().bracket())},
          {"lambda", to_json(md.lambda())},
          {"differential", matrix_rows(md.d())}};
}

Json representation_document(const Representation& rep) {
  Json rho = Json::array();
  for (std::size_t i = 0; i < rep.algebra_dim(); ++i)
    for (std::size_t j = i + 1; j < rep.algebra_dim(); ++j)
      if (!rep.action(i, j).is_zero()) rho.push_back({{"pair", {i + 1, j + 1}}, {"matrix", matrix_rows(rep.action(i, j))}});
  return {{"module_dim", rep.module_dim()}, {"rho", std::move(rho)}, {"d_M", matrix_rows(rep.d_M())}};
}

Json tensor_document(const SkewTernaryTensor& t) {
  return {{"dim_in", t.dim_in()}, {"dim_out", t.dim_out()}, {"entries", triples(t)}};
}

Json extension_document(const AbelianExtension& ext) {
  return {{"base", algebra_document(ext.base)},
          {"module_d", matrix_rows(ext.module_d)},
          {"total", algebra_document(ext.total)},
          {"inclusion", matrix_rows(ext.inclusion)},
          {"projection", matrix_rows(ext.projection)},
          {"f", tensor_document(ext.f)},
          {"g", matrix_rows(ext.g)}};
}

Json cochain_document(const TotalCochain& c) {
  Json out = {{"degree", c.degree}, {"f", to_json(c.f.coords)}};
  if (c.degree == 1) out["f_matrix"] = matrix_rows(c.f.as_linear_map());
  if (c.g) {
    out["g"] = to_json(c.g->coords);
    if (c.g->degree == 1) out["g_matrix"] = matrix_rows(c.g->as_linear_map());
  }
  return out;
}

void append_report(Json& out, const VerificationReport& report) {
  out["valid"] = report.valid();
  Json counts = Json::object();
  for (const auto& [law, count] : report.counts()) counts[law] = count;
  out["violations"] = std::move(counts);
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses()) {
    Json args = Json::array();
    for (auto a : w.args) args.push_back(a + 1);
    witnesses.push_back({{"law", w.law}, {"args", std::move(args)}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}});
  }
  out["witnesses"] = std::move(witnesses);
}

}  // namespace mdlie::cli
