#include "manin/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "manin/error.hpp"

namespace manin::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("at " + (path.empty() ? std::string("/") : path) + ": " + what);
}

std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(path, "expected a nonnegative integer");
  auto v = j.get<std::size_t>();
  if (v >= bound) fail(path, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
  return v;
}

template <std::size_t K>
Json tensor_json(const Tensor<K>& t) {
  Json out = algebra_header(t.g());
  Json entries = Json::array();
  for (const auto& [key, c] : t.terms()) {
    Json e = Json::array();
    for (auto i : key) e.push_back(i);
    e.push_back(to_json(c));
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

template <std::size_t K>
Tensor<K> tensor_from(const Json& j, const std::string& path) {
  Algebra g = algebra_from_json(j, path);
  Tensor<K> t(g);
  const auto& entries = array_at(field(j, "entries", path), child(path, "entries"));
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const std::string p = child(child(path, "entries"), n);
    const auto& e = array_at(entries[n], p);
    if (e.size() != K + 1) fail(p, "expected " + std::to_string(K) + " indices and a coefficient");
    typename Tensor<K>::Key key{};
    for (std::size_t k = 0; k < K; ++k) key[k] = index_from_json(e[k], g->dim(), child(p, k));
    if (sgn(t.coeff(key)) != 0) fail(p, "repeated index tuple");
    Rational c = rational_from_json(e[K], child(p, K));
    if (sgn(c) == 0) fail(child(p, K), "zero coefficients are not stored");
    t.add(key, c);
  }
  return t;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + " (byte " +
                     std::to_string(e.byte) + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

bool flat(const Json& j) {
  if (j.is_object()) return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
  if (!j.is_array()) return true;
  return std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive() || (e.is_array() && flat(e) && e.size() <= 4); });
}

// Objects and long arrays one member per line; arrays of scalars (and short scalar rows) inline.
void pretty(const Json& j, int depth, std::string& out) {
  if (flat(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t n = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++n) {
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    pretty(*it, depth + 1, out);
    out += n + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(2 * depth, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Json to_json(const LieElement& x) {
  Json out = Json::object();
  for (const auto& [i, c] : x.terms()) out[std::to_string(i)] = to_json(c);
  return out;
}

LieElement element_from_json(const LieAlgebra& g, const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object {basisIndex: \"p/q\"}");
  LieElement x;
  for (const auto& [key, value] : j.items()) {
    const std::string p = child(path, key);
    std::size_t idx = 0;
    auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
    if (ec != std::errc() || end != key.data() + key.size()) fail(p, "basis index must be a decimal integer");
    if (idx >= g.dim()) fail(p, "basis index out of range (dimension " + std::to_string(g.dim()) + ")");
    x.add(idx, rational_from_json(value, p));
  }
  return x;
}

Json algebra_header(const LieAlgebra& g) {
  Json out = Json::object();
  out["algebra"] = g.id();
  if (g.form_scale() != 1) out["form_scale"] = to_json(g.form_scale());
  return out;
}

Algebra algebra_from_json(const Json& j, const std::string& path) {
  const auto& id = field(j, "algebra", path);
  if (!id.is_string()) fail(child(path, "algebra"), "expected an algebra id such as \"A2\"");
  AlgebraOptions opt;
  if (j.contains("form_scale")) {
    opt.form_scale = rational_from_json(j["form_scale"], child(path, "form_scale"));
    if (sgn(opt.form_scale) == 0) fail(child(path, "form_scale"), "form scale must be nonzero");
  }
  try {
    return build_algebra(id.get<std::string>(), opt);
  } catch (const Error& e) {
    fail(child(path, "algebra"), e.what());
  }
}

Json root_to_json(const LieAlgebra& g, std::size_t ordinal) { return g.simple_coords(g.root(ordinal)); }

std::size_t root_from_json(const LieAlgebra& g, const Json& j, const std::string& path) {
  const auto& a = array_at(j, path);
  if (a.size() != static_cast<std::size_t>(g.rank()))
    fail(path, "expected " + std::to_string(g.rank()) + " simple-root coordinates");
  std::vector<int> coords;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number_integer()) fail(child(path, i), "expected an integer");
    coords.push_back(a[i].get<int>());
  }
  try {
    return g.ordinal_from_simple(coords);
  } catch (const DomainError&) {
    fail(path, "not a root of " + g.id());
  }
}

Json to_json(const RootSubset& s) {
  Json out = Json::array();
  for (auto k : s.ordinals()) out.push_back(root_to_json(s.g(), k));
  return out;
}

RootSubset subset_from_json(const Algebra& g, const Json& j, const std::string& path) {
  const auto& a = array_at(j, path);
  std::vector<std::size_t> ords;
  for (std::size_t i = 0; i < a.size(); ++i) ords.push_back(root_from_json(*g, a[i], child(path, i)));
  return RootSubset(g, ords);
}

RootSubset symmetric_subset_from_json(const Algebra& g, const Json& j, const std::string& path) {
  return subset_from_json(g, j, path).symmetrized();
}

Json to_json(const Tensor2& t) { return tensor_json(t); }
Json to_json(const Tensor3& t) { return tensor_json(t); }
Tensor2 tensor2_from_json(const Json& j, const std::string& path) { return tensor_from<2>(j, path); }
Tensor3 tensor3_from_json(const Json& j, const std::string& path) { return tensor_from<3>(j, path); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const Json& j, std::size_t cols, const std::string& path) {
  const auto& rows = array_at(j, path);
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = array_at(rows[i], child(path, i));
    if (row.size() != cols) fail(child(path, i), "expected " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(row[k], child(child(path, i), k));
  }
  return m;
}

Json to_json(const Subspace& s) {
  Json out = Json::object();
  out["ambient"] = s.ambient();
  out["rref"] = to_json(s.rref());
  return out;
}

Subspace subspace_from_json(const Json& j, const std::string& path) {
  const auto& amb = field(j, "ambient", path);
  if (!amb.is_number_unsigned()) fail(child(path, "ambient"), "expected a nonnegative integer");
  const std::size_t n = amb.get<std::size_t>();
  Matrix m = matrix_from_json(field(j, "rref", path), n, child(path, "rref"));
  Subspace s = Subspace::span(n, m.row_vectors());
  if (s.rref() != m) fail(child(path, "rref"), "rows are not in reduced row echelon form");
  return s;
}

Json to_json(const DualSubspace& l) {
  Json out = algebra_header(l.g());
  const std::size_t d = l.g().dim();
  out["split"] = {{"g", Json::array({0, d})}, {"eps", Json::array({d, 2 * d})}};
  out["rref"] = to_json(l.subspace().rref());
  return out;
}

DualSubspace dual_subspace_from_json(const Json& j, const std::string& path) {
  Algebra g = algebra_from_json(j, path);
  const std::size_t d = g->dim();
  const auto& split = field(j, "split", path);
  Json expected = {{"g", Json::array({0, d})}, {"eps", Json::array({d, 2 * d})}};
  if (split != expected)
    fail(child(path, "split"), "expected g columns [0," + std::to_string(d) + ") and eps columns [" +
                                   std::to_string(d) + "," + std::to_string(2 * d) + ")");
  Matrix m = matrix_from_json(field(j, "rref", path), 2 * d, child(path, "rref"));
  Subspace s = Subspace::span(2 * d, m.row_vectors());
  if (s.rref() != m) fail(child(path, "rref"), "rows are not in reduced row echelon form");
  return DualSubspace(g, s);
}

Json to_json(const SubalgebraPair& p) {
  Json out = algebra_header(p.g());
  Json basis = Json::array();
  for (const auto& x : p.basis()) basis.push_back(to_json(x));
  out["basis"] = std::move(basis);
  out["B"] = to_json(p.b());
  return out;
}

SubalgebraPair pair_from_json(const Json& j, const std::string& path) {
  Algebra g = algebra_from_json(j, path);
  const auto& b = array_at(field(j, "basis", path), child(path, "basis"));
  std::vector<LieElement> basis;
  for (std::size_t i = 0; i < b.size(); ++i) basis.push_back(element_from_json(*g, b[i], child(child(path, "basis"), i)));
  Matrix m = matrix_from_json(field(j, "B", path), basis.size(), child(path, "B"));
  if (m.rows() != basis.size()) fail(child(path, "B"), "expected a square matrix of size " + std::to_string(basis.size()));
  return SubalgebraPair(g, std::move(basis), std::move(m));
}

Json to_json(const RMatrixCandidate& c) {
  Json out = algebra_header(c.tensor.g());
  out["U"] = to_json(c.u);
  out["tensor"] = to_json(c.tensor);
  out["omega"] = to_json(c.omega);
  if (c.provenance) {
    const auto& g = c.tensor.g();
    Json values = Json::array();
    for (auto k : c.provenance->n.ordinals())
      if (g.is_positive(k)) values.push_back(Json::array({root_to_json(g, k), to_json(root_value(g, k, c.provenance->h))}));
    out["provenance"] = {{"N", to_json(c.provenance->n)}, {"h", to_json(c.provenance->h.value())}, {"alpha_h", values}};
  }
  return out;
}

RMatrixCandidate candidate_from_json(const Json& j, const std::string& path) {
  Algebra g = algebra_from_json(j, path);
  RMatrixCandidate c;
  c.u = subset_from_json(g, field(j, "U", path), child(path, "U"));
  c.tensor = tensor2_from_json(field(j, "tensor", path), child(path, "tensor"));
  c.omega = j.contains("omega") ? tensor2_from_json(j["omega"], child(path, "omega")) : Tensor2(g);
  for (const auto* t : {&c.tensor, &c.omega})
    if (!same_ambient(t->g(), *g)) fail(path, "tensor algebra differs from the candidate algebra");
  if (j.contains("provenance")) {
    const std::string p = child(path, "provenance");
    const auto& pj = j["provenance"];
    RootSubset n = subset_from_json(g, field(pj, "N", p), child(p, "N"));
    LieElement h = element_from_json(*g, field(pj, "h", p), child(p, "h"));
    try {
      c.provenance = Provenance{n, CartanElement(*g, h)};
    } catch (const DomainError& e) {
      fail(child(p, "h"), e.what());
    }
  }
  return c;
}

}  // namespace manin::io
