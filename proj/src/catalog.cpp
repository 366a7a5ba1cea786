#include "manin/catalog.hpp"

#include <algorithm>

#include "manin/error.hpp"

namespace manin {

namespace {

// h is only pinned down by its values on N, so compare those.
bool same_classification(const ClassifyResult& r, const RootSubset& n, const CartanElement& h) {
  const auto* c = std::get_if<Classification>(&r);
  if (!c || !(c->n == n)) return false;
  for (auto k : n.ordinals())
    if (root_value(n.g(), k, c->h) != root_value(n.g(), k, h)) return false;
  return true;
}

std::vector<LieElement> subspace_basis(const LieAlgebra& g, const Subspace& s) {
  std::vector<LieElement> out;
  for (const auto& v : s.basis()) out.push_back(g.from_dense(v));
  return out;
}

}  // namespace

bool all_pass(const Digest& d) {
  return std::all_of(d.begin(), d.end(), [](const auto& p) { return p.second; });
}

std::string failed_checks(const Digest& d) {
  std::string out;
  for (const auto& [name, ok] : d)
    if (!ok) out += (out.empty() ? "" : ", ") + name;
  return out;
}

Digest verify_entry(const CatalogEntry& e) {
  Digest d;
  const auto& g = e.u.algebra();
  auto guarded = [&](const std::string& name, auto&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const Error&) {
      ok = false;
    }
    d.emplace_back(name, ok);
  };

  guarded("regular", [&] { return is_reductive(e.n) && e.n.includes(e.u) && is_regular(e.h, e.n, e.u); });
  guarded("x = x_{N,h}", [&] { return e.x.tensor == build_x(e.n, e.h, e.u).tensor && e.x.u == e.u; });
  MembershipReport m;
  bool have_report = false;
  try {
    m = membership_report(e.x);
    have_report = true;
  } catch (const Error&) {
  }
  d.emplace_back("wedge2 structural", have_report && m.wedge_structural);
  d.emplace_back("wedge2 tensor", have_report && m.wedge_tensor);
  d.emplace_back("M_Omega structural", have_report && m.momega_structural);
  d.emplace_back("M_Omega tensor", have_report && m.momega_tensor);
  guarded("classify coefficients", [&] {
    auto f = diagonal_coefficients(e.x.tensor, e.u);
    return f && same_classification(classify_coefficients(*f, e.u), e.n, e.h);
  });
  guarded("lagrangian subalgebra", [&] { return is_lagrangian_subalgebra(e.lagrangian).all(); });
  guarded("l = l(U, x)", [&] { return e.lagrangian == lagrangian_from_bivector(e.u, e.x.tensor); });
  guarded("l = l_{N,-h}", [&] { return e.lagrangian == build_lnb(e.n, e.h, e.u, -1); });
  guarded("poisson homogeneous", [&] { return is_poisson_homogeneous(e.u, e.x.tensor); });
  guarded("pair = coboundary of -h", [&] {
    auto p = coboundary_pair(g, subspace_basis(*g, root_subspace(e.n)), -e.h.value());
    return e.pair == p;
  });
  guarded("pair <-> l", [&] { return pair_to_lagrangian(e.pair) == e.lagrangian && lagrangian_to_pair(e.lagrangian) == e.pair; });
  guarded("classify pair", [&] {
    auto r = classify_pair(e.pair, e.u);
    const auto* c = std::get_if<PairClassification>(&r);
    return c && c->n == e.n && coboundary_pair(g, e.pair.basis(), c->h.value()) == e.pair;
  });
  return d;
}

std::vector<CatalogEntry> build_catalog(const Algebra& g, const RootSubset& u) {
  std::vector<CatalogEntry> out;
  for (const auto& n : enumerate_reductive(g, u)) {
    auto h = regular_element(n, u);
    if (!h) continue;
    CatalogEntry e;
    e.u = u;
    e.n = n;
    e.h = *h;
    e.x = build_x(n, *h, u);
    e.lagrangian = lagrangian_from_bivector(u, e.x.tensor);
    e.pair = lagrangian_to_pair(e.lagrangian);
    e.digest = verify_entry(e);
    out.push_back(std::move(e));
  }
  return out;
}

io::Json to_json(const CatalogEntry& e) {
  io::Json out = io::algebra_header(e.u.g());
  out["U"] = io::to_json(e.u);
  out["N"] = io::to_json(e.n);
  out["h"] = io::to_json(e.h.value());
  out["x"] = io::to_json(e.x);
  out["lagrangian"] = io::to_json(e.lagrangian);
  out["pair"] = io::to_json(e.pair);
  io::Json digest = io::Json::object();
  for (const auto& [name, ok] : e.digest) digest[name] = ok;
  out["digest"] = std::move(digest);
  return out;
}

CatalogEntry entry_from_json(const io::Json& j, const std::string& path) {
  Algebra g = io::algebra_from_json(j, path);
  auto at = [&](const char* key) -> const io::Json& {
    if (!j.contains(key)) throw ParseError("at " + path + ": missing field \"" + key + "\"");
    return j[key];
  };
  CatalogEntry e;
  e.u = io::subset_from_json(g, at("U"), path + "/U");
  e.n = io::subset_from_json(g, at("N"), path + "/N");
  LieElement h = io::element_from_json(*g, at("h"), path + "/h");
  try {
    e.h = CartanElement(*g, h);
  } catch (const DomainError& err) {
    throw ParseError("at " + path + "/h: " + err.what());
  }
  e.x = io::candidate_from_json(at("x"), path + "/x");
  e.lagrangian = io::dual_subspace_from_json(at("lagrangian"), path + "/lagrangian");
  try {
    e.pair = io::pair_from_json(at("pair"), path + "/pair");
  } catch (const PreconditionError& err) {
    throw ParseError("at " + path + "/pair: " + err.what());
  }
  return e;
}

io::Json catalog_to_json(const Algebra& g, const RootSubset& u, const std::vector<CatalogEntry>& entries) {
  io::Json out = io::algebra_header(*g);
  out["kind"] = "catalog";
  out["U"] = io::to_json(u);
  io::Json list = io::Json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  out["entries"] = std::move(list);
  return out;
}

bool CatalogVerification::pass() const {
  if (!problems.empty()) return false;
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return all_pass(e.second); });
}

CatalogVerification verify_catalog(const io::Json& j) {
  CatalogVerification out;
  Algebra g = io::algebra_from_json(j);
  RootSubset u = io::subset_from_json(g, j.contains("U") ? j["U"] : io::Json(), "/U");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("at /: missing array \"entries\"");
  const auto& list = j["entries"];
  std::vector<RootSubset> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/entries/" + std::to_string(i);
    CatalogEntry e = entry_from_json(list[i], path);
    if (!same_ambient(e.u.g(), *g) || !(e.u == u)) out.problems.push_back(path + ": entry belongs to a different (g, U)");
    Digest d = verify_entry(e);
    if (list[i].contains("digest")) {
      io::Json recorded = list[i]["digest"];
      io::Json fresh = io::Json::object();
      for (const auto& [name, ok] : d) fresh[name] = ok;
      d.emplace_back("recorded digest", recorded == fresh);
    }
    out.entries.emplace_back("N=" + subset_label(e.n), std::move(d));
    seen.push_back(e.n);
  }
  std::vector<RootSubset> expected;
  try {
    for (const auto& n : enumerate_reductive(g, u))
      if (regular_element(n, u)) expected.push_back(n);
  } catch (const PreconditionError& err) {
    out.problems.push_back(std::string("U: ") + err.what());
  }
  if (seen != expected)
    out.problems.push_back("entries do not list the " + std::to_string(expected.size()) +
                           " reductive N >= U in canonical order (found " + std::to_string(seen.size()) + ")");
  return out;
}

}  // namespace manin
