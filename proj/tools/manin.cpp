#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "manin/catalog.hpp"
#include "manin/dynconst.hpp"
#include "manin/error.hpp"
#include "manin/serialize.hpp"
#include "manin/twist.hpp"

using namespace manin;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;

// Thrown for a check that ran and failed; main maps it to exit code 2.
struct VerificationFailed {
  std::string what;
};

std::filesystem::path output_path(const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_relative())
    if (const char* dir = std::getenv("MANIN_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  return p;
}

// Relative inputs missing from the working directory are looked up in $MANIN_OUT_DIR.
std::string input_path(const std::string& name) {
  if (std::filesystem::exists(name)) return name;
  return output_path(name).string();
}

Json read_input(const std::string& name) { return io::read_json_file(input_path(name)); }

void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// JSON to stdout, or to --out (relative paths land under $MANIN_OUT_DIR).
void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << io::dump(j);
    return;
  }
  auto p = output_path(out);
  write_file(p, io::dump(j));
  std::cerr << "wrote " << p.string() << "\n";
}

Algebra algebra_arg(const std::string& id, const std::string& form_scale) {
  AlgebraOptions opt;
  if (!form_scale.empty()) {
    opt.form_scale = parse_rational(form_scale);
    if (sgn(opt.form_scale) == 0) throw ParseError("--form-scale: must be nonzero");
  }
  try {
    return build_algebra(id, opt);
  } catch (const Error& e) {
    throw ParseError(std::string("--algebra: ") + e.what());
  }
}

// Root lists are closed under negation, so positive roots alone are enough.
RootSubset roots_arg(const Algebra& g, const std::string& text, const std::string& flag) {
  Json j;
  try {
    j = io::parse_json(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what());
  }
  return io::symmetric_subset_from_json(g, j, flag);
}

// "auto", a JSON element {"index": "p/q"}, or comma separated diagonal entries.
CartanElement h_arg(const Algebra& g, const std::string& text, const RootSubset& n, const RootSubset& u) {
  if (text == "auto") {
    auto h = regular_element(n, u);
    if (!h) throw PreconditionError("no (N, U)-regular element exists");
    return *h;
  }
  try {
    if (!text.empty() && text.front() == '{') return CartanElement(*g, io::element_from_json(*g, io::parse_json(text), "--h"));
    std::vector<Rational> diag;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) diag.push_back(parse_rational(item));
    if (diag.size() != g->matrix_size())
      throw ParseError("expected " + std::to_string(g->matrix_size()) + " diagonal entries, got " + std::to_string(diag.size()));
    return CartanElement::from_diagonal(*g, diag);
  } catch (const Error& e) {
    throw ParseError(std::string("--h: ") + e.what());
  }
}

std::vector<Rational> rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError& e) {
      throw ParseError(flag + ": entry " + std::to_string(pos) + ": " + e.what());
    }
    ++pos;
  }
  return out;
}

struct Report {
  std::vector<std::pair<std::string, bool>> lines;
  void add(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    lines.emplace_back(name, ok);
  }
  bool pass() const {
    for (const auto& l : lines)
      if (!l.second) return false;
    return true;
  }
  void finish(const std::string& what) const {
    if (!pass()) throw VerificationFailed{what};
  }
};

// ---- commands

void cmd_info(const Algebra& g) {
  Json j = io::algebra_header(*g);
  j["rank"] = g->rank();
  j["dim"] = g->dim();
  j["cartan_dim"] = g->cartan_dim();
  j["num_roots"] = g->num_roots();
  Json roots = Json::array();
  for (std::size_t k = 0; k < g->num_roots(); ++k)
    roots.push_back({{"ordinal", k}, {"index", g->root_index(k)}, {"root", io::root_to_json(*g, k)}, {"positive", g->is_positive(k)}});
  j["roots"] = std::move(roots);
  emit(j, "");
}

void cmd_reductive(const Algebra& g, const RootSubset& u, const std::string& out) {
  Json j = io::algebra_header(*g);
  j["U"] = io::to_json(u);
  Json list = Json::array();
  for (const auto& n : enumerate_reductive(g, u)) {
    Json e = {{"N", io::to_json(n)}};
    auto h = regular_element(n, u);
    e["h"] = h ? io::to_json(h->value()) : Json();
    list.push_back(std::move(e));
  }
  j["subsets"] = std::move(list);
  emit(j, out);
}

void cmd_rmatrix_verify(const std::string& file) {
  auto c = io::candidate_from_json(read_input(file));
  Report r;
  MembershipReport m = membership_report(c);
  r.add("diagonal form", m.diagonal_form);
  r.add("wedge2(m)^u structural", m.wedge_structural);
  r.add("wedge2(m)^u tensor", m.wedge_tensor);
  r.add("M_Omega structural", m.momega_structural);
  r.add("M_Omega tensor", m.momega_tensor);
  r.add("oracles agree", m.agree(), m.omega_nonzero ? "nonzero omega" : "");
  for (const auto& f : m.failures) std::cout << "  " << f << "\n";
  if (c.provenance) {
    bool same = false;
    std::string detail;
    try {
      same = build_x(c.provenance->n, c.provenance->h, c.u).tensor == c.tensor;
      if (!same) detail = "tensor differs from x_{N,h}";
    } catch (const Error& e) {
      detail = e.what();
    }
    r.add("provenance", same, detail);
  }
  r.finish("rmatrix verify");
}

DualSubspace lagrangian_file(const std::string& file) { return io::dual_subspace_from_json(read_input(file)); }

void cmd_lagrangian_verify(const std::string& file) {
  auto l = lagrangian_file(file);
  auto v = is_lagrangian_subalgebra(l);
  Report r;
  r.add("isotropic", v.isotropic);
  r.add("dimension = dim g", v.dimension_ok, std::to_string(l.dim()) + " vs " + std::to_string(l.g().dim()));
  r.add("subalgebra", v.subalgebra);
  r.finish("lagrangian verify");
}

void cmd_lagrangian_to_pair(const std::string& file, const std::string& out) {
  auto l = lagrangian_file(file);
  if (!is_lagrangian_subalgebra(l).all()) throw VerificationFailed{"input is not a Lagrangian subalgebra"};
  emit(io::to_json(lagrangian_to_pair(l)), out);
}

// Accepts a bare tensor or an r-matrix candidate (which carries its own U).
void cmd_from_bivector(const std::string& file, const std::optional<std::string>& u_text, const std::string& out) {
  Json j = read_input(file);
  Tensor2 b;
  RootSubset u;
  if (j.contains("tensor")) {
    auto c = io::candidate_from_json(j);
    b = c.tensor;
    u = c.u;
  } else {
    b = io::tensor2_from_json(j);
    u = RootSubset::empty(b.algebra());
  }
  if (u_text) u = roots_arg(b.algebra(), *u_text, "--U");
  emit(io::to_json(lagrangian_from_bivector(u, b)), out);
}

void cmd_twist(const std::string& rho_file, const std::string& s_file) {
  Tensor2 rho = io::tensor2_from_json(read_input(rho_file));
  Tensor2 s = io::tensor2_from_json(read_input(s_file));
  if (!same_ambient(rho.g(), s.g())) throw ParseError("rho and s live in different algebras");
  Report r;
  auto tri = twist_condition_triangular(rho, s);
  std::optional<TwistCheck> gen;
  std::string detail;
  try {
    gen = twist_condition_general(cobracket_from_r(rho), s);
  } catch (const PreconditionError& e) {
    detail = e.what();
  }
  std::cout << "INFO CYB(rho) " << (cyb(rho).is_zero() ? "vanishes" : "does not vanish") << "\n";
  r.add("triangular condition", tri.holds);
  if (gen) {
    r.add("general condition", gen->holds);
    r.add("conditions agree", gen->holds == tri.holds);
  } else {
    std::cout << "SKIP general condition: " << detail << "\n";
  }
  if (!tri.holds) std::cout << "residual " << io::to_json(tri.residual).dump() << "\n";
  if (tri.holds) {
    auto t = apply_twist(rho, s);
    r.add("rho + s solves CYBE", t.twisted_solves || !t.rho_solves, t.rho_solves ? "" : "rho itself does not solve CYBE");
  }
  r.finish("twist check");
}

void cmd_example(int n, const std::string& hvals, const std::string& dump_dir) {
  std::vector<Rational> h;
  if (hvals.empty()) {
    for (int i = 0; i < n; ++i) h.push_back(Rational(n - 1 - 2 * i));
  } else {
    h = rational_list(hvals, "--h");
  }
  auto e = build_example(n, h);
  auto rep = verify_example(e);
  std::cout << "example n = " << n << ", h = (";
  for (std::size_t i = 0; i < h.size(); ++i) std::cout << (i ? "," : "") << to_string(h[i]);
  std::cout << ")\n";
  Report r;
  for (const auto& c : rep.checks) r.add(c.name, c.pass, c.detail);
  if (!rep.residual.is_zero()) std::cout << "residual (pipeline - closed form) " << io::to_json(rep.residual)["entries"].dump() << "\n";
  std::cout << "diagnostic: closed form with D_i = E_ii - I/n " << (rep.negated_matches ? "matches" : "does not match")
            << " the pipeline; its CYB " << (rep.negated_cyb_zero ? "vanishes" : "does not vanish") << "\n";
  if (!dump_dir.empty()) {
    auto dir = output_path(dump_dir);
    write_file(dir / "r0.json", io::dump(io::to_json(e.r0)));
    write_file(dir / "projected.json", io::dump(io::to_json(rep.projected)));
    write_file(dir / "v_pipeline.json", io::dump(io::to_json(rep.pipeline_v)));
    write_file(dir / "v_closed_form.json", io::dump(io::to_json(e.expected_v)));
    std::cerr << "wrote tensors to " << dir.string() << "\n";
  }
  r.finish("example appendix-b");
}

void cmd_catalog_verify(const std::string& file) {
  auto v = verify_catalog(read_input(file));
  Report r;
  for (const auto& [label, digest] : v.entries) r.add(label, all_pass(digest), all_pass(digest) ? "" : "violated: " + failed_checks(digest));
  for (const auto& p : v.problems) r.add("catalog", false, p);
  std::cout << v.entries.size() << " entries\n";
  r.finish("catalog verify");
}

// Randomized roundtrip and twist checks; the only command that takes --seed.
void cmd_property(const Algebra& g, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rational = [&] {
    Rational q(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 4) + 1);
    q.canonicalize();
    return q;
  };
  auto subsets = enumerate_reductive(g, RootSubset::empty(g));
  Report r;
  int roundtrip = 0, twist = 0;
  for (int t = 0; t < count; ++t) {
    const auto& n = subsets[rng() % subsets.size()];
    std::vector<LieElement> basis;
    for (const auto& v : root_subspace(n).basis()) basis.push_back(g->from_dense(v));
    LieElement h;
    for (std::size_t i = 0; i < g->dim(); ++i)
      if (rng() % 2) h.add(i, rational());
    auto p = coboundary_pair(g, basis, h);
    if (lagrangian_to_pair(pair_to_lagrangian(p)) == p) ++roundtrip;

    Tensor2 s(g);
    for (int k = 0; k < 4; ++k) {
      auto i = rng() % g->dim(), j = rng() % g->dim();
      Rational c = rational();
      s.add({i, j}, c);
      s.add({j, i}, -c);
    }
    Tensor2 rho = wedge(g, LieElement::basis(0), LieElement::basis(g->root_index(0)));
    if (twist_condition_general(cobracket_from_r(rho), s).holds == twist_condition_triangular(rho, s).holds) ++twist;
  }
  r.add("pair <-> lagrangian roundtrip", roundtrip == count, std::to_string(roundtrip) + "/" + std::to_string(count));
  r.add("twist conditions agree", twist == count, std::to_string(twist) + "/" + std::to_string(count));
  r.finish("property");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"manin: exact r-matrices, Lagrangian subalgebras of g[eps] and their classification"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.set_version_flag("--version", "manin 1.0");

  std::string algebra_id = "A2", form_scale, u_text = "[]", n_text, h_text = "auto", out, file, file2, dump_dir;
  int sign = -1, n = 4, count = 20;
  std::uint64_t seed = 1;
  bool u_given = false;

  auto add_algebra = [&](CLI::App* c) {
    c->add_option("--algebra", algebra_id, "algebra id, e.g. A2")->capture_default_str();
    c->add_option("--form-scale", form_scale, "scale of the trace form");
  };
  auto add_out = [&](CLI::App* c) { c->add_option("-o,--out", out, "output file (relative to $MANIN_OUT_DIR when set)"); };

  auto* info = app.add_subcommand("info", "dimensions and roots in canonical order");
  add_algebra(info);

  auto* red = app.add_subcommand("reductive", "reductive subsets N containing U");
  add_algebra(red);
  red->add_option("--U", u_text, "roots of U in simple coordinates, closed under negation");
  add_out(red);

  auto* rm = app.add_subcommand("rmatrix", "x_{N,h} tensors");
  rm->require_subcommand(1);
  auto* rm_build = rm->add_subcommand("build", "emit x_{N,h} with provenance");
  add_algebra(rm_build);
  rm_build->add_option("--U", u_text, "roots of U");
  rm_build->add_option("--N", n_text, "roots of N")->required();
  rm_build->add_option("--h", h_text, "auto | diagonal entries d1,..,dn | JSON element");
  add_out(rm_build);
  auto* rm_verify = rm->add_subcommand("verify", "run both membership oracles");
  rm_verify->add_option("file", file)->required();

  auto* lg = app.add_subcommand("lagrangian", "Lagrangian subalgebras of g[eps]");
  lg->require_subcommand(1);
  auto* lg_pair = lg->add_subcommand("build-from-pair", "l(n, B) from a pair file");
  lg_pair->add_option("file", file)->required();
  add_out(lg_pair);
  auto* lg_lnb = lg->add_subcommand("build-lnb", "u + eps g_alpha (R \\ N) + (1 + sign alpha(h) eps) g_alpha (N \\ U)");
  add_algebra(lg_lnb);
  lg_lnb->add_option("--U", u_text, "roots of U");
  lg_lnb->add_option("--N", n_text, "roots of N")->required();
  lg_lnb->add_option("--h", h_text, "auto | diagonal entries | JSON element");
  lg_lnb->add_option("--sign", sign, "+1 or -1")->capture_default_str();
  add_out(lg_lnb);
  auto* lg_biv = lg->add_subcommand("from-bivector", "Drinfeld subspace of a bivector");
  lg_biv->add_option("file", file, "tensor or r-matrix file")->required();
  auto* biv_u = lg_biv->add_option("--U", u_text, "roots of U (overrides the file)");
  add_out(lg_biv);
  auto* lg_to = lg->add_subcommand("to-pair", "(n, B) from a Lagrangian subalgebra");
  lg_to->add_option("file", file)->required();
  add_out(lg_to);
  auto* lg_verify = lg->add_subcommand("verify", "isotropy, dimension and closure");
  lg_verify->add_option("file", file)->required();

  auto* tw = app.add_subcommand("twist", "twist conditions");
  tw->require_subcommand(1);
  auto* tw_check = tw->add_subcommand("check", "both twist conditions for rho and s");
  tw_check->add_option("--rho", file, "tensor file")->required();
  tw_check->add_option("--s", file2, "skew tensor file")->required();

  auto* ex = app.add_subcommand("example", "worked examples");
  ex->require_subcommand(1);
  auto* ex_b = ex->add_subcommand("appendix-b", "dynamical-to-constant projection in sl(n)");
  ex_b->add_option("--n", n, "matrix size, at least 3")->capture_default_str();
  ex_b->add_option("--h", h_text, "comma separated h_1..h_n summing to 0 (default n-1, n-3, ..)");
  ex_b->add_option("--dump", dump_dir, "directory for r0, p(r0) and v as JSON");

  auto* cat = app.add_subcommand("catalog", "classified structures for (g, U)");
  cat->require_subcommand(1);
  auto* cat_build = cat->add_subcommand("build", "one entry per reductive N >= U");
  add_algebra(cat_build);
  cat_build->add_option("--U", u_text, "roots of U");
  add_out(cat_build);
  auto* cat_verify = cat->add_subcommand("verify", "re-run every oracle on a catalog file");
  cat_verify->add_option("file", file)->required();

  auto* prop = app.add_subcommand("property", "randomized roundtrip and twist checks");
  add_algebra(prop);
  prop->add_option("--count", count)->capture_default_str();
  prop->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  u_given = biv_u->count() > 0;
  if (ex_b->parsed() && h_text == "auto") h_text.clear();

  try {
    if (info->parsed()) {
      cmd_info(algebra_arg(algebra_id, form_scale));
    } else if (red->parsed()) {
      auto g = algebra_arg(algebra_id, form_scale);
      cmd_reductive(g, roots_arg(g, u_text, "--U"), out);
    } else if (rm_build->parsed()) {
      auto g = algebra_arg(algebra_id, form_scale);
      auto u = roots_arg(g, u_text, "--U");
      auto nn = roots_arg(g, n_text, "--N");
      emit(io::to_json(build_x(nn, h_arg(g, h_text, nn, u), u)), out);
    } else if (rm_verify->parsed()) {
      cmd_rmatrix_verify(file);
    } else if (lg_pair->parsed()) {
      emit(io::to_json(pair_to_lagrangian(io::pair_from_json(read_input(file)))), out);
    } else if (lg_lnb->parsed()) {
      auto g = algebra_arg(algebra_id, form_scale);
      auto u = roots_arg(g, u_text, "--U");
      auto nn = roots_arg(g, n_text, "--N");
      emit(io::to_json(build_lnb(nn, h_arg(g, h_text, nn, u), u, sign)), out);
    } else if (lg_biv->parsed()) {
      cmd_from_bivector(file, u_given ? std::optional(u_text) : std::nullopt, out);
    } else if (lg_to->parsed()) {
      cmd_lagrangian_to_pair(file, out);
    } else if (lg_verify->parsed()) {
      cmd_lagrangian_verify(file);
    } else if (tw_check->parsed()) {
      cmd_twist(file, file2);
    } else if (ex_b->parsed()) {
      cmd_example(n, h_text, dump_dir);
    } else if (cat_build->parsed()) {
      auto g = algebra_arg(algebra_id, form_scale);
      auto u = roots_arg(g, u_text, "--U");
      emit(catalog_to_json(g, u, build_catalog(g, u)), out);
    } else if (cat_verify->parsed()) {
      cmd_catalog_verify(file);
    } else if (prop->parsed()) {
      cmd_property(algebra_arg(algebra_id, form_scale), count, seed);
    }
  } catch (const VerificationFailed& f) {
    std::cerr << "verification failed: " << f.what << "\n";
    return kFail;
  } catch (const InvariantFailure& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kFail;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kPass;
}
