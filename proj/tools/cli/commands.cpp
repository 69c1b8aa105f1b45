#include "commands.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "documents.hpp"
#include "mdlie/cohomology.hpp"
#include "mdlie/deformation.hpp"
#include "mdlie/error.hpp"
#include "mdlie/extension.hpp"
#include "mdlie/linalg.hpp"

namespace mdlie::cli {

namespace {

struct Options {
  std::string algebra, rep, extension, extension2;
  std::string nu1, nu2, d1, op, f, g, section, form, out_path;
  int degree = 1;
  bool representatives = false;
};

MD3LieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_json_file(path), path + ":"); }

Representation load_rep(const std::string& source, const MD3LieAlgebra& md) {
  if (source == "adjoint") return adjoint_representation(md);
  if (source == "coadjoint") return dual_representation(adjoint_representation(md));
  return parse_representation(read_json_file(source), md, source + ":");
}

Matrix load_matrix(const std::string& path, std::size_t rows, std::size_t cols, const char* what) {
  Matrix m = parse_matrix_document(read_json_file(path), path + ":");
  if (m.rows() != rows || m.cols() != cols)
    throw ParseError(path, std::string(what) + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
  return m;
}

SkewTernaryTensor load_tensor(const std::string& path, std::size_t n, std::size_t m, const char* what) {
  SkewTernaryTensor t = parse_tensor(read_json_file(path), path + ":");
  if (t.dim_in() != n || t.dim_out() != m)
    throw ParseError(path, std::string(what) + " must have dim_in " + std::to_string(n) + " and dim_out " +
                               std::to_string(m));
  return t;
}

AbelianExtension load_extension(const std::string& path) { return parse_extension(read_json_file(path), path + ":"); }

int exit_for(bool ok) { return ok ? kExitValid : kExitInvalid; }

void write_file(const std::string& path, const Json& doc) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot write " + path);
  os << doc.dump(2) << '\n';
}

int cmd_verify(const Options& o, Json& r) {
  const auto md = load_algebra(o.algebra);
  VerificationReport report = verify_3lie(md.algebra());
  report.merge(verify_modified_differential(md));
  if (!o.rep.empty()) report.merge(verify_representation(md, load_rep(o.rep, md)));
  r["dim"] = md.dim();
  r["lambda"] = to_json(md.lambda());
  append_report(r, report);
  return exit_for(report.valid());
}

int cmd_cohomology(const Options& o, Json& r) {
  if (o.degree < 1) throw InputError("--degree must be at least 1");
  const auto md = load_algebra(o.algebra);
  const auto rep = load_rep(o.rep, md);
  VerificationReport inputs = verify_3lie(md.algebra());
  inputs.merge(verify_modified_differential(md));
  inputs.merge(verify_representation(md, rep));
  append_report(r, inputs);
  if (!inputs.valid()) return kExitInvalid;

  const ComplexAssembly cx(md, rep);
  const auto dims = cohomology_dim(cx, o.degree, o.representatives);
  r["degree"] = o.degree;
  r["Z"] = dims.cocycles;
  r["B"] = dims.coboundaries;
  r["H"] = dims.cohomology;
  if (o.representatives) {
    Json reps = Json::array();
    for (const auto& c : dims.representatives) reps.push_back(cochain_document(c));
    r["representatives"] = std::move(reps);
  }
  return kExitValid;
}

int cmd_deform_check(const Options& o, Json& r) {
  const auto md = load_algebra(o.algebra);
  const std::size_t n = md.dim();
  LinearDeformation ld = LinearDeformation::zero(md);
  ld.nu1 = load_tensor(o.nu1, n, n, "nu1");
  if (!o.nu2.empty()) ld.nu2 = load_tensor(o.nu2, n, n, "nu2");
  if (!o.d1.empty()) ld.d1 = load_matrix(o.d1, n, n, "d1");
  const auto report = verify_linear_deformation(ld);
  append_report(r, report);
  if (report.valid()) {
    const auto inf = infinitesimal(ld);
    const ComplexAssembly cx(md, adjoint_representation(md));
    r["infinitesimal"] = cochain_document(inf);
    r["infinitesimal_is_cocycle"] = is_cocycle(cx, inf).cocycle;
    r["infinitesimal_is_coboundary"] = is_coboundary(cx, inf).has_value();
  }
  return exit_for(report.valid());
}

int cmd_nijenhuis(const Options& o, Json& r) {
  const auto md = load_algebra(o.algebra);
  const Matrix N = load_matrix(o.op, md.dim(), md.dim(), "operator");
  const auto report = is_nijenhuis(md, N);
  append_report(r, report);
  if (report.valid()) r["deformed_algebra"] = algebra_document(nijenhuis_deformed_algebra(md, N));
  return exit_for(report.valid());
}

int cmd_o_operator(const Options& o, Json& r) {
  const auto md = load_algebra(o.algebra);
  const auto rep = load_rep(o.rep, md);
  const Matrix R = load_matrix(o.op, md.dim(), rep.module_dim(), "operator");
  const auto report = is_o_operator(md, rep, R);
  append_report(r, report);
  r["lift_is_nijenhuis"] = is_nijenhuis(semidirect_product(md, rep), o_operator_lift(md, rep, R)).valid();
  if (R.is_square() && inverse(R)) r["inverse_is_cocycle"] = inverse_cocycle_check(md, rep, R);
  return exit_for(report.valid());
}

int cmd_extend(const Options& o, Json& r) {
  const auto md = load_algebra(o.algebra);
  const auto rep = load_rep(o.rep, md);
  const std::size_t n = md.dim(), m = rep.module_dim();
  const auto f = o.f.empty() ? SkewTernaryTensor(n, m) : load_tensor(o.f, n, m, "f");
  const Matrix g = o.g.empty() ? Matrix(m, n) : load_matrix(o.g, m, n, "g");
  const auto ext = build_abelian_extension(md, rep, f, g);
  const auto report = verify_abelian_extension(ext);
  append_report(r, report);
  const ComplexAssembly cx(md, rep);
  r["cocycle"] = is_cocycle(cx, TotalCochain{2, embed_skew_trilinear(f), Cochain::from_linear_map(g)}).cocycle;
  r["extension"] = extension_document(ext);
  if (!o.out_path.empty()) write_file(o.out_path, extension_document(ext));
  return exit_for(report.valid());
}

int cmd_extract(const Options& o, Json& r) {
  const auto ext = load_extension(o.extension);
  const Matrix s = o.section.empty() ? default_section(ext)
                                     : load_matrix(o.section, ext.total.dim(), ext.base.dim(), "section");
  const auto c = extract_cocycle(ext, s);
  const auto rep_report = verify_representation(ext.base, c.rep);
  bool cocycle = false;
  if (rep_report.valid()) cocycle = is_cocycle(ComplexAssembly(ext.base, c.rep), c.as_cochain()).cocycle;
  append_report(r, rep_report);
  r["valid"] = rep_report.valid() && cocycle;
  r["cocycle"] = cocycle;
  r["representation"] = representation_document(c.rep);
  r["upsilon"] = tensor_document(c.upsilon);
  r["mu"] = matrix_rows(c.mu);
  return exit_for(rep_report.valid() && cocycle);
}

int cmd_equiv(const Options& o, Json& r) {
  const auto e1 = load_extension(o.extension), e2 = load_extension(o.extension2);
  const auto w = extensions_equivalent(e1, e2);
  r["valid"] = w.has_value();
  r["equivalent"] = w.has_value();
  if (w) {
    r["eta"] = matrix_rows(w->eta);
    r["iota"] = matrix_rows(w->iota);
  }
  return exit_for(w.has_value());
}

int cmd_tstar(const Options& o, Json& r) {
  const auto md = load_algebra(o.algebra);
  const std::size_t n = md.dim();
  const auto f = o.f.empty() ? SkewTernaryTensor(n, n) : load_tensor(o.f, n, n, "f");
  const Matrix g = o.g.empty() ? Matrix(n, n) : load_matrix(o.g, n, n, "g");
  const auto ts = tstar_extension(md, f, g);
  const auto report = verify_abelian_extension(ts.extension);
  append_report(r, report);
  r["cyclic"] = tstar_cyclicity_check(f, g);
  r["metrised"] = is_metrised(ts.extension.total, ts.form).valid();
  r["form"] = matrix_rows(ts.form);
  r["extension"] = extension_document(ts.extension);
  if (!o.out_path.empty()) write_file(o.out_path, extension_document(ts.extension));
  return exit_for(report.valid());
}

int cmd_metrised(const Options& o, Json& r) {
  const auto md = load_algebra(o.algebra);
  const auto report = is_metrised(md, load_matrix(o.form, md.dim(), md.dim(), "form"));
  append_report(r, report);
  return exit_for(report.valid());
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for modified differential 3-Lie algebras", "mdlie"};
  app.require_subcommand(1);
  Options o;
  using Handler = std::function<int(const Options&, Json&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto algebra_arg = [&](CLI::App* sub) { sub->add_option("algebra", o.algebra, "algebra document")->required(); };
  auto rep_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--rep", o.rep, "representation document, or 'adjoint' / 'coadjoint'");
    if (required) opt->required();
  };

  auto* verify = add("verify", "check the 3-Lie and differential axioms", cmd_verify);
  algebra_arg(verify);
  rep_opt(verify, false);

  auto* coh = add("cohomology", "dimensions of cocycles, coboundaries and cohomology", cmd_cohomology);
  algebra_arg(coh);
  rep_opt(coh, true);
  coh->add_option("--degree", o.degree, "cochain degree")->required();
  coh->add_flag("--representatives", o.representatives, "list cocycles spanning the cohomology");

  auto* deform = add("deform-check", "check a linear deformation order by order", cmd_deform_check);
  algebra_arg(deform);
  deform->add_option("--nu1", o.nu1, "first-order bracket tensor")->required();
  deform->add_option("--nu2", o.nu2, "second-order bracket tensor");
  deform->add_option("--d1", o.d1, "first-order differential matrix");

  auto* nij = add("nijenhuis-check", "check a Nijenhuis operator", cmd_nijenhuis);
  algebra_arg(nij);
  nij->add_option("--op", o.op, "operator matrix")->required();

  auto* oop = add("o-operator-check", "check an O-operator M -> A", cmd_o_operator);
  algebra_arg(oop);
  rep_opt(oop, true);
  oop->add_option("--op", o.op, "operator matrix (dim A x dim M)")->required();

  auto* ext = add("extend", "build the abelian extension from (f, g)", cmd_extend);
  algebra_arg(ext);
  rep_opt(ext, true);
  ext->add_option("--f", o.f, "M-valued skew tensor");
  ext->add_option("--g", o.g, "matrix A -> M");
  ext->add_option("--out", o.out_path, "also write the extension document here");

  auto* extract = add("extract-cocycle", "recover the cocycle of an extension from a section", cmd_extract);
  extract->add_option("extension", o.extension, "extension document")->required();
  extract->add_option("--section", o.section, "section matrix (defaults to a computed one)");

  auto* equiv = add("equiv-check", "decide whether two extensions are equivalent", cmd_equiv);
  equiv->add_option("ext1", o.extension, "first extension document")->required();
  equiv->add_option("ext2", o.extension2, "second extension document")->required();

  auto* tstar = add("tstar", "build the T*-extension and its pairing", cmd_tstar);
  algebra_arg(tstar);
  tstar->add_option("--f", o.f, "A*-valued skew tensor in dual coordinates");
  tstar->add_option("--g", o.g, "matrix A -> A*");
  tstar->add_option("--out", o.out_path, "also write the extension document here");

  auto* met = add("metrised-check", "check an invariant symmetric form", cmd_metrised);
  algebra_arg(met);
  met->add_option("--form", o.form, "form matrix")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitValid;
  } catch (const CLI::ParseError& e) {
    err << "mdlie: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    Json report = {{"schema", kReportSchema}, {"command", sub->get_name()}, {"arguments", args}};
    try {
      const int code = handler(o, report);
      out << report.dump(2) << '\n';
      return code;
    } catch (const InputError& e) {
      err << "mdlie: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  err << "mdlie: no subcommand\n";
  return kExitUsage;
}

}  // namespace mdlie::cli
