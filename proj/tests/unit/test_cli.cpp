#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "documents.hpp"
#include "mdlie/catalog.hpp"
#include "mdlie/error.hpp"

using namespace mdlie;
using cli::Json;

namespace {

std::string data(const std::string& name) { return std::string(MDLIE_TEST_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  Json report;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  Json report = out.str().empty() ? Json() : Json::parse(out.str());
  return {code, std::move(report), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "mdlie_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(CliVerify, ExampleIsValid) {
  const auto r = run({"verify", data("example_e.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["schema"], "mdlie.report/1");
  EXPECT_EQ(r.report["command"], "verify");
  EXPECT_TRUE(r.report["valid"].get<bool>());
  EXPECT_TRUE(r.report["witnesses"].empty());
  EXPECT_EQ(run({"verify", data("example_e.json"), "--rep", "coadjoint"}).code, 0);
}

TEST(CliVerify, WitnessesAreOneBased) {
  const auto fi = run({"verify", data("not_3lie.json")});
  EXPECT_EQ(fi.code, 1);
  bool found = false;
  for (const auto& w : fi.report["witnesses"])
    if (w["law"] == "fundamental_identity" && w["args"] == Json::array({1, 2, 3, 4, 2})) {
      found = true;
      EXPECT_EQ(w["lhs"], Json::array({"0", "0", "0", "0"}));
      EXPECT_EQ(w["rhs"], Json::array({"0", "0", "0", "-1"}));
    }
  EXPECT_TRUE(found);

  const auto md = run({"verify", data("example_lambda0.json")});
  EXPECT_EQ(md.code, 1);
  ASSERT_EQ(md.report["witnesses"].size(), 1u);
  EXPECT_EQ(md.report["witnesses"][0]["law"], "modified_differential");
  EXPECT_EQ(md.report["witnesses"][0]["lhs"], Json::array({"1", "0", "0"}));
  EXPECT_EQ(md.report["witnesses"][0]["rhs"], Json::array({"6", "0", "0"}));

  const auto rep = run({"verify", data("example_e.json"), "--rep", data("adjoint_broken.json")});
  EXPECT_EQ(rep.code, 1);
  EXPECT_TRUE(rep.report["violations"].contains("rep_differential_law"));
  EXPECT_FALSE(rep.report["violations"].contains("rep_bracket_law"));
}

TEST(CliCohomology, Dimensions) {
  const auto r = run({"cohomology", data("example_e.json"), "--rep", "adjoint", "--degree", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["Z"], 2);
  EXPECT_EQ(r.report["B"], 0);
  EXPECT_EQ(r.report["H"], 2);
  EXPECT_FALSE(r.report.contains("representatives"));

  const auto t = run({"cohomology", data("abelian2.json"), "--rep", data("trivial1.json"), "--degree", "2",
                      "--representatives"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.report["H"], 4);
  EXPECT_EQ(t.report["representatives"].size(), 4u);

  const auto bad = run({"cohomology", data("example_lambda0.json"), "--rep", "adjoint", "--degree", "1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.report.contains("H"));
  EXPECT_EQ(run({"cohomology", data("example_e.json"), "--rep", "adjoint", "--degree", "0"}).code, 2);
}

TEST(CliOperators, Nijenhuis) {
  const auto bad = run({"nijenhuis-check", data("example_e.json"), "--op", data("e13.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.report["witnesses"][0]["law"], "nijenhuis_commutes");

  const auto good = run({"nijenhuis-check", data("example_e.json"), "--op", data("diag123.json")});
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(good.report["deformed_algebra"]["bracket"][0]["value"], Json({{"1", "6"}}));
}

TEST(CliOperators, OOperator) {
  const auto good = run({"o-operator-check", data("example_e.json"), "--rep", "adjoint", "--op", data("diag11m1.json")});
  EXPECT_EQ(good.code, 0);
  EXPECT_TRUE(good.report["lift_is_nijenhuis"].get<bool>());
  EXPECT_TRUE(good.report["inverse_is_cocycle"].get<bool>());

  const auto bad = run({"o-operator-check", data("example_e.json"), "--rep", "adjoint", "--op", data("identity3.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.report["lift_is_nijenhuis"].get<bool>());
  EXPECT_FALSE(bad.report["inverse_is_cocycle"].get<bool>());
}

TEST(CliDeformation, OrdersAndInfinitesimal) {
  const auto d1 = run({"deform-check", data("example_e.json"), "--nu1", data("nu_zero.json"), "--d1", data("d1_diag100.json")});
  EXPECT_EQ(d1.code, 0);
  EXPECT_TRUE(d1.report["infinitesimal_is_cocycle"].get<bool>());
  EXPECT_FALSE(d1.report["infinitesimal_is_coboundary"].get<bool>());

  const auto scaled = run({"deform-check", data("example_e.json"), "--nu1", data("nu_bracket.json")});
  EXPECT_EQ(scaled.code, 0);
  EXPECT_TRUE(scaled.report["infinitesimal_is_coboundary"].get<bool>());

  const auto bad = run({"deform-check", data("example_e.json"), "--nu1", data("nu_zero.json"), "--d1", data("e21.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(bad.report["violations"].contains("deformation_diff_t1"));
}

TEST(CliExtensions, BuildExtractCompare) {
  const auto with_g = scratch("derivation_ext.json");
  const auto plain = scratch("plain_ext.json");
  const auto r = run({"extend", data("example_e.json"), "--rep", "adjoint", "--g", data("derivation.json"), "--out",
                      with_g.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.report["cocycle"].get<bool>());
  EXPECT_EQ(run({"extend", data("example_e.json"), "--rep", "adjoint", "--out", plain.string()}).code, 0);

  const auto bad = run({"extend", data("example_e.json"), "--rep", "adjoint", "--g", data("e21.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.report["cocycle"].get<bool>());

  const auto ex = run({"extract-cocycle", with_g.string(), "--section", data("section_shift.json")});
  EXPECT_EQ(ex.code, 0);
  EXPECT_TRUE(ex.report["cocycle"].get<bool>());
  const auto canon = run({"extract-cocycle", with_g.string()});
  EXPECT_EQ(canon.report["mu"], cli::matrix_rows(Matrix::diagonal({0, 1, -1})));

  const auto ne = run({"equiv-check", with_g.string(), plain.string()});
  EXPECT_EQ(ne.code, 1);
  EXPECT_FALSE(ne.report["equivalent"].get<bool>());
  const auto same = run({"equiv-check", plain.string(), plain.string()});
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.report["eta"], cli::matrix_rows(Matrix::identity(6)));
}

TEST(CliExtensions, TStarAndForms) {
  const auto ts = run({"tstar", data("example_e.json")});
  EXPECT_EQ(ts.code, 0);
  EXPECT_TRUE(ts.report["metrised"].get<bool>());
  EXPECT_TRUE(ts.report["cyclic"].get<bool>());
  EXPECT_EQ(ts.report["form"], cli::read_json_file(data("form_hyperbolic.json"))["matrix"]);

  const auto id = run({"metrised-check", data("example_e.json"), "--form", data("identity3.json")});
  EXPECT_EQ(id.code, 1);
  EXPECT_TRUE(id.report["violations"].contains("form_invariant"));
}

TEST(CliErrors, UsageAndParseErrors) {
  auto expect_usage = [](std::vector<std::string> args, const std::string& fragment) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << args[0];
    EXPECT_TRUE(r.report.is_null());
    EXPECT_NE(r.err.find(fragment), std::string::npos) << r.err;
  };
  expect_usage({"verify", data("bad_scalar.json")}, "/bracket/0/value/1");
  expect_usage({"verify", data("bad_index.json")}, "/bracket/0/args/2");
  expect_usage({"verify", data("duplicate_triple.json")}, "duplicate triple");
  expect_usage({"verify", data("missing.json")}, "cannot open");
  expect_usage({"frobnicate"}, "subcommand");
  expect_usage({"nijenhuis-check", data("example_e.json")}, "--op");
  expect_usage({"nijenhuis-check", data("example_e.json"), "--op", data("section_shift.json")}, "3x3");
  expect_usage({"equiv-check", data("example_e.json"), data("example_e.json")}, "base");
}

TEST(CliReports, Deterministic) {
  const std::vector<std::string> args = {"cohomology", data("example_e.json"), "--rep", "adjoint", "--degree", "2",
                                         "--representatives"};
  std::ostringstream a, b, e;
  EXPECT_EQ(cli::run_command(args, a, e), 0);
  EXPECT_EQ(cli::run_command(args, b, e), 0);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Documents, RoundTrip) {
  const Json doc = cli::read_json_file(data("example_e.json"));
  const auto md = cli::parse_algebra(doc, "doc");
  EXPECT_EQ(md, catalog::example_e_md());
  const Json canon = cli::algebra_document(md);
  EXPECT_EQ(canon, doc);
  EXPECT_EQ(cli::parse_algebra(canon, "canon"), md);

  // Out-of-order entries, unreduced scalars and zero values canonicalize.
  const Json messy = Json::parse(R"({"dim": 3, "lambda": "2/4",
      "bracket": [{"args": [2, 3, 3], "value": {}}, {"args": [1, 2, 3], "value": {"2": "0", "1": "-6/4"}}]})");
  EXPECT_THROW(cli::parse_algebra(messy, "messy"), ParseError);
  const Json fixable = Json::parse(R"({"dim": 3, "lambda": "2/4",
      "bracket": [{"args": [1, 2, 3], "value": {"2": "0", "1": "-6/4"}}]})");
  const Json out = cli::algebra_document(cli::parse_algebra(fixable, "fixable"));
  EXPECT_EQ(out["lambda"], "1/2");
  EXPECT_EQ(out["bracket"][0]["value"], Json({{"1", "-3/2"}}));

  const auto rep = adjoint_representation(md);
  EXPECT_EQ(cli::parse_representation(cli::representation_document(rep), md, "rep"), rep);
  const auto t = catalog::simple_a4().bracket();
  EXPECT_EQ(cli::parse_tensor(cli::tensor_document(t), "t"), t);
  const auto ext = build_abelian_extension(md, rep, SkewTernaryTensor(3, 3), Matrix::diagonal({0, 1, -1}));
  const auto back = cli::parse_extension(cli::extension_document(ext), "ext");
  EXPECT_EQ(back.total, ext.total);
  EXPECT_EQ(back.inclusion, ext.inclusion);
  EXPECT_EQ(back.g, ext.g);
}

TEST(Documents, ScalarsRoundTrip) {
  for (const char* s : {"1/3", "-7", "0", "22/7"})
    EXPECT_EQ(cli::to_json(cli::parse_scalar_json(Json(s), "s")), Json(s));
  EXPECT_THROW(cli::parse_scalar_json(Json(3), "s"), ParseError);
  EXPECT_THROW(cli::parse_scalar_json(Json("2/-3"), "s"), ParseError);
}
