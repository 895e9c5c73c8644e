#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "gff/cli.hpp"
#include "gff/io.hpp"
#include "gff/linalg.hpp"
#include "testutil.hpp"

using gff::cli::run_command;
using testutil::fixture;
using testutil::temp_file;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bounds prints the classification line with the exit contract") {
    const auto parseval = run({"bounds", fixture("parseval.json").string()});
    CHECK(parseval.code == 0);
    CHECK(parseval.out == "lower=1 upper=1 kind=parseval\n");

    const auto weighted =
        run({"bounds", fixture("weighted_coordinate.json").string()});
    CHECK(weighted.code == 0);
    CHECK(weighted.out == "lower=1 upper=4 kind=frame\n");

    const auto bessel = run({"bounds", fixture("bessel_only.json").string()});
    CHECK(bessel.code == 1);
    CHECK(bessel.out == "lower=0 upper=1 kind=bessel_only\n");
}

TEST_CASE("malformed input exits 2 with a one-line diagnostic") {
    for (const char* cmd : {"bounds", "frame-op", "verify"}) {
        const auto res = run({cmd, fixture("malformed.json").string()});
        CHECK(res.code == 2);
        CHECK(res.err.find("ParseError") != std::string::npos);
        CHECK(res.err.find('\n') == res.err.size() - 1);
    }
    const auto missing = run({"bounds", "/nonexistent/gff.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("IoError") != std::string::npos);

    const auto usage = run({"bogus-subcommand"});
    CHECK(usage.code == 2);
}

TEST_CASE("dual writes the canonical dual or refuses with NotAFrame") {
    const auto out_path = temp_file("gff_cli_dual.json");
    const auto ok = run({"dual", fixture("weighted_coordinate.json").string(),
                         "-o", out_path.string()});
    CHECK(ok.code == 0);
    const auto dual = gff::io::load_system(out_path);
    // dual operators of the (2,1)-weighted coordinate system
    CHECK(std::abs(dual.component(0).op.at(0, 0) - gff::cplx{0.25, 0}) <= 1e-12);
    CHECK(std::abs(dual.component(1).op.at(0, 1) - gff::cplx{1.0, 0}) <= 1e-12);

    const auto refuse = run({"dual", fixture("bessel_only.json").string(),
                             "-o", out_path.string()});
    CHECK(refuse.code == 1);
    CHECK(refuse.err == "NotAFrame: lambda_min=0\n");
}

TEST_CASE("frame-op emits the dense operator") {
    const auto res =
        run({"frame-op", fixture("weighted_coordinate.json").string()});
    CHECK(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["rows"] == 2);
    CHECK(doc["entries"][0][0] == 4.0);
    CHECK(doc["entries"][3][0] == 1.0);
}

TEST_CASE("pair reports the operator and its norm") {
    const auto res = run({"pair", fixture("weighted_coordinate.json").string(),
                          fixture("weighted_coordinate.json").string()});
    CHECK(res.code == 0);
    const auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["operator_norm"].get<double>() == doctest::Approx(4.0));

    const auto mismatch = run({"pair", fixture("parseval.json").string(),
                               fixture("bessel_only.json").string()});
    CHECK(mismatch.code == 2);
    CHECK(mismatch.err.find("LocalSpaceMismatch") != std::string::npos);
}

TEST_CASE("tensor writes a loadable product system") {
    const auto out_path = temp_file("gff_cli_tensor.json");
    const auto res = run({"tensor", fixture("tensor_left_3.json").string(),
                          fixture("tensor_right_2.json").string(), "-o",
                          out_path.string()});
    CHECK(res.code == 0);
    const auto product = gff::io::load_system(out_path);
    CHECK(product.ambient_dim() == 6);
    CHECK(product.size() == 6);

    // bounds of the product are the products of the factor bounds
    const auto bl =
        optimal_bounds(gff::io::load_system(fixture("tensor_left_3.json")));
    const auto br =
        optimal_bounds(gff::io::load_system(fixture("tensor_right_2.json")));
    const auto bp = optimal_bounds(product);
    CHECK(bp.lower == doctest::Approx(bl.lower * br.lower).epsilon(1e-9));
    CHECK(bp.upper == doctest::Approx(bl.upper * br.upper).epsilon(1e-9));
}

TEST_CASE("verify passes on fixtures and writes byte-stable reports") {
    const auto report1 = temp_file("gff_cli_verify1.json");
    const auto report2 = temp_file("gff_cli_verify2.json");
    const std::vector<std::string> base{
        "verify", fixture("weighted_coordinate.json").string(), "--seed", "7"};

    auto args1 = base;
    args1.push_back("--json");
    args1.push_back(report1.string());
    const auto res1 = run(args1);
    CHECK(res1.code == 0);
    CHECK(res1.out.find("verify: PASS") != std::string::npos);

    auto args2 = base;
    args2.push_back("--json");
    args2.push_back(report2.string());
    const auto res2 = run(args2);
    CHECK(res2.code == 0);
    CHECK(res2.out == res1.out);
    CHECK(slurp(report1) == slurp(report2));

    const auto doc = nlohmann::json::parse(slurp(report1));
    CHECK(doc["pass"] == true);
    CHECK(doc["seed"] == 7);
    CHECK(doc["bounds"]["kind"] == "frame");
    for (auto it = doc["residuals"].begin(); it != doc["residuals"].end(); ++it)
        CHECK(it.value().get<double>() <=
              doc["thresholds"][it.key()].get<double>());
}

TEST_CASE("verify works on bessel_only systems without dual checks") {
    const auto res = run({"verify", fixture("bessel_only.json").string()});
    CHECK(res.code == 0);
    CHECK(res.out.find("reconstruction") == std::string::npos);
    CHECK(res.out.find("energy_identity") != std::string::npos);
}

TEST_CASE("verify exit codes distinguish failure from bad input") {
    // an absurdly tight tolerance turns roundoff into a verified failure
    const auto fail = run({"verify", fixture("tensor_left_3.json").string(),
                           "--tol", "1e-30"});
    CHECK(fail.code == 1);
    CHECK(fail.out.find("[FAIL]") != std::string::npos);
    CHECK(fail.out.find("verify: FAIL") != std::string::npos);

    const auto bad = run({"verify", fixture("parseval.json").string(), "--tol",
                          "-1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("BadParams") != std::string::npos);
}

TEST_CASE("frame-op writes to a file when asked") {
    const auto out_path = temp_file("gff_cli_frameop.json");
    const auto res = run({"frame-op", fixture("parseval.json").string(), "-o",
                          out_path.string()});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    const auto m = gff::io::matrix_from_json(gff::io::load_json(out_path));
    CHECK(gff::max_abs(m - gff::ComplexMatrix::identity(2)) <= 1e-15);
}

TEST_CASE("verify-tensor without primed systems skips the pair sections") {
    const auto report_path = temp_file("gff_cli_vt_plain.json");
    const auto res = run({"verify-tensor", fixture("tensor_left_3.json").string(),
                          fixture("tensor_right_2.json").string(), "--seed",
                          "7", "--json", report_path.string()});
    CHECK(res.code == 0);
    const auto doc = nlohmann::json::parse(slurp(report_path));
    CHECK(doc["pass"] == true);
    CHECK(doc["residuals"].contains("frame_op_factorization"));
    CHECK_FALSE(doc["residuals"].contains("pair_op_factorization"));
    for (auto it = doc["residuals"].begin(); it != doc["residuals"].end(); ++it)
        CHECK(it.value().get<double>() <= 1e-8);
}

TEST_CASE("verify-tensor with primed duals passes all sections") {
    const auto left_dual = temp_file("gff_cli_ldual.json");
    const auto right_dual = temp_file("gff_cli_rdual.json");
    REQUIRE(run({"dual", fixture("tensor_left_3.json").string(), "-o",
                 left_dual.string()})
                .code == 0);
    REQUIRE(run({"dual", fixture("tensor_right_2.json").string(), "-o",
                 right_dual.string()})
                .code == 0);

    const auto report_path = temp_file("gff_cli_vt.json");
    const auto res = run({"verify-tensor", fixture("tensor_left_3.json").string(),
                          fixture("tensor_right_2.json").string(), "--lp",
                          left_dual.string(), "--rp", right_dual.string(),
                          "--seed", "7", "--json", report_path.string()});
    CHECK(res.code == 0);
    const auto doc = nlohmann::json::parse(slurp(report_path));
    CHECK(doc["pass"] == true);
    CHECK(doc["residuals"].contains("pair_op_factorization"));
    CHECK(doc["residuals"].contains("dual_pairing_lower_bound_margin"));

    // determinism: a second run produces identical bytes
    const auto report_path2 = temp_file("gff_cli_vt2.json");
    const auto res2 = run({"verify-tensor", fixture("tensor_left_3.json").string(),
                           fixture("tensor_right_2.json").string(), "--lp",
                           left_dual.string(), "--rp", right_dual.string(),
                           "--seed", "7", "--json", report_path2.string()});
    CHECK(res2.code == 0);
    CHECK(slurp(report_path) == slurp(report_path2));

    const auto lonely = run({"verify-tensor", fixture("tensor_left_3.json").string(),
                             fixture("tensor_right_2.json").string(), "--lp",
                             left_dual.string()});
    CHECK(lonely.code == 2);
    CHECK(lonely.err.find("BadParams") != std::string::npos);
}

TEST_CASE("random generates identical files for identical seeds") {
    const auto path1 = temp_file("gff_cli_rand1.json");
    const auto path2 = temp_file("gff_cli_rand2.json");
    const auto res1 = run({"random", "--dim", "3", "--components", "2",
                           "--local-dims", "2,2", "--seed", "5", "-o",
                           path1.string()});
    const auto res2 = run({"random", "--dim", "3", "--components", "2",
                           "--local-dims", "2,2", "--seed", "5", "-o",
                           path2.string()});
    CHECK(res1.code == 0);
    CHECK(res2.code == 0);
    CHECK(slurp(path1) == slurp(path2));

    const auto loaded = gff::io::load_system(path1);
    CHECK(loaded.ambient_dim() == 3);
    CHECK(loaded.size() == 2);

    const auto bad = run({"random", "--dim", "3", "--components", "2",
                          "--local-dims", "2,2,2", "--seed", "1", "-o",
                          path1.string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("BadParams") != std::string::npos);
}

TEST_CASE("apply runs the four operator actions") {
    const auto vec_path = temp_file("gff_cli_vec.json");
    {
        gff::ComplexMatrix v(2, 1, {gff::cplx{1, 0}, gff::cplx{1, 0}});
        gff::io::save_json(gff::io::vector_to_json(v), vec_path);
    }
    const std::string sys = fixture("weighted_coordinate.json").string();

    const auto analysis_res =
        run({"apply", sys, "--vector", vec_path.string()});
    CHECK(analysis_res.code == 0);
    auto doc = nlohmann::json::parse(analysis_res.out);
    CHECK(doc["blocks"][0][0][0] == 2.0);
    CHECK(doc["blocks"][1][0][0] == 1.0);

    const auto frame_res = run(
        {"apply", sys, "--vector", vec_path.string(), "--op", "frame-op"});
    doc = nlohmann::json::parse(frame_res.out);
    CHECK(doc["entries"][0][0] == 4.0);
    CHECK(doc["entries"][1][0] == 1.0);

    const auto rec_res = run(
        {"apply", sys, "--vector", vec_path.string(), "--op", "reconstruct"});
    doc = nlohmann::json::parse(rec_res.out);
    CHECK(doc["rel_err"].get<double>() <= 1e-10);
    CHECK(doc["entries"][0][0].get<double>() == doctest::Approx(1.0));

    const auto coeff_path = temp_file("gff_cli_coeff.json");
    {
        gff::CoefficientFamily fam;
        fam.blocks.push_back(gff::ComplexMatrix(1, 1, {gff::cplx{2, 0}}));
        fam.blocks.push_back(gff::ComplexMatrix(1, 1, {gff::cplx{1, 0}}));
        gff::io::save_json(gff::io::coefficients_to_json(fam), coeff_path);
    }
    const auto synth_res = run({"apply", sys, "--vector", coeff_path.string(),
                                "--op", "synthesis"});
    doc = nlohmann::json::parse(synth_res.out);
    // sum v_i P_i Lambda_i^* c_i = (2*2, 1*1)
    CHECK(doc["entries"][0][0].get<double>() == doctest::Approx(4.0));
    CHECK(doc["entries"][1][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("help and version exit zero") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).out == "0.1.0\n");
    CHECK(run({}).code == 2);
}
