#include "gff/cli.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gff/errors.hpp"
#include "gff/io.hpp"
#include "gff/linalg.hpp"
#include "gff/tensor.hpp"
#include "gff/verify.hpp"
#include "gff/version.hpp"

namespace gff::cli {

namespace {

void print_bounds(const FrameBounds& b, std::ostream& out) {
    out << "lower=" << b.lower << " upper=" << b.upper
        << " kind=" << to_string(b.kind) << "\n";
}

void print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
    for (const auto& c : checks)
        out << (c.pass() ? "[PASS] " : "[FAIL] ") << c.name
            << " residual=" << c.residual << " threshold=" << c.threshold
            << "\n";
}

struct VerifyOptions {
    std::string path;
    double tol = 1e-8;
    int trials = 20;
    std::uint64_t seed = 0;
    std::string json_path;
};

int do_verify(const VerifyOptions& opt, std::ostream& out) {
    if (!(opt.tol > 0.0)) throw BadParams("--tol must be strictly positive");
    const GFusionSystem sys = io::load_system(opt.path);
    const Tolerance tol{Tolerance{}.rank_tol, opt.tol};
    const auto report = verify_system(sys, opt.trials, tol, opt.seed);
    print_bounds(report.bounds, out);
    print_checks(report.checks, out);
    out << "verify: " << (report.pass ? "PASS" : "FAIL") << "\n";
    if (!opt.json_path.empty())
        io::save_json(io::report_to_json(report.bounds, report.checks, opt.seed),
                      opt.json_path);
    return report.pass ? 0 : 1;
}

struct VerifyTensorOptions {
    std::string left_path;
    std::string right_path;
    std::string left_primed;
    std::string right_primed;
    double tol = 1e-8;
    int trials = 20;
    std::uint64_t seed = 0;
    std::string json_path;
};

int do_verify_tensor(const VerifyTensorOptions& opt, std::ostream& out) {
    if (!(opt.tol > 0.0)) throw BadParams("--tol must be strictly positive");
    const TensorSystem ts = tensor_system(io::load_system(opt.left_path),
                                          io::load_system(opt.right_path));
    if (opt.left_primed.empty() != opt.right_primed.empty())
        throw BadParams("--lp and --rp must be given together");
    std::optional<TensorSystem> primed;
    if (!opt.left_primed.empty())
        primed = tensor_system(io::load_system(opt.left_primed),
                               io::load_system(opt.right_primed));

    const Tolerance tol{Tolerance{}.rank_tol, opt.tol};
    const auto report =
        verify_tensor_identities(ts, opt.trials, tol, primed, opt.seed);
    const FrameBounds bounds = optimal_bounds(ts.product);
    print_bounds(bounds, out);
    print_checks(report.checks, out);
    out << "verify-tensor: " << (report.pass ? "PASS" : "FAIL") << "\n";
    if (!opt.json_path.empty())
        io::save_json(io::report_to_json(bounds, report.checks, opt.seed),
                      opt.json_path);
    return report.pass ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"Numerical laboratory for g-fusion frames and their tensor "
                 "products",
                 "gff"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string sys_path, other_path, out_path, vector_path, op_name;

    auto* cmd_bounds = app.add_subcommand(
        "bounds", "Optimal frame bounds and classification");
    cmd_bounds->add_option("sys", sys_path, "system file")->required();

    auto* cmd_frame_op =
        app.add_subcommand("frame-op", "Emit the frame operator S as JSON");
    cmd_frame_op->add_option("sys", sys_path, "system file")->required();
    cmd_frame_op->add_option("-o,--output", out_path, "output file");

    auto* cmd_dual =
        app.add_subcommand("dual", "Write the canonical dual system");
    cmd_dual->add_option("sys", sys_path, "system file")->required();
    cmd_dual->add_option("-o,--output", out_path, "output file")->required();

    auto* cmd_pair = app.add_subcommand(
        "pair", "Frame operator of a pair of Bessel systems");
    cmd_pair->add_option("A", sys_path, "first system file")->required();
    cmd_pair->add_option("B", other_path, "second system file")->required();
    cmd_pair->add_option("-o,--output", out_path, "output file");

    auto* cmd_tensor =
        app.add_subcommand("tensor", "Write the tensor-product system");
    cmd_tensor->add_option("L", sys_path, "left system file")->required();
    cmd_tensor->add_option("R", other_path, "right system file")->required();
    cmd_tensor->add_option("-o,--output", out_path, "output file")->required();

    VerifyOptions vopt;
    auto* cmd_verify =
        app.add_subcommand("verify", "Single-system identity checks");
    cmd_verify->add_option("sys", vopt.path, "system file")->required();
    cmd_verify->add_option("--tol", vopt.tol, "residual threshold");
    cmd_verify->add_option("--trials", vopt.trials, "random trials");
    cmd_verify->add_option("--seed", vopt.seed, "random seed");
    cmd_verify->add_option("--json", vopt.json_path, "write report JSON here");

    VerifyTensorOptions topt;
    auto* cmd_verify_tensor = app.add_subcommand(
        "verify-tensor", "Tensor-product identity checks");
    cmd_verify_tensor->add_option("L", topt.left_path, "left system file")
        ->required();
    cmd_verify_tensor->add_option("R", topt.right_path, "right system file")
        ->required();
    cmd_verify_tensor->add_option("--lp", topt.left_primed,
                                  "primed left system (enables pair checks)");
    cmd_verify_tensor->add_option("--rp", topt.right_primed,
                                  "primed right system");
    cmd_verify_tensor->add_option("--tol", topt.tol, "residual threshold");
    cmd_verify_tensor->add_option("--trials", topt.trials, "random trials");
    cmd_verify_tensor->add_option("--seed", topt.seed, "random seed");
    cmd_verify_tensor->add_option("--json", topt.json_path,
                                  "write report JSON here");

    io::RandomSystemParams rparams;
    std::vector<std::size_t> local_dims;
    auto* cmd_random =
        app.add_subcommand("random", "Generate a reproducible random system");
    cmd_random->add_option("--dim", rparams.ambient_dim, "ambient dimension")
        ->required();
    cmd_random
        ->add_option("--components", rparams.n_components, "component count")
        ->required();
    cmd_random->add_option("--local-dims", local_dims, "local dimensions")
        ->required()
        ->delimiter(',');
    cmd_random->add_option("--seed", rparams.seed, "random seed");
    cmd_random->add_option("-o,--output", out_path, "output file")->required();
    cmd_random->add_option("--weight-min", rparams.weight_lo, "weight lower bound");
    cmd_random->add_option("--weight-max", rparams.weight_hi, "weight upper bound");

    auto* cmd_apply =
        app.add_subcommand("apply", "Apply an operator of the system to data");
    cmd_apply->add_option("sys", sys_path, "system file")->required();
    cmd_apply->add_option("--vector", vector_path, "input data file")->required();
    op_name = "analysis";
    cmd_apply->add_option("--op", op_name, "operation")
        ->check(CLI::IsMember(
            {"analysis", "synthesis", "frame-op", "reconstruct"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "gff: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_bounds) {
            const FrameBounds b = optimal_bounds(io::load_system(sys_path));
            print_bounds(b, out);
            return b.kind == FrameKind::bessel_only ? 1 : 0;
        }
        if (*cmd_frame_op) {
            const auto doc =
                io::matrix_to_json(frame_operator(io::load_system(sys_path)));
            if (out_path.empty())
                out << doc.dump(2) << "\n";
            else
                io::save_json(doc, out_path);
            return 0;
        }
        if (*cmd_dual) {
            io::save_system(canonical_dual(io::load_system(sys_path)), out_path);
            return 0;
        }
        if (*cmd_pair) {
            const ComplexMatrix s = pair_frame_operator(
                io::load_system(sys_path), io::load_system(other_path));
            auto doc = io::matrix_to_json(s);
            doc["operator_norm"] = operator_norm_2(s);
            if (out_path.empty())
                out << doc.dump(2) << "\n";
            else
                io::save_json(doc, out_path);
            return 0;
        }
        if (*cmd_tensor) {
            const TensorSystem ts = tensor_system(io::load_system(sys_path),
                                                  io::load_system(other_path));
            io::save_system(ts.product, out_path);
            return 0;
        }
        if (*cmd_verify) return do_verify(vopt, out);
        if (*cmd_verify_tensor) return do_verify_tensor(topt, out);
        if (*cmd_random) {
            if (local_dims.size() == 1 && rparams.n_components > 1)
                local_dims.assign(rparams.n_components, local_dims.front());
            rparams.local_dims = local_dims;
            io::save_system(io::random_system(rparams), out_path);
            return 0;
        }
        if (*cmd_apply) {
            const GFusionSystem sys = io::load_system(sys_path);
            const auto doc = io::load_json(vector_path);
            if (op_name == "synthesis") {
                const CoefficientFamily fam = io::coefficients_from_json(doc);
                out << io::vector_to_json(synthesis(sys, fam)).dump(2) << "\n";
            } else if (op_name == "analysis") {
                const ComplexMatrix v = io::vector_from_json(doc);
                out << io::coefficients_to_json(analysis(sys, v)).dump(2) << "\n";
            } else if (op_name == "frame-op") {
                const ComplexMatrix v = io::vector_from_json(doc);
                out << io::vector_to_json(frame_operator(sys) * v).dump(2)
                    << "\n";
            } else {  // reconstruct
                const ComplexMatrix v = io::vector_from_json(doc);
                const Reconstruction rec = reconstruct(sys, v);
                auto result = io::vector_to_json(rec.f_rec);
                result["rel_err"] = rec.rel_err;
                out << result.dump(2) << "\n";
            }
            return 0;
        }
    } catch (const NotAFrame& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "gff: " << e.what() << "\n";
        return 2;
    }
    err << "gff: no subcommand given\n";
    return 2;
}

}  // namespace gff::cli
