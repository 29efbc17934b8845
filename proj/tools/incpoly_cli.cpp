#include <iostream>

#include <CLI11.hpp>

#include "incpoly/harness/commands.hpp"

using incpoly::harness::CommandOptions;

namespace {

void instance_flags(CLI::App* sub, CommandOptions& opt)
{
    sub->add_option("--instance", opt.instance_path, "InstanceSpec JSON file");
    sub->add_option("--roots", opt.roots, "roots as a comma-separated list, e.g. 0,1,i");
    sub->add_option("--gamma", opt.gamma, "weights as a comma-separated list (default uniform)");
    sub->add_option("--pivot", opt.pivot, "1-based pivot index");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zero localization for convex combinations of incomplete polynomials"};
    app.set_version_flag("--version", std::string(INCPOLY_VERSION));
    app.require_subcommand(1);
    CommandOptions opt;

    auto* roots = app.add_subcommand("roots", "zeros of the combination with residuals");
    instance_flags(roots, opt);
    roots->add_flag("--pairwise", opt.pairwise, "use the instance's g_ij pair weights");
    roots->add_flag("--json", opt.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "run the invariant checks; exit 2 on any violation");
    instance_flags(verify, opt);
    verify->add_option("--theorems", opt.theorems, "comma-separated check ids, or all");
    verify->add_flag("--self-test", opt.self_test, "run the checkers on fabricated violations");
    verify->add_option("--report", opt.report_path, "re-check a saved verification report");
    verify->add_flag("--timing", opt.timing, "include per-check runtimes");

    auto* recover = app.add_subcommand("recover", "weights placing a zero at a hull point");
    instance_flags(recover, opt);
    recover->add_option("--point", opt.point, "target point, e.g. 0.3+0.3i");

    auto* decompose = app.add_subcommand("decompose", "expand a target in the incomplete basis");
    instance_flags(decompose, opt);
    decompose->add_option("--target", opt.target, "ascending target coefficients, comma-separated");

    auto* discs = app.add_subcommand("discs", "trace disc and Gershgorin union");
    instance_flags(discs, opt);
    discs->add_option("--svg", opt.svg_path, "write an SVG picture");

    auto* fuzz = app.add_subcommand("fuzz", "seeded randomized checking");
    fuzz->add_option("--seed", opt.seed, "master seed")->capture_default_str();
    fuzz->add_option("--trials", opt.trials, "number of instances")->capture_default_str();
    fuzz->add_option("--family", opt.family,
                     "uniform-disc, real-rooted, clustered, repeated-roots, boundary-gamma or all")
        ->capture_default_str();
    fuzz->add_option("--dump", opt.dump_dir, "directory for reproducer instances");

    app.add_subcommand("counterexamples", "reproduce the two counterexamples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return incpoly::harness::exit_usage;
    }
    opt.command = app.get_subcommands().front()->get_name();
    return incpoly::harness::run_command(opt, std::cout, std::cerr);
}
