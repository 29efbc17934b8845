#ifndef INCPOLY_HARNESS_COMMANDS_HPP
#define INCPOLY_HARNESS_COMMANDS_HPP

#include <iosfwd>

#include "incpoly/harness/instance.hpp"

namespace incpoly::harness {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_violation = 2 };

struct CommandOptions {
    std::string command;
    std::optional<std::string> instance_path;
    // Raw flag text, overriding the instance file.
    std::optional<std::string> roots;
    std::optional<std::string> gamma;
    std::optional<std::string> pivot;
    std::optional<std::string> target;
    std::optional<std::string> point;
    std::optional<std::string> svg_path;
    std::optional<std::string> theorems;
    std::optional<std::string> report_path;
    std::optional<std::string> dump_dir;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    std::string family = "uniform-disc";
    bool pairwise = false;
    bool self_test = false;
    bool timing = false;
    bool json = false;
};

// Instance from --instance and the overriding flags. Pivot "best" is left
// unset here and resolved by the discs command.
InstanceSpec assemble_instance(const CommandOptions& opt);

// Runs one command; errors are reported on err and mapped to exit codes:
// 0 success, 1 usage or parse error, 2 violated check or failed reproduction.
int run_command(const CommandOptions& opt, std::ostream& out, std::ostream& err);

int cmd_roots(const CommandOptions& opt, std::ostream& out);
int cmd_verify(const CommandOptions& opt, std::ostream& out);
int cmd_recover(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_decompose(const CommandOptions& opt, std::ostream& out);
int cmd_discs(const CommandOptions& opt, std::ostream& out);
int cmd_fuzz(const CommandOptions& opt, std::ostream& out);
int cmd_counterexamples(std::ostream& out);

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_COMMANDS_HPP
