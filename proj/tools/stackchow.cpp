#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "stackchow/commands.hpp"

namespace {

void add_render_flags(CLI::App* cmd, stackchow::RenderOptions& options, std::string& format) {
    cmd->add_flag("--simplify", options.simplify, "Simplify the presentation");
    cmd->add_option("--graded", options.graded_degree,
                    "Print graded invariants up to this degree (0..12)");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    cmd->add_flag("--skip-fan-check", options.skip_fan_check,
                  "Skip the fan validity phase (unsafe on unverified input)");
    cmd->add_flag("--verbose", options.verbose, "Echo the normalized lift matrix");
}

stackchow::RenderFormat to_format(const std::string& name) {
    if (name == "latex") return stackchow::RenderFormat::latex;
    if (name == "json") return stackchow::RenderFormat::json_doc;
    return stackchow::RenderFormat::text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chow ring presentations of smooth toric stacks"};
    app.require_subcommand(1);

    std::string check_input;
    bool check_skip = false;
    CLI::App* check = app.add_subcommand("check", "Validate the fan and theorem hypotheses");
    check->add_option("input", check_input, "JSON input document")->required();
    check->add_flag("--skip-fan-check", check_skip,
                    "Skip the fan validity phase (unsafe on unverified input)");

    std::string chow_input, chow_format = "text";
    stackchow::RenderOptions chow_options;
    CLI::App* chow = app.add_subcommand("chow", "Print the Chow ring presentation");
    chow->add_option("input", chow_input, "JSON input document")->required();
    add_render_flags(chow, chow_options, chow_format);

    std::string fanta_input, fanta_format = "text";
    stackchow::RenderOptions fanta_options;
    CLI::App* fanta = app.add_subcommand("fantastack", "Chow ring of a fantastack document");
    fanta->add_option("input", fanta_input, "fantastack mode JSON input document")->required();
    add_render_flags(fanta, fanta_options, fanta_format);

    std::string compare_input, compare_target;
    int compare_degree = 6;
    bool compare_skip = false;
    CLI::App* compare =
        app.add_subcommand("compare", "Compare graded invariants against a target ring");
    compare->add_option("input", compare_input, "JSON input document")->required();
    compare->add_option("--target", compare_target,
                        "Target relations file or inline relation list")
        ->required();
    compare->add_option("--max-degree", compare_degree, "Compare up to this degree (0..12)")
        ->capture_default_str();
    compare->add_flag("--skip-fan-check", compare_skip,
                      "Skip the fan validity phase (unsafe on unverified input)");

    std::string examples_name, examples_out;
    CLI::App* examples = app.add_subcommand("examples", "Emit a canonical fixture document");
    examples->add_option("name", examples_name, "One of: p64, blowupA3, bg, fanta")->required();
    examples->add_option("--out", examples_out, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed())
        return stackchow::cmd_check(check_input, check_skip, std::cout, std::cerr);
    if (chow->parsed()) {
        chow_options.format = to_format(chow_format);
        return stackchow::cmd_chow(chow_input, chow_options, std::cout, std::cerr);
    }
    if (fanta->parsed()) {
        fanta_options.format = to_format(fanta_format);
        return stackchow::cmd_fantastack(fanta_input, fanta_options, std::cout, std::cerr);
    }
    if (compare->parsed())
        return stackchow::cmd_compare(compare_input, compare_target, compare_degree,
                                      compare_skip, std::cout, std::cerr);
    if (examples->parsed())
        return stackchow::cmd_examples(examples_name, examples_out, std::cout, std::cerr);
    return 2;
}
