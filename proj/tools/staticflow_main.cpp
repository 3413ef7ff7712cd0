#include "staticflow/run_config.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Rotationally symmetric static-flow laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    for (const auto& name : {"flow", "expand", "residual", "verify"}) {
        CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " command");
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--out", out_path, "override the configured output path");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    std::optional<std::string> out_override;
    if (!out_path.empty()) out_override = out_path;

    try {
        const staticflow::RunConfig config = staticflow::load_config(config_path);
        const char* names[] = {"flow", "expand", "residual", "verify"};
        if (command != names[static_cast<int>(config.command)]) {
            std::fprintf(stderr, "config error: config command '%s' does not match subcommand '%s'\n",
                         names[static_cast<int>(config.command)], command.c_str());
            return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    }

    return staticflow::run_file(config_path, out_override);
}
