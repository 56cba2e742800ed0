// treegb: Groebner bases, dimension series, and normal forms for ideals in
// the free nonsymmetric operad on one m-ary operation.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "treegb/cli.hpp"
#include "treegb/presets.hpp"

namespace {

void add_common_options(CLI::App* sub, treegb::RunConfig& config) {
    sub->add_option("-m,--branching", config.m,
                    "branching arity of the generator (default 3)");
    std::map<std::string, treegb::Parity> parity_map{
        {"even", treegb::Parity::even}, {"odd", treegb::Parity::odd}};
    sub->add_option("--parity", config.parity,
                    "homological parity of the generator: even | odd")
        ->transform(CLI::CheckedTransformer(parity_map, CLI::ignore_case));
    sub->add_option("--preset", config.preset,
                    "named relation preset (see --list-presets)");
    sub->add_option("--relations", config.relations,
                    "relations: a file path if it exists, otherwise inline "
                    "text; statements separated by ';' or newlines, '#' "
                    "comments");
    sub->add_option("--arity-bound", config.arity_bound,
                    "consider overlaps up to this arity (default 9)");
    sub->add_option("--n-max", config.n_max,
                    "report dimensions/verification up to this arity "
                    "(default 9)");
    sub->add_option("--format", config.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", config.jobs,
                    "worker threads for per-arity computations (default 1)");
    sub->add_option("--max-additions", config.max_additions,
                    "give up completion after this many new generators")
        ->group("");  // hidden: a safety valve, not a tuning knob
    sub->add_flag("--allow-large", config.allow_large,
                  "lift the default arity guard of 17");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Groebner bases for ideals in the free nonsymmetric operad on one "
        "m-ary operation"};
    app.require_subcommand(0, 1);

    treegb::RunConfig config;
    std::string reduce_text;
    bool list_presets = false;
    app.add_flag("--list-presets", list_presets,
                 "list the registered relation presets and exit");

    CLI::App* gb = app.add_subcommand(
        "gb", "compute the reduced Groebner basis up to the arity bound");
    add_common_options(gb, config);

    CLI::App* dims = app.add_subcommand(
        "dims", "dimension series of the quotient up to --n-max");
    add_common_options(dims, config);
    dims->add_flag("--list", config.list_monomials,
                   "also list the normal monomials of each arity");

    CLI::App* reduce = app.add_subcommand(
        "reduce", "normal form of a polynomial modulo the completed basis");
    add_common_options(reduce, config);
    reduce->add_option("polynomial", reduce_text,
                       "polynomial text, e.g. \"((***)**)\"")
        ->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check basis dimensions against the span oracle");
    add_common_options(verify, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return treegb::kExitParse;
    }

    if (list_presets) {
        for (const auto& preset : treegb::preset_registry())
            std::cout << preset.name << "  (m = " << preset.m << ")  "
                      << preset.description << "\n";
        return treegb::kExitOk;
    }

    if (gb->parsed())
        return treegb::cmd_gb(config, std::cout, std::cerr);
    if (dims->parsed())
        return treegb::cmd_dims(config, std::cout, std::cerr);
    if (reduce->parsed())
        return treegb::cmd_reduce(config, reduce_text, std::cout, std::cerr);
    if (verify->parsed())
        return treegb::cmd_verify(config, std::cout, std::cerr);

    std::cout << app.help();
    return treegb::kExitOk;
}
