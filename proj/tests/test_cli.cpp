#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "treegb/cli.hpp"
#include "treegb/groebner.hpp"
#include "treegb/presets.hpp"

using namespace treegb;
using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

template <typename Cmd>
Run capture(Cmd&& cmd) {
    std::ostringstream out, err;
    Run r;
    r.code = cmd(out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Run run_gb(const RunConfig& config) {
    return capture([&](std::ostream& o, std::ostream& e) {
        return cmd_gb(config, o, e);
    });
}

Run run_dims(const RunConfig& config) {
    return capture([&](std::ostream& o, std::ostream& e) {
        return cmd_dims(config, o, e);
    });
}

Run run_reduce(const RunConfig& config, const std::string& text) {
    return capture([&](std::ostream& o, std::ostream& e) {
        return cmd_reduce(config, text, o, e);
    });
}

Run run_verify(const RunConfig& config) {
    return capture([&](std::ostream& o, std::ostream& e) {
        return cmd_verify(config, o, e);
    });
}

RunConfig preset_config() {
    RunConfig config;
    config.preset = "pa";
    return config;
}

}  // namespace

TEST_CASE("gb text output is pinned") {
    Run r = run_gb(preset_config());
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "m = 3, parity = even\n"
          "reduced Groebner basis, complete up to arity 9: 5 generators\n"
          "  [1] arity 5, lm ((***)**)\n"
          "      ((***)**) + (*(***)*) + (**(***))\n"
          "  [2] arity 7, lm (*(**(***))*)\n"
          "      (*(**(***))*) + (**(*(***)*)) + (**(**(***)))\n"
          "  [3] arity 9, lm (**(**(**(***))))\n"
          "      (**(**(**(***))))\n"
          "  [4] arity 9, lm (**(*(***)(***)))\n"
          "      (**(*(***)(***)))\n"
          "  [5] arity 9, lm (*(***)(*(***)*))\n"
          "      (*(***)(*(***)*)) + (*(***)(**(***)))\n");
    // Timing goes to the error stream so stdout stays deterministic.
    CHECK(r.err.find("completion took") != std::string::npos);
    CHECK(run_gb(preset_config()).out == r.out);
}

TEST_CASE("gb json matches the computed basis term for term") {
    RunConfig config = preset_config();
    config.format = "json";
    Run r = run_gb(config);
    CHECK(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["m"] == 3);
    CHECK(j["parity"] == "even");
    CHECK(j["complete_up_to_arity"] == 9);

    GroebnerBasis gb =
        buchberger(preset_relations(*find_preset("pa"), Parity::even),
                   GradedContext{3, Parity::even}, 9);
    REQUIRE(j["generators"].size() == gb.gens.size());
    for (std::size_t k = 0; k < gb.gens.size(); ++k) {
        const auto& terms = j["generators"][k]["terms"];
        REQUIRE(terms.size() == gb.gens[k].term_count());
        std::size_t pos = 0;
        for (const auto& [tree, coeff] : gb.gens[k].terms()) {
            CHECK(terms[pos]["tree"] == tree_to_text(tree));
            CHECK(terms[pos]["coeff"] == format_rational(coeff));
            ++pos;
        }
    }
}

TEST_CASE("dims text output is pinned for the binary operation") {
    RunConfig config;
    config.m = 2;
    config.relations = "((**)*) - (*(**))";
    config.arity_bound = 6;
    config.n_max = 6;
    Run r = run_dims(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "m = 2, parity = even\n"
          "arity  weight  trees  dim\n"
          "    1       0      1    1\n"
          "    2       1      1    1\n"
          "    3       2      2    1\n"
          "    4       3      5    1\n"
          "    5       4     14    1\n"
          "    6       5     42    1\n");
}

TEST_CASE("the binary associativity basis is the single rewrite rule") {
    RunConfig config;
    config.m = 2;
    config.relations = "((**)*) - (*(**))";
    config.arity_bound = 6;
    Run r = run_gb(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "m = 2, parity = even\n"
          "reduced Groebner basis, complete up to arity 6: 1 generator\n"
          "  [1] arity 3, lm ((**)*)\n"
          "      ((**)*) - (*(**))\n");
}

TEST_CASE("dims json carries the dimension table") {
    RunConfig config = preset_config();
    config.parity = Parity::odd;
    config.n_max = 7;
    config.format = "json";
    config.list_monomials = true;
    Run r = run_dims(config);
    CHECK(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["parity"] == "odd");
    CHECK(j["complete_up_to_arity"] == 9);
    REQUIRE(j["dims"].size() == 4);
    CHECK(j["dims"][0] ==
          json({{"arity", 1},
                {"weight", 0},
                {"trees", 1},
                {"dim", 1},
                {"monomials", {"*"}}}));
    CHECK(j["dims"][3]["trees"] == 12);
    CHECK(j["dims"][3]["dim"] == 5);
    CHECK(j["dims"][2]["monomials"] ==
          json({"(**(***))", "(*(***)*)"}));
}

TEST_CASE("reduce prints pinned normal forms") {
    RunConfig config = preset_config();
    CHECK(run_reduce(config, "((***)**)").out ==
          "- (*(***)*) - (**(***))\n");
    CHECK(run_reduce(config, "2*((***)**) + (*(***)*)").out ==
          "- (*(***)*) - 2 * (**(***))\n");
    CHECK(run_reduce(config,
                     "(*(**(***))*) + (**(*(***)*)) + (**(**(***)))")
              .out == "0\n");
    CHECK(run_reduce(config, "(**(***))").out == "(**(***))\n");
}

TEST_CASE("verify text output is pinned") {
    RunConfig config = preset_config();
    Run r = run_verify(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "m = 3, parity = even\n"
          "arity  oracle  basis  vectors  all-reduce  agree\n"
          "    1       1      1        0         yes  yes\n"
          "    3       1      1        0         yes  yes\n"
          "    5       2      2        1         yes  yes\n"
          "    7       4      4        8         yes  yes\n"
          "    9       5      5       55         yes  yes\n"
          "PASS: oracle and basis dimensions agree up to arity 9\n");
}

TEST_CASE("verify json carries per-arity agreement rows") {
    RunConfig config = preset_config();
    config.n_max = 7;
    config.format = "json";
    Run r = run_verify(config);
    CHECK(r.code == kExitOk);
    json j = json::parse(r.out);
    CHECK(j["ok"] == true);
    REQUIRE(j["arities"].size() == 4);
    CHECK(j["arities"][3] == json({{"arity", 7},
                                   {"oracle_dim", 4},
                                   {"basis_dim", 4},
                                   {"vectors_checked", 8},
                                   {"vectors_reduce_to_zero", true},
                                   {"agree", true}}));
}

TEST_CASE("worker count never changes the report") {
    RunConfig one = preset_config();
    one.n_max = 11;
    one.arity_bound = 11;
    one.list_monomials = true;
    RunConfig four = one;
    four.jobs = 4;
    CHECK(run_dims(one).out == run_dims(four).out);
    one.n_max = 9;
    four.n_max = 9;
    CHECK(run_verify(one).out == run_verify(four).out);
}

TEST_CASE("relations can come from a file with comments") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "treegb_relations_test.txt";
    {
        std::ofstream file(path);
        file << "# defining relation, one statement per line or ';'\n";
        file << "((***)**) + (*(***)*) + (**(***))\n";
    }
    RunConfig config;
    config.relations = path.string();
    Run from_file = run_gb(config);
    CHECK(from_file.code == kExitOk);
    CHECK(from_file.out == run_gb(preset_config()).out);
    fs::remove(path);
}

TEST_CASE("inline relations split on semicolons") {
    RunConfig config;
    config.relations = "(***); ((***)**) + (*(***)*) + (**(***))";
    Run r = run_gb(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("1 generator\n") != std::string::npos);
    CHECK(r.out.find("lm (***)") != std::string::npos);
}

TEST_CASE("configuration errors exit with status 2") {
    RunConfig bad_poly = preset_config();
    Run r = run_reduce(bad_poly, "((***)**");
    CHECK(r.code == kExitParse);
    CHECK(r.err == "parse error at offset 8: expected ')'\n");

    RunConfig unknown;
    unknown.preset = "nope";
    r = run_gb(unknown);
    CHECK(r.code == kExitParse);
    CHECK(r.err == "configuration error: unknown preset 'nope'\n");

    RunConfig both = preset_config();
    both.relations = "(***)";
    r = run_gb(both);
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("mutually exclusive") != std::string::npos);

    RunConfig neither;
    r = run_gb(neither);
    CHECK(r.code == kExitParse);

    RunConfig huge = preset_config();
    huge.arity_bound = 19;
    r = run_gb(huge);
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("--allow-large") != std::string::npos);

    // A relations value that is not a readable file is parsed inline.
    RunConfig missing;
    missing.relations = "/no/such/file.txt";
    r = run_gb(missing);
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("parse error") != std::string::npos);
}

TEST_CASE("the arity guard can be lifted explicitly") {
    RunConfig config;
    config.m = 2;
    config.relations = "((**)*) - (*(**))";
    config.arity_bound = 19;
    config.allow_large = true;
    Run r = run_gb(config);
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("complete up to arity 19") != std::string::npos);
}

TEST_CASE("an exhausted completion budget exits with status 3") {
    RunConfig config = preset_config();
    config.max_additions = 1;
    Run r = run_gb(config);
    CHECK(r.code == kExitIncomplete);
    CHECK(r.err.find("completion stopped early") != std::string::npos);

    config.format = "json";
    r = run_gb(config);
    CHECK(r.code == kExitIncomplete);
    json j = json::parse(r.out);
    CHECK(j["complete_up_to_arity"].is_null());
    CHECK(j["generators"].size() == 2);
}

TEST_CASE("an oracle memory cap failure exits with status 1") {
    setenv("TREEGB_ORACLE_MAX_MB", "1", 1);
    RunConfig config = preset_config();
    config.n_max = 15;
    config.arity_bound = 15;
    Run r = run_verify(config);
    unsetenv("TREEGB_ORACLE_MAX_MB");
    CHECK(r.code == kExitFailure);
    CHECK(r.err.find("TREEGB_ORACLE_MAX_MB") != std::string::npos);
}

TEST_CASE("the installed binary round-trips json output") {
    std::string command = std::string(TREEGB_BINARY_PATH) +
                          " gb --preset pa --parity even --arity-bound 9"
                          " --format json 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    json j = json::parse(output);
    CHECK(j["generators"].size() == 5);
    CHECK(j["complete_up_to_arity"] == 9);
}

TEST_CASE("the binary reports argument errors with status 2") {
    std::string command = std::string(TREEGB_BINARY_PATH) +
                          " gb --no-such-flag >/dev/null 2>&1";
    int status = std::system(command.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);

    command = std::string(TREEGB_BINARY_PATH) +
              " reduce --preset pa '((***)**' >/dev/null 2>&1";
    status = std::system(command.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("the binary lists presets") {
    std::string command = std::string(TREEGB_BINARY_PATH) +
                          " --list-presets 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[1024];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        output.append(buffer, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(output.find("pa") != std::string::npos);
    CHECK(output.find("partial associativity") != std::string::npos);
}
