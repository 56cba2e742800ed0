#include "treegb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "treegb/dimensions.hpp"
#include "treegb/groebner.hpp"
#include "treegb/oracle.hpp"
#include "treegb/presets.hpp"

namespace treegb {

namespace {

using nlohmann::json;

// Configuration problems share the "bad input" exit status with text
// parse errors.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int kArityGuard = 17;

const char* parity_name(Parity parity) {
    return parity == Parity::even ? "even" : "odd";
}

// Splits relation text into one statement per polynomial: ';' and newlines
// separate, '#' starts a line comment.
std::vector<std::string> split_statements(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    bool in_comment = false;
    for (char ch : text) {
        if (ch == '\n') {
            in_comment = false;
            ch = ';';
        }
        if (in_comment)
            continue;
        if (ch == '#') {
            in_comment = true;
            continue;
        }
        if (ch == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    std::erase_if(out, [](const std::string& s) {
        return s.find_first_not_of(" \t\r") == std::string::npos;
    });
    return out;
}

struct ResolvedInput {
    GradedContext ctx;
    std::vector<TreePolynomial> relations;
};

ResolvedInput resolve_relations(const RunConfig& config) {
    if (!config.preset.empty() && !config.relations.empty())
        throw ConfigError("--preset and --relations are mutually exclusive");

    if (!config.preset.empty()) {
        auto preset = find_preset(config.preset);
        if (!preset)
            throw ConfigError("unknown preset '" + config.preset + "'");
        if (config.m != preset->m)
            throw ConfigError("preset '" + preset->name + "' fixes m = " +
                              std::to_string(preset->m));
        return ResolvedInput{GradedContext{preset->m, config.parity},
                             preset_relations(*preset, config.parity)};
    }

    if (config.relations.empty())
        throw ConfigError("no relations given: use --preset or --relations");

    std::string text = config.relations;
    if (std::filesystem::exists(config.relations)) {
        std::ifstream in(config.relations);
        if (!in)
            throw ConfigError("cannot read relations file '" +
                              config.relations + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }

    GradedContext ctx{config.m, config.parity};
    ResolvedInput input{ctx, {}};
    for (const auto& statement : split_statements(text))
        input.relations.push_back(parse_poly(statement, ctx));
    if (input.relations.empty())
        throw ConfigError("relations input contains no polynomials");
    return input;
}

void validate_bounds(const RunConfig& config, int effective_bound) {
    if (config.m < 2)
        throw ConfigError("branching arity must be at least 2");
    if (config.arity_bound < 1 || config.n_max < 1)
        throw ConfigError("bounds must be positive");
    if (config.jobs < 1)
        throw ConfigError("--jobs must be at least 1");
    if (effective_bound > kArityGuard && !config.allow_large)
        throw ConfigError("arity bound " + std::to_string(effective_bound) +
                          " exceeds the default guard of " +
                          std::to_string(kArityGuard) +
                          "; pass --allow-large to override");
}

GroebnerBasis run_buchberger(const ResolvedInput& input,
                             const RunConfig& config, int bound,
                             std::ostream& err) {
    BuchbergerOptions options;
    options.max_additions = config.max_additions;
    auto t0 = std::chrono::steady_clock::now();
    GroebnerBasis gb = buchberger(input.relations, input.ctx, bound, options);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    // Timing is diagnostic only; it goes to the error stream so that the
    // report stream is identical across runs.
    err << std::fixed << std::setprecision(2) << "completion took "
        << dt.count() << " s\n";
    return gb;
}

json gb_to_json(const GroebnerBasis& gb) {
    json generators = json::array();
    for (const auto& g : gb.gens) {
        json terms = json::array();
        for (const auto& [t, c] : g.terms())
            terms.push_back({{"coeff", format_rational(c)},
                             {"tree", tree_to_text(t)}});
        generators.push_back({{"terms", std::move(terms)}});
    }
    json out{{"m", gb.ctx.m},
             {"parity", parity_name(gb.ctx.parity)},
             {"generators", std::move(generators)}};
    if (gb.complete_below_bound)
        out["complete_up_to_arity"] = gb.checked_bound;
    else
        out["complete_up_to_arity"] = nullptr;
    return out;
}

void print_gb_text(const GroebnerBasis& gb, std::ostream& out) {
    out << "m = " << gb.ctx.m << ", parity = " << parity_name(gb.ctx.parity)
        << "\n";
    if (gb.complete_below_bound)
        out << "reduced Groebner basis, complete up to arity "
            << gb.checked_bound << ": " << gb.gens.size() << " generator"
            << (gb.gens.size() == 1 ? "" : "s") << "\n";
    else
        out << "partial basis (completion gave up below arity "
            << gb.checked_bound << "): " << gb.gens.size() << " generator"
            << (gb.gens.size() == 1 ? "" : "s") << "\n";
    std::size_t idx = 0;
    for (const auto& g : gb.gens) {
        ++idx;
        out << "  [" << idx << "] arity " << g.arity() << ", lm "
            << tree_to_text(leading(g).first) << "\n";
        out << "      " << print_poly(g) << "\n";
    }
}

int run_command(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "parse error at offset " << e.position() << ": " << e.what()
            << "\n";
        return kExitParse;
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitParse;
    } catch (const IncompleteBasisError& e) {
        err << "incomplete basis: " << e.what() << "\n";
        return kExitIncomplete;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace

int cmd_gb(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_command(err, [&]() -> int {
        validate_bounds(config, config.arity_bound);
        ResolvedInput input = resolve_relations(config);
        GroebnerBasis gb =
            run_buchberger(input, config, config.arity_bound, err);
        if (config.format == "json")
            out << gb_to_json(gb).dump(2) << "\n";
        else
            print_gb_text(gb, out);
        if (!gb.complete_below_bound) {
            err << "completion stopped early: raise --max-additions or lower "
                   "--arity-bound\n";
            return kExitIncomplete;
        }
        return kExitOk;
    });
}

int cmd_dims(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_command(err, [&]() -> int {
        int bound = std::max(config.arity_bound, config.n_max);
        validate_bounds(config, bound);
        ResolvedInput input = resolve_relations(config);
        GroebnerBasis gb = run_buchberger(input, config, bound, err);
        if (!gb.complete_below_bound) {
            err << "completion stopped early: dimensions would be upper "
                   "bounds only\n";
            return kExitIncomplete;
        }
        DimensionReport report = dimension_series(
            gb, config.n_max, config.list_monomials, config.jobs);

        if (config.format == "json") {
            json dims = json::array();
            for (const auto& row : report.rows) {
                json entry{{"arity", row.arity},
                           {"weight", row.weight},
                           {"trees", row.trees},
                           {"dim", row.dim}};
                if (row.monomials) {
                    json trees = json::array();
                    for (const auto& t : *row.monomials)
                        trees.push_back(tree_to_text(t));
                    entry["monomials"] = std::move(trees);
                }
                dims.push_back(std::move(entry));
            }
            json doc{{"m", report.ctx.m},
                     {"parity", parity_name(report.ctx.parity)},
                     {"complete_up_to_arity", gb.checked_bound},
                     {"dims", std::move(dims)}};
            out << doc.dump(2) << "\n";
        } else {
            out << "m = " << report.ctx.m << ", parity = "
                << parity_name(report.ctx.parity) << "\n";
            out << "arity  weight  trees  dim\n";
            for (const auto& row : report.rows) {
                out << std::setw(5) << row.arity << "  " << std::setw(6)
                    << row.weight << "  " << std::setw(5) << row.trees << "  "
                    << std::setw(3) << row.dim << "\n";
                if (row.monomials)
                    for (const auto& t : *row.monomials)
                        out << "       " << tree_to_text(t) << "\n";
            }
        }
        return kExitOk;
    });
}

int cmd_reduce(const RunConfig& config, const std::string& poly_text,
               std::ostream& out, std::ostream& err) {
    return run_command(err, [&]() -> int {
        ResolvedInput input = resolve_relations(config);
        TreePolynomial target = parse_poly(poly_text, input.ctx);
        int bound = std::max(config.arity_bound,
                             target.is_zero() ? 1 : target.arity());
        validate_bounds(config, bound);
        GroebnerBasis gb = run_buchberger(input, config, bound, err);
        if (!gb.complete_below_bound) {
            err << "completion stopped early: normal form would not be "
                   "canonical\n";
            return kExitIncomplete;
        }
        TreePolynomial nf = normal_form(target, gb.gens);
        if (config.format == "json") {
            json terms = json::array();
            for (const auto& [t, c] : nf.terms())
                terms.push_back({{"coeff", format_rational(c)},
                                 {"tree", tree_to_text(t)}});
            json doc{{"m", input.ctx.m},
                     {"parity", parity_name(input.ctx.parity)},
                     {"normal_form", {{"terms", std::move(terms)}}}};
            out << doc.dump(2) << "\n";
        } else {
            out << print_poly(nf) << "\n";
        }
        return kExitOk;
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    return run_command(err, [&]() -> int {
        int bound = std::max(config.arity_bound, config.n_max);
        validate_bounds(config, bound);
        ResolvedInput input = resolve_relations(config);
        GroebnerBasis gb = run_buchberger(input, config, bound, err);
        if (!gb.complete_below_bound) {
            err << "completion stopped early: nothing to verify against\n";
            return kExitIncomplete;
        }
        CrossValidation cv =
            cross_validate(gb, input.relations, config.n_max, config.jobs);

        if (config.format == "json") {
            json rows = json::array();
            for (const auto& row : cv.rows)
                rows.push_back({{"arity", row.arity},
                                {"oracle_dim", row.oracle_dim},
                                {"basis_dim", row.basis_dim},
                                {"vectors_checked", row.vectors_checked},
                                {"vectors_reduce_to_zero",
                                 row.vectors_reduce_to_zero},
                                {"agree", row.agree}});
            json doc{{"m", input.ctx.m},
                     {"parity", parity_name(input.ctx.parity)},
                     {"complete_up_to_arity", gb.checked_bound},
                     {"ok", cv.ok},
                     {"arities", std::move(rows)}};
            out << doc.dump(2) << "\n";
        } else {
            out << "m = " << input.ctx.m << ", parity = "
                << parity_name(input.ctx.parity) << "\n";
            out << "arity  oracle  basis  vectors  all-reduce  agree\n";
            for (const auto& row : cv.rows) {
                out << std::setw(5) << row.arity << "  " << std::setw(6)
                    << row.oracle_dim << "  " << std::setw(5) << row.basis_dim
                    << "  " << std::setw(7) << row.vectors_checked << "  "
                    << std::setw(10) << (row.vectors_reduce_to_zero ? "yes" : "NO")
                    << "  " << (row.agree ? "yes" : "NO") << "\n";
            }
            out << (cv.ok ? "PASS" : "FAIL")
                << ": oracle and basis dimensions "
                << (cv.ok ? "agree" : "disagree") << " up to arity "
                << config.n_max << "\n";
        }
        return cv.ok ? kExitOk : kExitFailure;
    });
}

}  // namespace treegb
