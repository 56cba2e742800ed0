#include "treegb/presets.hpp"

namespace treegb {

const std::vector<Preset>& preset_registry() {
    static const std::vector<Preset> registry = {
        Preset{"pa",
               "partial associativity: ((***)**) + (*(***)*) + (**(***))",
               3,
               {"((***)**) + (*(***)*) + (**(***))"}},
    };
    return registry;
}

std::optional<Preset> find_preset(std::string_view name) {
    for (const auto& preset : preset_registry())
        if (preset.name == name)
            return preset;
    return std::nullopt;
}

std::vector<TreePolynomial> preset_relations(const Preset& preset,
                                             Parity parity) {
    GradedContext ctx{preset.m, parity};
    std::vector<TreePolynomial> out;
    out.reserve(preset.relation_texts.size());
    for (const auto& text : preset.relation_texts)
        out.push_back(parse_poly(text, ctx));
    return out;
}

}  // namespace treegb
