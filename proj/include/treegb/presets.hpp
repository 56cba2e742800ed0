// Named relation presets selectable from the CLI.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treegb/polynomial.hpp"

namespace treegb {

struct Preset {
    std::string name;
    std::string description;
    int m = 3;
    std::vector<std::string> relation_texts;
};

// Registered presets. "pa" is partial associativity: the ternary relation
// (t o1 t) + (t o2 t) + (t o3 t) = 0.
const std::vector<Preset>& preset_registry();

std::optional<Preset> find_preset(std::string_view name);

// Parses the preset's relations in the given context (the preset fixes m;
// parity comes from the caller).
std::vector<TreePolynomial> preset_relations(const Preset& preset,
                                             Parity parity);

}  // namespace treegb
