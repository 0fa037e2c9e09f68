#include "distideal/atlas.hpp"

#include <algorithm>
#include <array>

namespace distideal {

namespace {

using E = std::pair<Vertex, Vertex>;

AtlasEntry entry(std::string name, int n, std::initializer_list<E> edges) {
    return AtlasEntry{std::move(name), Graph(n, edges)};
}

// Vertex labels follow the drawings the graphs were transcribed from.
const std::vector<AtlasEntry>& table() {
    static const std::vector<AtlasEntry> entries = {
        entry("P4", 4, {{0, 1}, {1, 2}, {2, 3}}),
        entry("paw", 4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}),
        entry("diamond", 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}),
        entry("C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
        entry("bull", 5, {{0, 4}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}),
        entry("dart", 5, {{0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
        entry("house", 5, {{0, 1}, {0, 4}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}),
        entry("gem", 5, {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
        entry("full-house", 5, {{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}),
        entry("G_{6,5}", 6, {{0, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 5}, {4, 5}}),
        entry("5-pan", 6, {{0, 5}, {1, 2}, {1, 4}, {2, 3}, {3, 5}, {4, 5}}),
        entry("G_{6,7}", 6, {{0, 4}, {1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 5}}),
        entry("G_{6,8}", 6, {{0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 5}, {4, 5}}),
        entry("G_{6,9}", 6, {{0, 5}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}),
        entry("G_{6,10}", 6, {{0, 1}, {0, 5}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
        entry("co-twin-house", 6, {{0, 5}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
        entry("G_{6,12}", 6, {{0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
        entry("co-twin-C5", 6, {{0, 1}, {0, 5}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}),
        entry("G_{6,14}", 6,
              {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
               {4, 5}}),
        entry("G_{6,15}", 7, {{0, 1}, {0, 6}, {1, 6}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}),
    };
    return entries;
}

constexpr std::array<std::string_view, 16> kFamily = {
    "bull",    "dart",     "house",   "gem",      "full-house",    "G_{6,5}",  "5-pan",      "G_{6,7}",
    "G_{6,8}", "G_{6,9}",  "G_{6,10}", "co-twin-house", "G_{6,12}", "co-twin-C5", "G_{6,14}", "G_{6,15}",
};

constexpr std::array<std::string_view, 8> kDiameterTwo = {
    "dart", "house", "gem", "full-house", "G_{6,8}", "G_{6,10}", "co-twin-C5", "G_{6,14}",
};

constexpr std::array<std::string_view, 3> kLambda1 = {"P4", "paw", "diamond"};
constexpr std::array<std::string_view, 4> kLambda1Rational = {"P4", "paw", "diamond", "C4"};

}  // namespace

const AtlasEntry& atlas(std::string_view name) {
    const auto& t = table();
    auto it = std::ranges::find_if(t, [&](const AtlasEntry& e) { return e.name == name; });
    if (it == t.end()) throw GraphError("unknown atlas graph: " + std::string(name));
    return *it;
}

std::span<const AtlasEntry> atlas_entries() { return table(); }

std::span<const std::string_view> forbidden_family_names() { return kFamily; }
std::span<const std::string_view> diameter_two_family_names() { return kDiameterTwo; }
std::span<const std::string_view> lambda1_names() { return kLambda1; }
std::span<const std::string_view> lambda1_rational_names() { return kLambda1Rational; }

}  // namespace distideal
