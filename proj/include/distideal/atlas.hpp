#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distideal/graph.hpp"

namespace distideal {

struct AtlasEntry {
    std::string name;
    Graph graph;
};

/// Named small graphs: the four forbidden graphs for one trivial distance
/// ideal and the sixteen minimal forbidden graphs for two.
/// Throws GraphError for an unknown name.
const AtlasEntry& atlas(std::string_view name);

/// All twenty entries in catalogue order.
std::span<const AtlasEntry> atlas_entries();

/// Names of the family F (sixteen graphs, catalogue order).
std::span<const std::string_view> forbidden_family_names();

/// The eight members of F with diameter 2.
std::span<const std::string_view> diameter_two_family_names();

/// {P4, paw, diamond}, and the same plus C4.
std::span<const std::string_view> lambda1_names();
std::span<const std::string_view> lambda1_rational_names();

}  // namespace distideal
