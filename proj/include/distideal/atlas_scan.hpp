#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "distideal/distance_ideals.hpp"
#include "distideal/graph.hpp"

namespace distideal {

// ---------------------------------------------------------------------------
// canonical forms and enumeration

/// Upper-triangle adjacency code of `g` under the vertex order `perm`
/// (perm[k] is the vertex placed at position k). Requires n <= 11.
std::uint64_t adjacency_code(const Graph& g, std::span<const int> perm);

/// Graph on n vertices with the given adjacency code.
Graph graph_from_code(int n, std::uint64_t code);

/// Maximum adjacency code over vertex orders that respect colour refinement.
/// Isomorphic graphs, and only those, get equal values. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// Maximum adjacency code over all n! vertex orders. n <= 8.
std::uint64_t canonical_code_bruteforce(const Graph& g);

inline Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

constexpr int kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, by vertex augmentation, sorted by canonical code.
/// Throws std::out_of_range unless 1 <= n <= 8.
std::vector<Graph> enumerate_connected_graphs(int n);

/// All connected graphs with 1..n_max vertices.
std::vector<Graph> connected_corpus(int n_max);

/// Same classes from all 2^(n(n-1)/2) labelled graphs with brute-force
/// canonical forms. n <= 6.
std::vector<Graph> enumerate_connected_graphs_bruteforce(int n);

/// Free trees on n vertices by leaf attachment with rooted-at-centre
/// canonical strings. 1 <= n <= 16.
std::vector<Graph> enumerate_trees(int n);

/// Canonical string of a free tree.
std::string tree_canonical_string(const Graph& tree);

// ---------------------------------------------------------------------------
// scans

enum class Family { F, Lambda1, Lambda1Rational, All };

Family parse_family(std::string_view name);
std::span<const std::string_view> family_names(Family f);

struct AtlasHit {
    std::string name;
    VertexSet witness;
};

struct ScanReport {
    std::string graph6;
    std::vector<AtlasHit> hits;
    std::optional<VertexSet> odd_hole;
    PhiResult phi;
    std::optional<bool> lambda1;
    std::optional<bool> lambda2;
    bool complete = true;

    bool has_forbidden_hit() const;
};

/// Structural part: induced copies of each member of `family`, and an odd
/// hole if one exists.
ScanReport forbidden_scan(const Graph& g, Family family = Family::F);

/// Same hits from exhaustive subset-and-permutation search.
std::vector<AtlasHit> forbidden_scan_bruteforce(const Graph& g, Family family = Family::F);

/// Structural scan plus Phi and the lambda flags (connected graphs only).
ScanReport full_scan(const Graph& g, Family family = Family::F, const TrivialityOptions& opts = {});

nlohmann::json scan_json(const ScanReport& r);

struct ContrapositiveSummary {
    std::size_t graphs = 0;
    std::size_t containing = 0;  // graphs with an F member or odd hole
    std::map<std::string, std::size_t> member_counts;
    std::size_t odd_hole_count = 0;
    std::vector<std::string> violations;
    std::vector<std::string> inconclusive;
    double elapsed_ms = 0;

    bool passed() const { return violations.empty(); }
};

/// Every corpus graph containing an F member or an odd hole must have its
/// first three distance ideals trivial.
ContrapositiveSummary verify_forbidden_contrapositive(const std::vector<Graph>& corpus,
                                                      const TrivialityOptions& opts = {}, unsigned jobs = 1);

struct CharacterizationSummary {
    std::size_t graphs = 0;
    std::size_t members_integer = 0;   // Phi <= 1 over Z
    std::size_t members_rational = 0;  // Phi <= 1 over Q
    std::vector<std::string> exceptions_integer;
    std::vector<std::string> exceptions_rational;
    std::vector<std::string> inconclusive;
    double elapsed_ms = 0;

    bool passed() const {
        return exceptions_integer.empty() && exceptions_rational.empty() && inconclusive.empty();
    }
};

/// Phi <= 1 iff {P4, paw, diamond}-free, and over the rationals iff
/// {P4, paw, diamond, C4}-free, for every connected graph with n <= n_max.
CharacterizationSummary verify_lambda1_characterizations(int n_max, const TrivialityOptions& opts = {},
                                                         unsigned jobs = 1);

nlohmann::json summary_json(const ContrapositiveSummary& s);
nlohmann::json summary_json(const CharacterizationSummary& s);

}  // namespace distideal
