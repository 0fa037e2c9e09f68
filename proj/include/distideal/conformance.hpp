#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "distideal/distance_ideals.hpp"
#include "distideal/groebner.hpp"

namespace distideal {

/// Where an expected value comes from: a value stated in the source
/// argument, one derived by arithmetic from stated values, or one computed
/// by this library and committed as a regression value.
enum class Source { Stated, Derived, Golden };

std::string to_string(Source s);

struct Check {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
    bool inconclusive = false;
    Source source = Source::Stated;
};

struct LemmaReport {
    std::string id;
    std::vector<Check> checks;
    bool pass = true;
    double elapsed_ms = 0;
};

struct HarnessOptions {
    GroebnerOptions groebner;
    std::uint64_t seed = TrivialityOptions{}.seed;
    unsigned jobs = 1;
    /// Odd cycles C_{2n+1} are checked for n = 4..odd_hole_n_max.
    int odd_hole_n_max = 10;
    /// Corpus size for the forbidden-subgraph theorem check in run_all.
    int corpus_n_max = 6;
};

/// 64-bit FNV-1a, used for transcription checksums.
std::uint64_t fnv1a(std::string_view text);

/// Verbatim polynomial sets, keyed "G_{6,7}/I", "G_{6,7}/J", "co-twin-house/I",
/// "co-twin-house/J", "co-twin-house/M'(3,3,2)", "G_{6,15}/I", "G_{6,15}/J".
std::string_view transcribed_set(std::string_view key);
std::vector<std::string> transcribed_set_keys();

LemmaReport verify_diameter2_members(const HarnessOptions& opts = {});
LemmaReport verify_bull(const HarnessOptions& opts = {});
LemmaReport verify_G65(const HarnessOptions& opts = {});
LemmaReport verify_5pan(const HarnessOptions& opts = {});
LemmaReport verify_G67(const HarnessOptions& opts = {});
LemmaReport verify_G69(const HarnessOptions& opts = {});
LemmaReport verify_cotwinhouse(const HarnessOptions& opts = {});
LemmaReport verify_G612(const HarnessOptions& opts = {});
LemmaReport verify_G615(const HarnessOptions& opts = {});
LemmaReport verify_odd_holes(int n_max, const HarnessOptions& opts = {});
/// Forbidden-subgraph theorem over the connected corpus with n <= corpus_n_max.
LemmaReport verify_forbidden_theorem(const HarnessOptions& opts = {});

std::vector<std::string> lemma_ids();
/// Runs one report by id (see lemma_ids()). Throws std::invalid_argument.
LemmaReport run_lemma(std::string_view id, const HarnessOptions& opts = {});

struct ConformanceReport {
    std::vector<LemmaReport> lemmas;
    bool pass = true;
    double elapsed_ms = 0;
};

ConformanceReport run_all(const HarnessOptions& opts = {});

nlohmann::json report_json(const LemmaReport& r);
nlohmann::json report_json(const ConformanceReport& r);

}  // namespace distideal
