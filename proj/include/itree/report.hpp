#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "itree/extractor.hpp"
#include "itree/graph.hpp"
#include "itree/lemmas.hpp"

namespace itree {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "itree-report/1";
inline constexpr const char* kVersion = "0.1.0";

// FNV-1a 64 over the canonical byte form of the input: graph6 when the
// order fits the codec, the edge-list text otherwise.
std::uint64_t fnv1a64(std::string_view bytes);
std::string input_digest(const Graph& g);

Json report_envelope(const std::string& command);
Json json_of_graph_input(const Graph& g);
Json json_of_check(const CheckResult& check);
Json json_of_trace(const ExtractionTrace& trace);
Json json_of_outcome(const SelectionOutcome& outcome);

}  // namespace itree
