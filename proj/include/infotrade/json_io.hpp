#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "infotrade/bound_report.hpp"
#include "infotrade/measures.hpp"
#include "infotrade/protocol.hpp"

namespace infotrade {

using nlohmann::json;

json to_json(const Measure& mu);
json to_json(const FunctionTable& f);
json to_json(const ProtocolTree& pi);

// Mass sums may deviate from 1 by at most kLoadTolerance; the result is renormalized.
Measure measure_from_json(const json& j);
FunctionTable function_from_json(const json& j);
// Validates the tree (arity, probability ranges, depth); throws InvalidProtocol.
ProtocolTree protocol_from_json(const json& j);

// Canonical text: compact dump, keys sorted. load(save(pi)) reproduces it byte for byte.
std::string canonical_text(const ProtocolTree& pi);

std::uint64_t fnv1a(std::string_view bytes);
std::string digest(const Measure& mu);
std::string digest(const FunctionTable& f);
std::string digest(const ProtocolTree& pi);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace infotrade
