#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "sdt/extremal.hpp"
#include "sdt/verify.hpp"

namespace sdt {

using Json = nlohmann::ordered_json;

/// Finite values as JSON numbers, infinity as the string "inf".
Json json_value(ExtendedNat v);

Json extremal_report(const ExtremalResult& result);
/// Inverse of extremal_report, for merging shard documents.
ExtremalResult extremal_from_report(const Json& doc);
std::string extremal_csv(const ExtremalResult& result);

Json suite_report(const SuiteReport& suite);
std::string suite_csv(const SuiteReport& suite);

/// Attaches meta.elapsed_ms (zero when stable) and serializes with a stable
/// field order, trailing newline included.
std::string render_document(Json doc, std::int64_t elapsed_ms, bool stable);

}  // namespace sdt
