#pragma once

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "maasx/errors.hpp"

namespace maasx {

// nlohmann::json with the default std::map object backend: object keys are
// kept in byte-wise lexicographic order, which is the canonical wire order
// used throughout (see docs/wire-format.md).
using Json = nlohmann::json;

// Canonical dump: sorted keys, no insignificant whitespace, UTF-8,
// shortest round-trip doubles.
inline std::string canonical_dump(const Json& j) { return j.dump(); }

inline Json parse_json(std::string_view text, std::string_view what = "json") {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) raise(Errc::validation_failed, std::string(what) + ": malformed JSON");
  return j;
}

// File helpers. write_file_atomic writes to a sibling temp file and renames,
// so readers never observe a torn file.
std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace maasx
