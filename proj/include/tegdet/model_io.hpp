#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tegdet/detector.hpp"

namespace tegdet {

inline constexpr int kModelFormatVersion = 1;

std::string serialize_model(const Model& model);

/// Throws VersionError on an unknown format version and FormatError on any
/// truncated or inconsistent document.
Model deserialize_model(std::string_view text);

void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace tegdet
