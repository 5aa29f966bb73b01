#pragma once

// On-disk form of a realized map: one JSON document per field size.

#include <filesystem>
#include <optional>
#include <string>

#include "weilsurf/gf.hpp"
#include "weilsurf/oracle.hpp"

namespace weilsurf::cache {

inline constexpr const char* kVersion = "weilsurf-oracle/1";

/// Field modulus over GF(p), lowest coefficient first.
std::vector<std::int64_t> field_modulus(const gf::Field& field);

/// Deterministic serialization with a trailing newline.
std::string serialize(const gf::Field& field, const oracle::RealizedCounts& realized);

/// Parses a document; empty when it is malformed or when q, p, m, modulus
/// or version disagree with `field`.
std::optional<oracle::RealizedCounts> parse(const std::string& text, const gf::Field& field);

std::filesystem::path default_path(const std::filesystem::path& dir, const gf::Field& field);

std::optional<oracle::RealizedCounts> load(const std::filesystem::path& path, const gf::Field& field);

/// Throws std::ios_base::failure on I/O failure.
void store(const std::filesystem::path& path, const gf::Field& field,
           const oracle::RealizedCounts& realized);

}  // namespace weilsurf::cache
