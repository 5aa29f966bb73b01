#include "weilsurf/cache.hpp"

#include <fstream>
#include <ios>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace weilsurf::cache {

using nlohmann::json;

std::vector<std::int64_t> field_modulus(const gf::Field& field) {
  std::vector<std::int64_t> out;
  for (gf::Elem c : field.modulus()) out.push_back(c);
  return out;
}

std::string serialize(const gf::Field& field, const oracle::RealizedCounts& realized) {
  json doc;
  doc["q"] = field.size();
  doc["p"] = field.characteristic();
  doc["m"] = field.absolute_degree();
  doc["modulus"] = field_modulus(field);
  doc["version"] = kVersion;
  json rows = json::array();
  for (const auto& [ab, n] : realized) rows.push_back({ab.first, ab.second, n});
  doc["realized"] = std::move(rows);
  return doc.dump(1) + "\n";
}

std::optional<oracle::RealizedCounts> parse(const std::string& text, const gf::Field& field) {
  const json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  try {
    if (doc.at("version").get<std::string>() != kVersion) return std::nullopt;
    if (doc.at("q").get<std::int64_t>() != field.size()) return std::nullopt;
    if (doc.at("p").get<std::int64_t>() != field.characteristic()) return std::nullopt;
    if (doc.at("m").get<int>() != field.absolute_degree()) return std::nullopt;
    if (doc.at("modulus").get<std::vector<std::int64_t>>() != field_modulus(field)) return std::nullopt;
    oracle::RealizedCounts out;
    for (const auto& row : doc.at("realized")) {
      if (!row.is_array() || row.size() != 3) return std::nullopt;
      out[{row[0].get<std::int64_t>(), row[1].get<std::int64_t>()}] = row[2].get<std::int64_t>();
    }
    return out;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

std::filesystem::path default_path(const std::filesystem::path& dir, const gf::Field& field) {
  return dir / ("realized_q" + std::to_string(field.size()) + ".json");
}

std::optional<oracle::RealizedCounts> load(const std::filesystem::path& path, const gf::Field& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), field);
}

void store(const std::filesystem::path& path, const gf::Field& field,
           const oracle::RealizedCounts& realized) {
  const std::string text = serialize(field, realized);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::ios_base::failure("cannot open " + tmp.string() + " for writing");
    out << text;
    if (!out) throw std::ios_base::failure("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::ios_base::failure("cannot move cache into place at " + path.string() + ": " + ec.message());
}

}  // namespace weilsurf::cache
