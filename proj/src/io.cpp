#include "ifam/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ifam {

std::string to_json_string(const SetFamily& f) {
  nlohmann::ordered_json j;
  j["points"] = f.labels();
  auto blocks = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.size(); ++i) blocks.push_back(f.block_members(i));
  j["blocks"] = std::move(blocks);
  return j.dump() + "\n";
}

SetFamily family_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Err::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j.contains("blocks"))
    throw Error(Err::ParseError, "expected an object with \"points\" and \"blocks\"");
  if (!j["points"].is_array() || !j["blocks"].is_array())
    throw Error(Err::ParseError, "\"points\" and \"blocks\" must be arrays");

  std::vector<Label> labels;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw Error(Err::ParseError, "point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  std::vector<std::vector<PointId>> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_array()) throw Error(Err::ParseError, "each block must be an array of indices");
    std::vector<PointId> members;
    for (const auto& x : b) {
      if (!x.is_number_unsigned())
        throw Error(Err::ParseError, "block members must be nonnegative integers");
      members.push_back(x.get<PointId>());
    }
    blocks.push_back(std::move(members));
  }
  try {
    return make_family(std::move(labels), blocks);
  } catch (const Error& e) {
    throw Error(Err::ValidationError, e.what());
  }
}

void write_family(const SetFamily& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Err::ParseError, "cannot open " + path + " for writing");
  out << to_json_string(f);
  if (!out) throw Error(Err::ParseError, "write to " + path + " failed");
}

SetFamily read_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return family_from_json_string(buf.str());
}

} // namespace ifam
