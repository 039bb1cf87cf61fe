#include "sandflower/spec_io.hpp"

#include <charconv>

#include "sandflower/error.hpp"

namespace sandflower {

using nlohmann::json;

namespace {

ChainSpec chain_from(const json& node, const std::string& where) {
  if (!node.is_object() || !node.contains("ks") || !node.at("ks").is_array())
    throw Error(ErrorKind::Parse, where + ": expected an object with an array field \"ks\"");
  ChainSpec spec;
  for (const auto& k : node.at("ks")) {
    if (!k.is_number_integer()) throw Error(ErrorKind::Parse, where + ": side counts must be integers");
    const auto v = k.get<long long>();
    if (v < -1000000 || v > 1000000) throw Error(ErrorKind::Parse, where + ": side count out of range");
    spec.ks.push_back(static_cast<int>(v));
  }
  return spec;
}

int to_int(std::string_view token, std::string_view what) {
  int v = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw Error(ErrorKind::Parse, "bad " + std::string(what) + ": '" + std::string(token) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

SpecFile parse_spec(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::Parse, "spec must be a JSON object");
  if (doc.contains("center")) {
    if (!doc.at("center").is_number_integer()) throw Error(ErrorKind::Parse, "\"center\" must be an integer");
    if (!doc.contains("petals") || !doc.at("petals").is_array())
      throw Error(ErrorKind::Parse, "flower spec needs a \"petals\" array");
    FlowerSpec spec;
    const auto t = doc.at("center").get<long long>();
    if (t < -1000000 || t > 1000000) throw Error(ErrorKind::Parse, "center out of range");
    spec.t = static_cast<int>(t);
    std::size_t i = 0;
    for (const auto& petal : doc.at("petals")) spec.petals.push_back(chain_from(petal, "petal " + std::to_string(i++)));
    return spec;
  }
  return chain_from(doc, "chain");
}

SpecFile parse_spec_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  return parse_spec(doc);
}

json to_json(const ChainSpec& spec) { return json{{"ks", spec.ks}}; }

json to_json(const FlowerSpec& spec) {
  json petals = json::array();
  for (const auto& p : spec.petals) petals.push_back(to_json(p));
  return json{{"center", spec.t}, {"petals", petals}};
}

ChainSpec parse_ks(std::string_view text) {
  ChainSpec spec;
  if (text.empty()) return spec;
  for (auto tok : split(text, ',')) spec.ks.push_back(to_int(tok, "side count"));
  return spec;
}

Parts parse_parts(std::string_view text) {
  Parts parts;
  for (auto group : split(text, '|')) {
    std::vector<std::size_t> part;
    for (auto tok : split(group, ',')) {
      const int j = to_int(tok, "petal index");
      if (j < 0) throw Error(ErrorKind::Parse, "negative petal index");
      part.push_back(static_cast<std::size_t>(j));
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::string encode(const ChainSpec& spec) {
  std::string out = "[";
  for (std::size_t i = 0; i < spec.ks.size(); ++i) out += (i ? "," : "") + std::to_string(spec.ks[i]);
  return out + "]";
}

std::string encode(const FlowerSpec& spec) {
  std::string out = "t=" + std::to_string(spec.t);
  for (const auto& p : spec.petals) out += " " + encode(p);
  return out;
}

}  // namespace sandflower
