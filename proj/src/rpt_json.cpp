#include <map>
#include <string>

#include <json.hpp>

#include "ptlab/error.hpp"
#include "ptlab/rpt.hpp"

namespace ptlab {

using ordered_json = nlohmann::ordered_json;

std::string Rpt::to_json() const {
  auto id = [](std::size_t s) { return "s" + std::to_string(s); };
  ordered_json doc;
  doc["root"] = id(root_);
  ordered_json states = ordered_json::object();
  for (std::size_t s = 0; s < states_.size(); ++s) {
    ordered_json kids = ordered_json::array();
    for (std::size_t c : states_[s].children) kids.push_back(id(c));
    states[id(s)] = {{"perm", states_[s].label.images()}, {"children", kids}};
  }
  doc["states"] = std::move(states);
  return doc.dump();
}

Rpt Rpt::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed Rpt document: ") + e.what(), e.byte);
  }
  auto fail = [](const std::string& msg) -> Rpt {
    throw Error("invalid Rpt document: " + msg);
  };
  if (!doc.is_object()) return fail("top level must be an object");
  if (!doc.contains("root") || !doc["root"].is_string()) return fail("missing string \"root\"");
  if (!doc.contains("states") || !doc["states"].is_object()) {
    return fail("missing object \"states\"");
  }

  std::map<std::string, std::size_t> index;
  for (const auto& [key, _] : doc["states"].items()) index.emplace(key, index.size());
  auto lookup = [&](const std::string& key) {
    auto it = index.find(key);
    if (it == index.end()) throw Error("invalid Rpt document: dangling state id \"" + key + "\"");
    return it->second;
  };

  std::vector<State> states(index.size());
  for (const auto& [key, body] : doc["states"].items()) {
    if (!body.is_object() || !body.contains("perm") || !body.contains("children") ||
        !body["perm"].is_array() || !body["children"].is_array()) {
      return fail("state \"" + key + "\" needs arrays \"perm\" and \"children\"");
    }
    std::vector<unsigned> images;
    for (const auto& x : body["perm"]) {
      if (!x.is_number_unsigned()) return fail("state \"" + key + "\": perm entries must be naturals");
      images.push_back(x.get<unsigned>());
    }
    State st;
    st.label = Perm(std::move(images));
    for (const auto& c : body["children"]) {
      if (!c.is_string()) return fail("state \"" + key + "\": children must be state ids");
      st.children.push_back(lookup(c.get<std::string>()));
    }
    if (st.label.size() != st.children.size()) {
      throw ArityError("state \"" + key + "\": perm length " + std::to_string(st.label.size()) +
                       " differs from child count " + std::to_string(st.children.size()));
    }
    states[index.at(key)] = std::move(st);
  }
  return Rpt(std::move(states), lookup(doc["root"].get<std::string>()));
}

}  // namespace ptlab
