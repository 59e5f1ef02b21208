#include "wittlab/json_io.hpp"

#include <map>
#include <string>

#include "wittlab/errors.hpp"

namespace wittlab {
namespace {

nlohmann::json parse_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Index parse_index_key(const std::string& key) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    throw ParseError("image key '" + key + "' is not an integer");
  }
  if (used != key.size()) throw ParseError("image key '" + key + "' is not an integer");
  return static_cast<Index>(v);
}

SparseVector vector_from_json(const nlohmann::json& terms, const std::string& where) {
  if (!terms.is_array()) throw ParseError(where + ": expected an array of [index, \"p/q\"] pairs");
  std::vector<Entry> entries;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string()) {
      throw ParseError(where + ": each term must be [index, \"p/q\"]");
    }
    entries.push_back({t[0].get<Index>(), Rational::parse(t[1].get<std::string>())});
  }
  return SparseVector::from_unsorted(std::move(entries));
}

}  // namespace

Json to_json(const SparseVector& v) {
  Json terms = Json::array();
  for (const auto& [index, value] : v) terms.push_back(Json::array({index, value.to_string()}));
  return terms;
}

Json to_json(const LinearMapTable& d) {
  Json images = Json::object();
  for (const auto& [k, img] : d.images()) images[std::to_string(k)] = to_json(img.coeffs());
  return Json{{"algebra", algebra_name(d.kind())},
              {"truncation", {{"min", d.truncation().lo}, {"max", d.truncation().hi}}},
              {"images", std::move(images)}};
}

LinearMapTable table_from_json_value(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("map JSON must be an object");
    const AlgebraKind kind = parse_algebra(j.at("algebra").get<std::string>());
    const auto& trunc = j.at("truncation");
    const IndexWindow window{trunc.at("min").get<Index>(), trunc.at("max").get<Index>()};
    const auto& imgs = j.at("images");
    if (!imgs.is_object()) throw ParseError("\"images\" must be an object");
    std::map<Index, Element> images;
    for (const auto& [key, terms] : imgs.items()) {
      const Index k = parse_index_key(key);
      if (!window.contains(k)) {
        throw PreconditionError("image of e_" + key + " lies outside the truncation");
      }
      images.emplace(k, Element(kind, vector_from_json(terms, "image of e_" + key)));
    }
    for (Index k = window.lo; k <= window.hi; ++k) {
      if (!images.contains(k)) {
        throw PreconditionError("map JSON is missing the image of e_" + std::to_string(k));
      }
    }
    return LinearMapTable(kind, window, std::move(images));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed map JSON: ") + e.what());
  }
}

LinearMapTable table_from_json(std::string_view text) { return table_from_json_value(parse_text(text)); }

PairsFile pairs_from_json(std::string_view text) {
  const nlohmann::json j = parse_text(text);
  try {
    PairsFile out{parse_algebra(j.at("algebra").get<std::string>()), {}};
    const auto& pairs = j.at("pairs");
    if (!pairs.is_array()) throw ParseError("\"pairs\" must be an array");
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw ParseError("each pair must be [\"<element>\", \"<element>\"]");
      }
      out.pairs.emplace_back(parse_element(out.kind, p[0].get<std::string>()),
                             parse_element(out.kind, p[1].get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed pairs JSON: ") + e.what());
  }
}

}  // namespace wittlab
