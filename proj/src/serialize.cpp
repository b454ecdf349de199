#include "crystal/serialize.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace crystal {

namespace {

std::size_t vertex_from_json(const Json& j) {
  const Int k = j.get<Int>();
  if (k < 1) throw std::invalid_argument("vertex index must be >= 1, got " + std::to_string(k));
  return static_cast<std::size_t>(k - 1);
}

}  // namespace

std::string format_ints(const std::vector<Int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

Json weight_to_json(const Weight& w) { return Json{{"lambda", w.lambda}, {"root", w.root}}; }

Weight weight_from_json(const Json& j) {
  Weight w(j.at("lambda").get<std::vector<Int>>(), j.at("root").get<std::vector<Int>>());
  if (w.lambda.size() != w.root.size()) throw std::invalid_argument("weight coordinate lengths differ");
  return w;
}

Json model_to_json(const ModelElement& x) {
  Json w = Json::object();
  for (const auto& [p, dims] : x.wp->slots) w[std::to_string(p)] = dims;
  Json v = Json::object();
  for (const auto& [key, dim] : x.v) v[std::to_string(key.first + 1) + "," + std::to_string(key.second)] = dim;
  Json out{{"w", std::move(w)}, {"v", std::move(v)}};
  // The rank cannot be read off an empty W-profile.
  if (x.wp->slots.empty()) out["n"] = x.wp->n;
  return out;
}

ModelElement model_from_json(const Json& j) {
  auto wp = std::make_shared<WProfile>();
  for (const auto& [key, dims] : j.at("w").items()) {
    auto vec = dims.get<std::vector<Int>>();
    if (wp->n == 0) wp->n = vec.size();
    if (vec.size() != wp->n) throw std::invalid_argument("W-profile slots have different lengths");
    for (Int d : vec)
      if (d < 0) throw std::invalid_argument("W-profile entries must be nonnegative");
    wp->slots.emplace(std::stoll(key), std::move(vec));
  }
  if (j.contains("n")) {
    const auto n = j.at("n").get<std::size_t>();
    if (wp->n != 0 && wp->n != n) throw std::invalid_argument("W-profile length does not match n");
    wp->n = n;
  }
  ModelElement x{std::move(wp), {}};
  for (const auto& [key, dim] : j.at("v").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("model key '" + key + "' is not \"k,p\"");
    const Int k = std::stoll(key.substr(0, comma));
    const Int p = std::stoll(key.substr(comma + 1));
    const Int d = dim.get<Int>();
    if (k < 1 || static_cast<std::size_t>(k) > x.wp->n) throw std::invalid_argument("model key '" + key + "' has bad k");
    if (d < 0) throw std::invalid_argument("model entry '" + key + "' is negative");
    if (d != 0) x.v[{static_cast<std::size_t>(k - 1), p}] = d;
  }
  return x;
}

Json element_to_json(const Element& x) {
  return std::visit(
      [](const auto& e) -> Json {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, BkElement>) {
          return Json{{"Bk", Json{{"k", e.k + 1}, {"n", e.n}}}};
        } else if constexpr (std::is_same_v<T, TElement>) {
          return Json{{"T", weight_to_json(e.lambda)}};
        } else if constexpr (std::is_same_v<T, S0Element>) {
          return Json{{"S0", Json::object()}};
        } else if constexpr (std::is_same_v<T, TensorElement>) {
          Json factors = Json::array();
          for (const Element& f : e.factors) factors.push_back(element_to_json(f));
          return Json{{"Tensor", std::move(factors)}};
        } else {
          return Json{{"Model", model_to_json(e)}};
        }
      },
      x.value);
}

Element element_from_json(const Json& j) {
  if (!j.is_object() || j.size() != 1) throw std::invalid_argument("element JSON must be a one-key object");
  const std::string& tag = j.begin().key();
  const Json& body = j.begin().value();
  if (tag == "Bk") return BkElement{vertex_from_json(body.at("k")), body.at("n").get<Int>()};
  if (tag == "T") return TElement{weight_from_json(body)};
  if (tag == "S0") return S0Element{};
  if (tag == "Tensor") {
    TensorElement t;
    for (const auto& f : body) t.factors.push_back(element_from_json(f));
    return t;
  }
  if (tag == "Model") return model_from_json(body);
  throw std::invalid_argument("unknown element kind '" + tag + "'");
}

std::string canonical(const Element& x) { return element_to_json(x).dump(); }

RootDatum root_datum_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("root datum must be an object");
  if (j.contains("preset") == j.contains("adjacency"))
    throw std::invalid_argument("root datum needs exactly one of \"preset\" or \"adjacency\"");
  if (j.contains("preset")) return RootDatum::preset(j.at("preset").get<std::string>());
  return RootDatum::from_adjacency(j.at("adjacency").get<IntMatrix>());
}

namespace {

// Top-level `key = value` pairs whose values are JSON literals.
Json toml_subset(const std::string& text) {
  std::string stripped;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    bool quoted = false;
    for (char c : line) {
      if (c == '"') quoted = !quoted;
      if (c == '#' && !quoted) break;
      stripped += c;
    }
    stripped += '\n';
  }
  static const std::regex key(R"((^|\n)[ \t]*([A-Za-z_][A-Za-z0-9_-]*)[ \t]*=)");
  Json out = Json::object();
  std::vector<std::smatch> keys(std::sregex_iterator(stripped.begin(), stripped.end(), key), std::sregex_iterator());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto begin = keys[i].position(0) + keys[i].length(0);
    const auto end = i + 1 < keys.size() ? keys[i + 1].position(0) : static_cast<std::ptrdiff_t>(stripped.size());
    const std::string name = keys[i][2];
    static const std::regex trailing_comma(R"(,(\s*)\])");
    try {
      out[name] = Json::parse(std::regex_replace(stripped.substr(begin, end - begin), trailing_comma, "$1]"));
    } catch (const Json::parse_error&) {
      throw std::invalid_argument("unsupported TOML value for '" + name + "'");
    }
  }
  return out;
}

}  // namespace

RootDatum load_root_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  const bool toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
  try {
    return root_datum_from_json(toml ? toml_subset(text.str()) : Json::parse(text.str()));
  } catch (const Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace crystal
