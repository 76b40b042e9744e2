#include "spaceio.hpp"

#include <fstream>
#include <json.hpp>

namespace stratih::io {

using nlohmann::ordered_json;

namespace {

std::string label_of(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("vertex labels must be strings or integers, got " +
                              j.dump());
}

Simplex simplex_of(const ordered_json& j, const std::map<std::string, int>& vid,
                   const std::string& where) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(where + ": a simplex must be a nonempty array, got " +
                                j.dump());
  Simplex s;
  for (const auto& v : j) {
    auto it = vid.find(label_of(v));
    if (it == vid.end())
      throw std::invalid_argument(where + ": unknown vertex " + v.dump() + " in " +
                                  j.dump());
    s.push_back(it->second);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

StratifiedComplex space_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("space file is not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("space file must be a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw std::invalid_argument("space file needs an integer \"dimension\"");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("space file needs a \"vertices\" array");
  if (!j.contains("top_simplices") || !j["top_simplices"].is_array())
    throw std::invalid_argument("space file needs a \"top_simplices\" array");

  std::vector<std::string> labels;
  std::map<std::string, int> vid;
  for (const auto& v : j["vertices"]) {
    std::string lab = label_of(v);
    if (vid.count(lab))
      throw std::invalid_argument("duplicate vertex label " + lab);
    vid[lab] = static_cast<int>(labels.size());
    labels.push_back(lab);
  }

  std::vector<Simplex> tops;
  for (const auto& t : j["top_simplices"])
    tops.push_back(simplex_of(t, vid, "top_simplices"));

  std::map<int, std::vector<Simplex>> skeleta;
  if (j.contains("skeleta")) {
    if (!j["skeleta"].is_object())
      throw std::invalid_argument("\"skeleta\" must map skeleton indices to simplices");
    for (const auto& [key, gens] : j["skeleta"].items()) {
      int level;
      try {
        std::size_t pos = 0;
        level = std::stoi(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw std::invalid_argument("skeleton index is not an integer: " + key);
      }
      if (!gens.is_array())
        throw std::invalid_argument("skeleta[" + key + "] must be an array");
      for (const auto& g : gens)
        skeleta[level].push_back(simplex_of(g, vid, "skeleta[" + key + "]"));
    }
  }

  auto x = StratifiedComplex::build(j["dimension"].get<int>(), std::move(labels),
                                    std::move(tops), skeleta);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw std::invalid_argument("\"name\" must be a string");
    x.set_name(j["name"].get<std::string>());
  }
  if (j.contains("orientation_hint")) {
    const auto& h = j["orientation_hint"];
    if (!h.is_object() || !h.contains("simplex") || !h.contains("sign"))
      throw std::invalid_argument(
          "orientation_hint needs {\"simplex\": [...], \"sign\": +-1}");
    std::map<std::string, int> vid2;
    for (int v = 0; v < x.vertex_count(); ++v) vid2[x.vertex_labels()[v]] = v;
    x.set_orientation_hint(simplex_of(h["simplex"], vid2, "orientation_hint"),
                           h["sign"].get<int>());
  }
  return x;
}

StratifiedComplex space_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open space file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return space_from_json(text);
}

std::string space_to_json(const StratifiedComplex& x) {
  ordered_json j;
  j["name"] = x.name();
  j["dimension"] = x.dim();
  j["vertices"] = ordered_json::array();
  for (const auto& l : x.vertex_labels()) j["vertices"].push_back(l);

  auto emit_simplex = [&](const Simplex& s) {
    ordered_json out = ordered_json::array();
    for (int v : s) out.push_back(x.vertex_labels()[v]);
    return out;
  };

  // canonical top list: the maximal simplices (no proper coface)
  j["top_simplices"] = ordered_json::array();
  for (const auto& t : x.top_simplices()) j["top_simplices"].push_back(emit_simplex(t));

  // canonical skeleta: per level below dim, the simplices of that exact level
  // that are maximal within the skeleton
  ordered_json skeleta = ordered_json::object();
  for (int lv = 0; lv < x.dim(); ++lv) {
    ordered_json gens = ordered_json::array();
    for (int d = 0; d <= x.dim(); ++d) {
      for (int i = 0; i < x.simplex_count(d); ++i) {
        if (x.level(d, i) != lv) continue;
        // drop it if some coface already carries the level
        bool maximal = true;
        if (d + 1 <= x.dim()) {
          for (int c = 0; c < x.simplex_count(d + 1) && maximal; ++c) {
            if (x.level(d + 1, c) > lv) continue;
            const Simplex& big = x.simplex(d + 1, c);
            if (std::includes(big.begin(), big.end(), x.simplex(d, i).begin(),
                              x.simplex(d, i).end()))
              maximal = false;
          }
        }
        if (maximal) gens.push_back(emit_simplex(x.simplex(d, i)));
      }
    }
    if (!gens.empty()) skeleta[std::to_string(lv)] = std::move(gens);
  }
  if (!skeleta.empty()) j["skeleta"] = std::move(skeleta);

  if (x.orientation_hint()) {
    j["orientation_hint"] = {{"simplex", emit_simplex(x.orientation_hint()->first)},
                             {"sign", x.orientation_hint()->second}};
  }
  return j.dump(2) + "\n";
}

RunConfig config_from_json(const std::string& text) {
  RunConfig cfg;
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (j.contains("field")) cfg.field = FieldSpec::parse(j["field"].get<std::string>());
  if (j.contains("perversity")) {
    if (j["perversity"].is_string())
      cfg.perversity = j["perversity"].get<std::string>();
    else
      cfg.perversity = j["perversity"].dump();
  }
  if (j.contains("degrees"))
    for (const auto& d : j["degrees"]) cfg.degrees.push_back(d.get<int>());
  if (j.contains("subdiv_limit")) cfg.subdiv_limit = j["subdiv_limit"].get<int>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
  if (cfg.format != "tsv" && cfg.format != "json")
    throw std::invalid_argument("format must be tsv or json");
  return cfg;
}

Perversity parse_perversity(const StratifiedComplex& x, const std::string& spec) {
  if (spec == "zero" || spec == "0") return Perversity::zero(x);
  if (spec == "top" || spec == "t") return Perversity::top(x);
  if (spec == "lower-middle" || spec == "m")
    return Perversity::gm(GmName::kLowerMiddle, x);
  if (spec == "upper-middle" || spec == "n")
    return Perversity::gm(GmName::kUpperMiddle, x);
  if (!spec.empty() && spec.front() == '{') {
    ordered_json j;
    try {
      j = ordered_json::parse(spec);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("perversity table is not JSON: ") +
                                  e.what());
    }
    std::map<int, int> values;
    for (const auto& [key, v] : j.items()) values[std::stoi(key)] = v.get<int>();
    return Perversity(x, std::move(values));
  }
  throw std::invalid_argument("unknown perversity spec: " + spec);
}

std::vector<Perversity> perversity_list(const StratifiedComplex& x,
                                        const std::string& spec, std::uint64_t seed) {
  if (spec == "grid") return diagrams::perversity_grid(x, seed);
  return {parse_perversity(x, spec)};
}

std::string reports_json(const std::vector<diagrams::DiagramReport>& reports) {
  ordered_json out;
  out["checks"] = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json c;
    c["diagram"] = r.diagram;
    c["space"] = r.space;
    c["field"] = r.field;
    c["perversities"] = r.perversities;
    c["pass"] = r.pass();
    c["rows"] = ordered_json::array();
    for (const auto& row : r.rows) {
      c["rows"].push_back({{"case", row.key},
                           {"status", diagrams::status_str(row.status)},
                           {"detail", row.detail}});
    }
    out["checks"].push_back(std::move(c));
  }
  return out.dump(2) + "\n";
}

}  // namespace stratih::io
