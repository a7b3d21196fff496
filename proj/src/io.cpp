#include "cobar/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cobar {

namespace {
using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string string_field(const json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_string())
    throw input_error("expected a string field '" + key + "'");
  return doc[key].get<std::string>();
}
}  // namespace

SimplicialSetPresentation presentation_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw input_error("presentation document must be an object");
  SimplicialSetPresentation s(string_field(doc, "name"));
  if (!doc.contains("simplices") || !doc["simplices"].is_object())
    throw input_error("expected an object field 'simplices'");
  const json& levels = doc["simplices"];

  int top = -1;
  for (const auto& [key, value] : levels.items()) {
    (void)value;
    std::size_t used = 0;
    int d = -1;
    try {
      d = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || d < 0)
      throw input_error("simplex dimensions must be nonnegative integers, got '" + key + "'");
    top = std::max(top, d);
  }

  // build by increasing dimension so face expressions can be resolved
  for (int d = 0; d <= top; ++d) {
    const std::string key = std::to_string(d);
    if (!levels.contains(key)) continue;
    if (!levels[key].is_array())
      throw input_error("dimension '" + key + "' must hold a list of simplices");
    for (const json& entry : levels[key]) {
      if (!entry.is_object()) throw input_error("each simplex must be an object");
      const std::string id = string_field(entry, "id");
      std::vector<FormalSimplex> faces;
      if (d == 0) {
        if (entry.contains("faces") && !entry["faces"].empty())
          throw input_error("vertex '" + id + "' must not list faces");
      } else {
        if (!entry.contains("faces") || !entry["faces"].is_array())
          throw input_error("simplex '" + id + "' needs a list field 'faces'");
        for (const json& f : entry["faces"]) {
          if (!f.is_string())
            throw input_error("faces of '" + id + "' must be face expression strings");
          faces.push_back(s.parse_face_expr(f.get<std::string>()));
        }
      }
      s.add_generator(d, id, std::move(faces));
    }
  }

  const Report v = s.validate();
  if (!v.all_pass())
    throw input_error("invalid presentation: " + v.first_failure()->name +
                      (v.first_failure()->witness.empty() ? "" : " (" +
                       v.first_failure()->witness + ")"));
  return s;
}

std::string presentation_to_json(const SimplicialSetPresentation& s) {
  json levels = json::object();
  for (int d = 0; d <= s.top_dim(); ++d) {
    if (s.count(d) == 0) continue;
    json level = json::array();
    for (int i = 0; i < s.count(d); ++i) {
      const Generator& g = s.generator({d, i});
      json entry = json::object();
      entry["id"] = g.id;
      if (d > 0) {
        json faces = json::array();
        for (const FormalSimplex& f : g.faces) faces.push_back(s.show(f));
        entry["faces"] = std::move(faces);
      }
      level.push_back(std::move(entry));
    }
    levels[std::to_string(d)] = std::move(level);
  }
  json doc = json::object();
  doc["name"] = s.name();
  doc["simplices"] = std::move(levels);
  return doc.dump(2) + "\n";
}

FiniteGroupTable table_from_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw input_error("group table document must be an object");
  FiniteGroupTable g;
  g.name = string_field(doc, "name");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw input_error("expected a list field 'elements'");
  for (const json& e : doc["elements"]) {
    if (!e.is_string()) throw input_error("element names must be strings");
    g.element_names.push_back(e.get<std::string>());
  }
  if (!doc.contains("table") || !doc["table"].is_array())
    throw input_error("expected a list field 'table'");
  for (const json& row : doc["table"]) {
    if (!row.is_array()) throw input_error("multiplication table rows must be lists");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) throw input_error("table entries must be element indices");
      const int idx = v.get<int>();
      if (idx < 0 || idx >= g.order())
        throw input_error("table entry " + std::to_string(idx) + " is out of range");
      r.push_back(idx);
    }
    g.mult.push_back(std::move(r));
  }
  const Report v = g.validate();
  if (!v.all_pass()) throw input_error("invalid group table: " + v.first_failure()->name);
  return g;
}

std::string table_to_json(const FiniteGroupTable& g) {
  json doc = json::object();
  doc["name"] = g.name;
  doc["elements"] = g.element_names;
  doc["table"] = g.mult;
  return doc.dump(2) + "\n";
}

std::vector<int> edge_map_from_json(const std::string& text,
                                    const SimplicialSetPresentation& S,
                                    const FiniteGroupTable& G) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw input_error("edge map document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (S.lookup(key).dim != 1)
      throw input_error("edge map key '" + key + "' is not an edge");
    if (!value.is_string()) throw input_error("edge map values must name group elements");
  }
  std::vector<int> labels;
  for (int i = 0; i < S.count(1); ++i) {
    const std::string id = S.show(GenRef{1, i});
    if (!doc.contains(id)) throw input_error("edge map is missing edge '" + id + "'");
    const std::string elt = doc[id].get<std::string>();
    const auto& names = G.element_names;
    const auto it = std::find(names.begin(), names.end(), elt);
    if (it == names.end())
      throw input_error("edge map value '" + elt + "' is not an element of " + G.name);
    labels.push_back(static_cast<int>(it - names.begin()));
  }
  return labels;
}

SimplicialSetPresentation space_from_spec(const std::string& spec) {
  try {
    return builtin(spec);
  } catch (const input_error&) {
    if (!std::filesystem::exists(spec)) throw;
    return presentation_from_json(read_text_file(spec));
  }
}

FiniteGroupTable table_from_spec(const std::string& spec) {
  if (spec == "S3") return symmetric_group_3();
  if (spec == "Q8") return quaternion_group_8();
  if (spec.rfind("Z/", 0) == 0) {
    try {
      return cyclic_group(std::stoi(spec.substr(2)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  if (std::filesystem::exists(spec)) return table_from_json(read_text_file(spec));
  throw input_error("unknown group '" + spec + "' (expected Z/n, S3, Q8, or a file)");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cobar
