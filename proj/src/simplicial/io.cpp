#include "facering/simplicial/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "facering/simplicial/library.hpp"

namespace facering::io {
namespace {

using nlohmann::json;

std::string where(const std::string& source, const std::string& field) { return source + ": " + field; }

std::string id_string(const json& j, const std::string& at) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(at + ": vertex id must be a string or integer");
}

Complex build_checked(std::vector<std::string> labels, std::vector<Face> facets, std::optional<CoordTable> coords,
                      std::string name, const std::string& source) {
  try {
    return Complex(std::move(labels), std::move(facets), std::move(coords), std::move(name));
  } catch (const PreconditionError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

}  // namespace

Complex parse_json(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(where(source, "top level must be an object"));
  const std::string name = doc.value("name", std::string{});
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(where(source, "field 'vertices' missing or not an array"));
  }
  if (!doc.contains("facets") || !doc["facets"].is_array()) {
    throw ParseError(where(source, "field 'facets' missing or not an array"));
  }

  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;
  CoordTable coords;
  std::size_t with_coords = 0;
  const auto& verts = doc["vertices"];
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string at = source + ": vertices[" + std::to_string(i) + "]";
    const auto& v = verts[i];
    if (!v.is_object() || !v.contains("id")) throw ParseError(at + ": expected an object with an 'id'");
    std::string label = id_string(v["id"], at + ".id");
    if (!ids.emplace(label, static_cast<Vertex>(labels.size())).second) {
      throw ParseError(at + ".id: duplicate vertex id '" + label + "'");
    }
    labels.push_back(std::move(label));
    std::vector<Rational> row;
    if (v.contains("coords") && !v["coords"].is_null()) {
      if (!v["coords"].is_array()) throw ParseError(at + ".coords: expected an array or null");
      for (std::size_t j = 0; j < v["coords"].size(); ++j) {
        const auto& c = v["coords"][j];
        const std::string cat = at + ".coords[" + std::to_string(j) + "]";
        std::string literal;
        if (c.is_string()) {
          literal = c.get<std::string>();
        } else if (c.is_number_integer()) {
          literal = std::to_string(c.get<long long>());
        } else {
          throw ParseError(cat + ": expected a rational string \"p/q\"");
        }
        try {
          row.push_back(Rational::parse(literal));
        } catch (const std::exception&) {
          throw ParseError(cat + ": bad rational literal '" + literal + "'");
        }
      }
      ++with_coords;
    }
    coords.push_back(std::move(row));
  }
  if (with_coords != 0 && with_coords != labels.size()) {
    throw ParseError(where(source, "either every vertex or no vertex must carry coordinates"));
  }
  for (std::size_t i = 1; i < coords.size() && with_coords != 0; ++i) {
    if (coords[i].size() != coords[0].size()) {
      throw ParseError(source + ": vertices[" + std::to_string(i) + "].coords: ragged coordinates (length " +
                       std::to_string(coords[i].size()) + ", expected " + std::to_string(coords[0].size()) + ")");
    }
  }

  std::vector<Face> facets;
  const auto& fs = doc["facets"];
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string at = source + ": facets[" + std::to_string(i) + "]";
    if (!fs[i].is_array()) throw ParseError(at + ": expected an array of vertex ids");
    Face f;
    for (std::size_t j = 0; j < fs[i].size(); ++j) {
      const std::string label = id_string(fs[i][j], at + "[" + std::to_string(j) + "]");
      auto it = ids.find(label);
      if (it == ids.end()) throw ParseError(at + ": unknown vertex id '" + label + "'");
      f.push_back(it->second);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw ParseError(at + ": repeated vertex");
    facets.push_back(std::move(f));
  }
  Complex c = build_checked(std::move(labels), std::move(facets),
                            with_coords != 0 ? std::optional<CoordTable>(std::move(coords)) : std::nullopt, name,
                            source);
  if (doc.contains("dim") && doc["dim"].is_number_integer() && !c.is_void() && doc["dim"].get<int>() != c.dim()) {
    throw ParseError(where(source, "field 'dim' is " + std::to_string(doc["dim"].get<int>()) +
                                       " but the facets have dimension " + std::to_string(c.dim())));
  }
  return c;
}

Complex parse_facet_list(const std::string& text, const std::string& source) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;
  std::vector<Face> facets;
  std::vector<std::size_t> line_of;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string tok;
    Face f;
    while (tokens >> tok) {
      auto [it, fresh] = ids.emplace(tok, static_cast<Vertex>(labels.size()));
      if (fresh) labels.push_back(tok);
      f.push_back(it->second);
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw ParseError(source + ":" + std::to_string(lineno) + ": repeated vertex in facet");
    }
    for (std::size_t i = 0; i < facets.size(); ++i) {
      const std::string here = source + ":" + std::to_string(lineno);
      const std::string there = "line " + std::to_string(line_of[i]);
      if (facets[i] == f) throw ParseError(here + ": duplicate facet (same as " + there + ")");
      if (is_subface(f, facets[i])) throw ParseError(here + ": facet is contained in the facet on " + there);
      if (is_subface(facets[i], f)) throw ParseError(here + ": facet contains the facet on " + there);
    }
    facets.push_back(std::move(f));
    line_of.push_back(lineno);
  }
  return build_checked(std::move(labels), std::move(facets), std::nullopt, "", source);
}

Complex parse_complex_text(const std::string& text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text, source);
  return parse_facet_list(text, source);
}

Complex parse_complex(const std::string& path) {
  if (!path.empty() && path[0] == '@') {
    try {
      return library::by_name(path.substr(1));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << f.rdbuf();
  Complex c = parse_complex_text(buf.str(), path);
  if (c.name().empty()) {
    std::string stem = path.substr(path.find_last_of('/') + 1);
    stem = stem.substr(0, stem.find('.'));
    c = c.with_name(stem);
  }
  return c;
}

std::string to_json(const Complex& delta) {
  json doc;
  doc["name"] = delta.name();
  doc["dim"] = delta.dim();
  json verts = json::array();
  for (std::size_t v = 0; v < delta.universe_size(); ++v) {
    json entry;
    entry["id"] = delta.labels()[v];
    if (delta.coords()) {
      json row = json::array();
      for (const auto& x : (*delta.coords())[v]) row.push_back(x.to_string());
      entry["coords"] = row;
    } else {
      entry["coords"] = nullptr;
    }
    verts.push_back(entry);
  }
  doc["vertices"] = verts;
  json facets = json::array();
  for (const auto& f : delta.facets()) {
    json row = json::array();
    for (Vertex v : f) row.push_back(delta.labels()[v]);
    facets.push_back(row);
  }
  doc["facets"] = facets;
  return doc.dump();
}

std::string to_facet_list(const Complex& delta) {
  std::string out;
  for (const auto& f : delta.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += delta.labels()[f[i]];
    }
    out += '\n';
  }
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string canonical_sha256(const Complex& delta) { return sha256_hex(to_json(delta)); }

}  // namespace facering::io
