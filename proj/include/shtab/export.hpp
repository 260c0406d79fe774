#pragma once

// DOT and JSON output for crystals, and JSON for single tableaux.
//
// DOT: one node per tableau labelled "word\nwt"; solid edges for F_i, dashed
// for F'_i; colour by index from kPalette; nodes of equal weight share a
// rank=same group.
//
// JSON graph (schema 1):
//   {"schema":1, "shape":{"outer":[..],"inner":[..]}, "n":N,
//    "vertices":[{"id":0,"word":"211","wt":[2,1]}, ...],
//    "edges":[{"src":0,"dst":1,"i":1,"primed":true}, ...],
//    "stats":[{"id":0,"i":1,"phi":..,"eps":..,"phi_prime":..,"eps_prime":..,
//              "phi_hat":..,"eps_hat":..}, ...]}

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crystal.hpp"
#include "errors.hpp"
#include "tableau.hpp"

namespace shtab {

inline constexpr std::array<std::string_view, 8> kPalette{"red",   "blue",  "darkgreen", "orange",
                                                          "purple", "brown", "magenta",   "cyan"};

[[nodiscard]] inline std::string_view index_colour(int i) {
  return kPalette[static_cast<std::size_t>(i - 1) % kPalette.size()];
}

namespace detail {
inline std::string weight_text(const Weight& wt) {
  std::string s = "(";
  for (std::size_t k = 0; k < wt.size(); ++k) s += (k ? "," : "") + std::to_string(wt[k]);
  return s + ")";
}

inline std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

[[nodiscard]] inline std::string to_dot(const LabeledGraph& g, std::string_view title = "crystal") {
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(title) << "\" {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  std::map<Weight, std::vector<std::size_t>> by_weight;
  for (std::size_t v = 0; v < g.size(); ++v) {
    by_weight[g.weight(v)].push_back(v);
    os << "  v" << v << " [label=\"" << detail::dot_escape(g.display(v)) << "\\n"
       << detail::weight_text(g.weight(v)) << "\"];\n";
  }
  for (const auto& [wt, vs] : by_weight) {
    if (vs.size() < 2) continue;
    os << "  { rank=same;";
    for (std::size_t v : vs) os << " v" << v << ";";
    os << " }\n";
  }
  for (const Edge& ed : g.edges()) {
    os << "  v" << ed.src << " -> v" << ed.dst << " [label=\"" << to_string(ed.label)
       << "\", color=" << index_colour(ed.label.index) << ", fontcolor=" << index_colour(ed.label.index)
       << ", style=" << (ed.label.primed ? "dashed" : "solid") << "];\n";
  }
  os << "}\n";
  return os.str();
}

[[nodiscard]] inline std::string to_dot(const CrystalGraph& cg) {
  return to_dot(cg.graph(), "ShST(" + to_string(cg.shape()) + ", " + std::to_string(cg.rank()) + ")");
}

[[nodiscard]] inline nlohmann::json to_json(const StrictPartition& p) { return p.parts(); }

[[nodiscard]] inline nlohmann::json to_json(const CrystalGraph& cg) {
  using nlohmann::json;
  const LabeledGraph& g = cg.graph();
  json doc;
  doc["schema"] = 1;
  doc["shape"] = {{"outer", to_json(cg.shape().outer())}, {"inner", to_json(cg.shape().inner())}};
  doc["n"] = cg.rank();
  doc["vertices"] = json::array();
  for (std::size_t v = 0; v < g.size(); ++v)
    doc["vertices"].push_back({{"id", v}, {"word", g.name(v)}, {"wt", g.weight(v)}});
  doc["edges"] = json::array();
  for (const Edge& ed : g.edges())
    doc["edges"].push_back({{"src", ed.src}, {"dst", ed.dst}, {"i", ed.label.index}, {"primed", ed.label.primed}});
  doc["stats"] = json::array();
  for (std::size_t v = 0; v < g.size(); ++v)
    for (int i = 1; i < cg.rank(); ++i) {
      const StringStats& s = cg.stats(v, i).strings;
      doc["stats"].push_back({{"id", v},
                              {"i", i},
                              {"phi", s.phi},
                              {"eps", s.eps},
                              {"phi_prime", s.phi_prime},
                              {"eps_prime", s.eps_prime},
                              {"phi_hat", s.phi_hat},
                              {"eps_hat", s.eps_hat}});
    }
  return doc;
}

/// {"outer":[..],"inner":[..],"rows":["11'2", ...]}, rows top to bottom.
[[nodiscard]] inline nlohmann::json to_json(const Tableau& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Str& r : t.rows()) rows.push_back(to_string(r));
  return {{"outer", to_json(t.shape().outer())}, {"inner", to_json(t.shape().inner())}, {"rows", rows}};
}

[[nodiscard]] inline Tableau tableau_from_json(const nlohmann::json& doc) {
  try {
    const StrictPartition outer(doc.at("outer").get<std::vector<int>>());
    const StrictPartition inner(doc.value("inner", std::vector<int>{}));
    const ShiftedShape shape(outer, inner);
    const auto rows = doc.at("rows").get<std::vector<std::string>>();
    if (rows.size() > shape.rows()) throw ParseError("more rows than the shape has");
    Str entries;
    for (std::size_t r = shape.rows(); r >= 1; --r) {
      const Str row = r <= rows.size() ? parse_str(rows[r - 1]) : Str{};
      if (static_cast<int>(row.size()) != shape.row_length(r))
        throw ParseError("row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                         " entries, shape needs " + std::to_string(shape.row_length(r)));
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Tableau(shape, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("tableau document: ") + e.what());
  }
}

}  // namespace shtab
