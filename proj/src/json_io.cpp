#include "arcforge/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace arcforge {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json corner_record(const Corner& c) {
  return ordered_json::array({c.tri, c.corner});
}

ordered_json arc_record(const IdealTriangulation& T, const ArcClass& a) {
  ordered_json j;
  j["surface"] = T.name;
  if (a.edge_arc) {
    const Slot ref = T.slots_of(a.edge)[0];
    j["start"] = corner_record({ref.tri, mod3(ref.side + 1)});
    j["crossings"] = ordered_json::array();
    j["end"] = corner_record({ref.tri, mod3(ref.side + 2)});
  } else {
    const ArcWalk w = walk(T, a);
    j["start"] = corner_record(w.start);
    ordered_json xs = ordered_json::array();
    for (const auto& st : w.steps) xs.push_back(T.edge_of(st.out));
    j["crossings"] = std::move(xs);
    j["end"] = corner_record(w.end);
  }
  return j;
}

Corner read_corner(const IdealTriangulation& T, const ordered_json& v,
                   const char* what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer())
    throw std::invalid_argument(std::string(what) +
                                " must be a [triangle, corner] pair");
  const int t = v[0].get<int>();
  const int c = v[1].get<int>();
  if (t < 0 || t >= T.ntri || c < 0 || c > 2)
    throw std::invalid_argument(std::string(what) + " out of range");
  return {t, c};
}

ArcClass arc_from_record(const IdealTriangulation& T, const ordered_json& j) {
  if (!j.is_object() || !j.contains("surface") || !j.contains("start") ||
      !j.contains("crossings") || !j.contains("end"))
    throw std::invalid_argument(
        "arc record needs surface, start, crossings, end");
  if (j.at("surface").get<std::string>() != T.name)
    throw std::invalid_argument("arc recorded for surface '" +
                                j.at("surface").get<std::string>() +
                                "' does not match fixture '" + T.name + "'");
  const Corner start = read_corner(T, j.at("start"), "start");
  const Corner end = read_corner(T, j.at("end"), "end");
  if (!j.at("crossings").is_array())
    throw std::invalid_argument("crossings must be an array of edge ids");
  std::vector<int> xs;
  for (const auto& v : j.at("crossings")) {
    if (!v.is_number_integer())
      throw std::invalid_argument("crossings must be an array of edge ids");
    const int e = v.get<int>();
    if (e < 0 || e >= T.num_edges())
      throw std::invalid_argument("edge id out of range");
    xs.push_back(e);
  }

  if (xs.empty()) {
    if (start.tri != end.tri || start.corner == end.corner)
      throw std::invalid_argument("edge-class record endpoints malformed");
    ArcClass a;
    a.edge_arc = true;
    a.edge = T.edge_of({start.tri, 3 - start.corner - end.corner});
    return a;
  }

  RawPath p;
  p.start = start;
  p.outs.push_back({start.tri, start.corner});
  if (T.edge_of(p.outs.back()) != xs[0])
    throw std::invalid_argument("first crossing does not face the start corner");
  for (size_t i = 1; i < xs.size(); ++i) {
    const Slot in = T.glue(p.outs.back());
    int found = -1;
    for (int s = 0; s < 3; ++s) {
      if (s == in.side) continue;
      if (T.edge_of({in.tri, s}) == xs[i]) {
        if (found >= 0)
          throw std::invalid_argument("ambiguous edge continuation");
        found = s;
      }
    }
    if (found < 0)
      throw std::invalid_argument("no taut continuation crossing the edge");
    p.outs.push_back({in.tri, found});
  }
  const Slot fin = T.glue(p.outs.back());
  if (end.tri != fin.tri || end.corner != fin.side)
    throw std::invalid_argument("end corner does not match the path");
  p.end_corner = end.corner;
  return tighten(T, p);
}

ordered_json system_record(const IdealTriangulation& T, const ArcSystem& s) {
  ordered_json j;
  j["surface"] = s.surface;
  j["k"] = s.k;
  ordered_json ms = ordered_json::array();
  for (const auto& a : s.members) ms.push_back(arc_record(T, a));
  j["members"] = std::move(ms);
  return j;
}

ArcSystem system_from_record(const IdealTriangulation& T,
                             const ordered_json& j) {
  if (!j.is_object() || !j.contains("surface") || !j.contains("members"))
    throw std::invalid_argument("system record needs surface and members");
  const std::string surface = j.at("surface").get<std::string>();
  if (surface != T.name)
    throw std::invalid_argument("system recorded for surface '" + surface +
                                "' does not match fixture '" + T.name + "'");
  const int k = j.contains("k") ? j.at("k").get<int>() : 1;
  std::vector<ArcClass> members;
  for (const auto& m : j.at("members")) members.push_back(arc_from_record(T, m));
  return make_system(T, surface, std::move(members), k);
}

ordered_json parse(const std::string& text) {
  return ordered_json::parse(text);  // throws nlohmann parse_error
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string triangulation_to_json(const IdealTriangulation& T) {
  ordered_json j;
  j["name"] = T.name;
  j["triangles"] = T.ntri;
  ordered_json vs = ordered_json::array();
  for (const auto& row : T.vertex_table)
    vs.push_back(ordered_json::array({row[0], row[1], row[2]}));
  j["vertices"] = std::move(vs);
  ordered_json gs = ordered_json::array();
  for (int t = 0; t < T.ntri; ++t)
    for (int s = 0; s < 3; ++s) {
      const Slot o = T.glue({t, s});
      if (Slot{t, s} < o)
        gs.push_back(ordered_json::array({t, s, o.tri, o.side}));
    }
  j["gluings"] = std::move(gs);
  return dump(j);
}

IdealTriangulation triangulation_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  if (!j.is_object() || !j.contains("triangles") || !j.contains("gluings") ||
      !j.contains("vertices"))
    throw std::invalid_argument(
        "triangulation record needs triangles, gluings, vertices");
  IdealTriangulation T;
  T.name = j.contains("name") ? j.at("name").get<std::string>() : "custom";
  T.ntri = j.at("triangles").get<int>();
  if (T.ntri <= 0) throw std::invalid_argument("triangle count must be positive");
  T.glue_table.assign(T.ntri, {Slot{}, Slot{}, Slot{}});
  T.vertex_table.assign(T.ntri, {0, 0, 0});
  const auto& vs = j.at("vertices");
  if (!vs.is_array() || static_cast<int>(vs.size()) != T.ntri)
    throw std::invalid_argument("vertices must list one corner triple per triangle");
  int vmax = -1;
  for (int t = 0; t < T.ntri; ++t) {
    const auto& row = vs[t];
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("vertex rows must have three entries");
    for (int c = 0; c < 3; ++c) {
      const int v = row[c].get<int>();
      if (v < 0) throw std::invalid_argument("vertex ids must be non-negative");
      T.vertex_table[t][c] = v;
      vmax = std::max(vmax, v);
    }
  }
  T.nvertices = vmax + 1;
  for (const auto& g : j.at("gluings")) {
    if (!g.is_array() || g.size() != 4)
      throw std::invalid_argument("gluings must be [t,s,t',s'] quadruples");
    const Slot a{g[0].get<int>(), g[1].get<int>()};
    const Slot b{g[2].get<int>(), g[3].get<int>()};
    for (const Slot s : {a, b})
      if (s.tri < 0 || s.tri >= T.ntri || s.side < 0 || s.side > 2)
        throw std::invalid_argument("gluing slot out of range");
    T.glue_table[a.tri][a.side] = b;
    T.glue_table[b.tri][b.side] = a;
  }
  T.finalize();
  T.validate();
  return T;
}

std::string arc_to_json(const IdealTriangulation& T, const ArcClass& a) {
  return dump(arc_record(T, a));
}

ArcClass arc_from_json(const IdealTriangulation& T, const std::string& text) {
  return arc_from_record(T, parse(text));
}

std::string arcs_to_json(const IdealTriangulation& T,
                         const std::vector<ArcClass>& arcs) {
  ordered_json j = ordered_json::array();
  for (const auto& a : arcs) j.push_back(arc_record(T, a));
  return dump(j);
}

std::vector<ArcClass> arcs_from_json(const IdealTriangulation& T,
                                     const std::string& text) {
  const ordered_json j = parse(text);
  if (!j.is_array())
    throw std::invalid_argument("expected an array of arc records");
  std::vector<ArcClass> out;
  for (const auto& rec : j) out.push_back(arc_from_record(T, rec));
  return out;
}

std::string system_to_json(const IdealTriangulation& T, const ArcSystem& s) {
  return dump(system_record(T, s));
}

ArcSystem system_from_json(const IdealTriangulation& T,
                           const std::string& text) {
  return system_from_record(T, parse(text));
}

std::string systems_to_json(const IdealTriangulation& T,
                            const std::vector<ArcSystem>& ss) {
  ordered_json j = ordered_json::array();
  for (const auto& s : ss) j.push_back(system_record(T, s));
  return dump(j);
}

std::vector<ArcSystem> systems_from_json(const IdealTriangulation& T,
                                         const std::string& text) {
  const ordered_json j = parse(text);
  if (!j.is_array())
    throw std::invalid_argument("expected an array of system records");
  std::vector<ArcSystem> out;
  for (const auto& rec : j) out.push_back(system_from_record(T, rec));
  return out;
}

std::string matrix_to_json(const IdealTriangulation& T,
                           const std::vector<ArcClass>& arcs,
                           const std::vector<std::vector<long long>>& m) {
  ordered_json j;
  j["surface"] = T.name;
  ordered_json as = ordered_json::array();
  for (const auto& a : arcs) as.push_back(arc_record(T, a));
  j["arcs"] = std::move(as);
  ordered_json rows = ordered_json::array();
  for (const auto& row : m) rows.push_back(row);
  j["matrix"] = std::move(rows);
  return dump(j);
}

std::string catalog_to_json(const IdealTriangulation& T,
                            const std::vector<SystemClass>& classes) {
  ordered_json j = ordered_json::array();
  for (const auto& c : classes) {
    ordered_json rec;
    rec["code"] = c.code;
    rec["size"] = c.size;
    rec["J"] = c.j_size;
    ordered_json ms = ordered_json::array();
    for (const auto& a : c.representative.members) ms.push_back(arc_record(T, a));
    rec["members"] = std::move(ms);
    rec["crossings"] = c.crossings;
    j.push_back(std::move(rec));
  }
  return dump(j);
}

}  // namespace arcforge
