#include "slice/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slice {

Json exact_points_to_json(const std::vector<ExactPoint>& pts, int n, int k) {
  Json j;
  j["backing"] = "exact";
  j["n"] = n;
  j["k"] = k;
  Json coords = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (const auto& q : p.main) row.push_back(format_rat(q));
    for (const auto& q : p.slab) row.push_back(format_rat(q));
    coords.push_back(std::move(row));
  }
  j["coords"] = std::move(coords);
  return j;
}

Json float_points_to_json(const std::vector<FloatPoint>& pts) {
  Json j;
  j["backing"] = "float";
  j["n"] = pts.empty() ? 0 : pts[0].dim_main;
  j["k"] = pts.empty() ? 0 : pts[0].dim_slab;
  Json coords = Json::array();
  for (const auto& p : pts) coords.push_back(p.coords);
  j["coords"] = std::move(coords);
  return j;
}

Json graph_to_json(const UnitDistanceGraph& g) {
  Json j;
  if (g.exact) {
    int n = 0, k = 0;
    if (!g.epoints.empty()) {
      n = static_cast<int>(g.epoints[0].main.size());
      k = static_cast<int>(g.epoints[0].slab.size());
    }
    j = exact_points_to_json(g.epoints, n, k);
  } else {
    j = float_points_to_json(g.fpoints);
  }
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  if (g.predicate.kind == AdjacencyPredicate::Kind::exact)
    j["predicate"] = Json{{"kind", "exact"}};
  else
    j["predicate"] = Json{{"kind", "tol"}, {"tau", g.predicate.tau}};
  if (g.slice)
    j["slice"] = Json{{"n", g.slice->n},
                      {"k", g.slice->k},
                      {"eps", format_rat(g.slice->eps)}};
  return j;
}

UnitDistanceGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("backing") || !j.contains("coords"))
    throw std::invalid_argument("graph JSON missing backing/coords");
  UnitDistanceGraph g;
  const std::string backing = j.at("backing").get<std::string>();
  const int n = j.at("n").get<int>();
  const int k = j.at("k").get<int>();
  if (backing == "exact") {
    g.exact = true;
    for (const auto& row : j.at("coords")) {
      if (static_cast<int>(row.size()) != n + k)
        throw std::invalid_argument("coordinate row of wrong length");
      ExactPoint p;
      for (int i = 0; i < n; ++i)
        p.main.push_back(parse_rat(row[i].get<std::string>()));
      for (int i = n; i < n + k; ++i)
        p.slab.push_back(parse_rat(row[i].get<std::string>()));
      g.epoints.push_back(std::move(p));
    }
  } else if (backing == "float") {
    g.exact = false;
    for (const auto& row : j.at("coords")) {
      if (static_cast<int>(row.size()) != n + k)
        throw std::invalid_argument("coordinate row of wrong length");
      g.fpoints.emplace_back(row.get<std::vector<double>>(), n, k);
    }
  } else {
    throw std::invalid_argument("unknown backing '" + backing + "'");
  }
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      const int a = e.at(0).get<int>();
      const int b = e.at(1).get<int>();
      if (a < 0 || b < 0 || a >= static_cast<int>(g.vertex_count()) ||
          b >= static_cast<int>(g.vertex_count()) || a == b)
        throw std::invalid_argument("edge references invalid vertices");
      g.edges.emplace_back(a, b);
    }
  if (j.contains("predicate")) {
    const auto& p = j.at("predicate");
    if (p.at("kind") == "exact") {
      g.predicate = {AdjacencyPredicate::Kind::exact, 0.0};
    } else if (p.at("kind") == "tol") {
      g.predicate = {AdjacencyPredicate::Kind::tolerance,
                     p.at("tau").get<double>()};
    } else {
      throw std::invalid_argument("unknown predicate kind");
    }
  }
  if (j.contains("slice"))
    g.slice = SliceSpec(j.at("slice").at("n").get<int>(),
                        j.at("slice").at("k").get<int>(),
                        parse_rat(j.at("slice").at("eps").get<std::string>()));
  return g;
}

namespace {

const char* kind_name(CertKind k) {
  switch (k) {
    case CertKind::proper_coloring:
      return "proper_coloring";
    case CertKind::clique_witness:
      return "clique_witness";
    case CertKind::odd_cycle_witness:
      return "odd_cycle_witness";
    case CertKind::exhaustive_unsat:
      return "exhaustive_unsat";
  }
  return "?";
}

}  // namespace

Json certificate_to_json(const ColoringCertificate& cert) {
  Json j;
  j["kind"] = kind_name(cert.kind);
  j["colors_used"] = cert.colors_used;
  if (cert.kind == CertKind::proper_coloring) {
    Json colors = Json::object();
    for (size_t v = 0; v < cert.colors.size(); ++v)
      colors[std::to_string(v)] = cert.colors[v];
    j["colors"] = std::move(colors);
  }
  if (!cert.witness_vertices.empty())
    j["witness_vertices"] = cert.witness_vertices;
  if (cert.kind == CertKind::exhaustive_unsat) {
    Json t;
    t["colors_tested"] = cert.colors_tested;
    t["contradiction"] = cert.contradiction;
    t["nodes"] = cert.nodes;
    Json merges = Json::array();
    for (const auto& m : cert.merges) {
      Json step;
      step["pair"] = Json::array({m.u, m.w});
      step["clique"] = m.clique;
      merges.push_back(std::move(step));
    }
    t["merges"] = std::move(merges);
    if (cert.contradiction == "merged_edge")
      t["conflict_edge"] = Json::array({cert.conflict_edge[0],
                                        cert.conflict_edge[1]});
    if (cert.contradiction == "merged_clique")
      t["conflict_clique"] = cert.conflict_clique;
    j["transcript"] = std::move(t);
  }
  return j;
}

Json chromatic_result_to_json(const ChromaticResult& res) {
  Json j;
  j["exact"] = res.exact;
  if (res.exact) j["chi"] = res.chi;
  j["lower_bound"] = res.lower_bound;
  j["upper_bound"] = res.upper_bound;
  j["upper"] = certificate_to_json(res.upper);
  j["lower"] = certificate_to_json(res.lower);
  j["nodes"] = res.nodes;
  j["seconds"] = res.seconds;
  return j;
}

Json report_to_json(const ConstructionReport& rep) {
  Json j;
  Json pts = Json::array();
  for (const auto& p : rep.v) pts.push_back(p.coords);
  j["v"] = std::move(pts);
  j["r_circum"] = rep.r_circum;
  j["r_attached_4"] = rep.r_attached_4;
  j["r_attached_7"] = rep.r_attached_7;
  j["nu"] = rep.nu;
  j["equator_in_slice"] = rep.equator_in_slice;
  j["pass"] = rep.pass;
  Json res = Json::object();
  for (const auto& [k, v] : rep.residuals) res[k] = v;
  j["residuals"] = std::move(res);
  return j;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!os) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace slice
