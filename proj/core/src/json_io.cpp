#include "hilbspine/json_io.hpp"

#include "hilbspine/errors.hpp"

namespace hilbspine {

namespace {
Json monomials_to_json(const std::vector<Monomial>& ms) {
  Json arr = Json::array();
  for (const auto& m : ms) arr.push_back(to_string(m));
  return arr;
}

Json mask_to_json(std::uint32_t mask, const std::vector<Monomial>& ground) {
  Json arr = Json::array();
  for (size_t k = 0; k < ground.size(); ++k)
    if (mask & (std::uint32_t{1} << k)) arr.push_back(to_string(ground[k]));
  return arr;
}
}  // namespace

Json spine_to_json(const SpineGraph& G) {
  Json j;
  j["colength"] = G.colength;
  j["vertices"] = Json::array();
  for (const auto& M : G.vertices) j["vertices"].push_back(M.partition());
  j["edges"] = Json::array();
  for (const auto& e : G.edges) {
    Json je;
    je["u"] = e.u;
    je["v"] = e.v;
    je["witnesses"] = Json::array();
    for (const auto& w : e.witnesses) {
      Json jw;
      jw["grading"] = {w.grading.a(), w.grading.b()};
      jw["hf"] = w.hf.values();
      je["witnesses"].push_back(std::move(jw));
    }
    j["edges"].push_back(std::move(je));
  }
  return j;
}

SpineGraph spine_from_json(const Json& j) {
  SpineGraph G;
  try {
    G.colength = j.at("colength").get<int>();
    for (const auto& v : j.at("vertices"))
      G.vertices.push_back(MonomialIdeal(v.get<std::vector<int>>()));
    for (const auto& je : j.at("edges")) {
      SpineEdge e;
      e.u = je.at("u").get<int>();
      e.v = je.at("v").get<int>();
      for (const auto& jw : je.at("witnesses")) {
        const auto g = jw.at("grading").get<std::vector<int>>();
        if (g.size() != 2) throw input_error("grading must have two entries");
        e.witnesses.push_back(
            {Grading(g[0], g[1]), HilbertFunction(jw.at("hf").get<std::vector<int>>())});
      }
      G.edges.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw input_error(std::string("malformed spine JSON: ") + ex.what());
  }
  return G;
}

Json poset_to_json(const DominancePoset& p) {
  Json j;
  j["grading"] = {p.grading.a(), p.grading.b()};
  j["hf"] = p.hf.values();
  j["elements"] = Json::array();
  for (const auto& M : p.elements) j["elements"].push_back(M.partition());
  j["relation"] = Json::array();
  for (const auto& [u, v] : p.relation) j["relation"].push_back({u, v});
  j["hasse"] = Json::array();
  for (const auto& [u, v] : p.covers) j["hasse"].push_back({u, v});
  j["min"] = p.min_index;
  j["max"] = p.max_index;
  return j;
}

Json macaulay_to_json(const MacaulayMatrix& R) {
  Json j;
  j["ideal"] = R.ideal.partition();
  j["grading"] = {R.grading.a(), R.grading.b()};
  j["degree"] = R.degree;
  j["bar"] = R.barred;
  j["rows"] = monomials_to_json(R.rows);
  j["cols"] = monomials_to_json(R.cols);
  j["entries"] = Json::array();
  for (const auto& row : R.entries) {
    Json jrow = Json::array();
    for (const auto& p : row) jrow.push_back(p.to_string(R.vars));
    j["entries"].push_back(std::move(jrow));
  }
  return j;
}

Json matroid_to_json(const Matroid& m) {
  Json j;
  j["ground"] = monomials_to_json(m.ground());
  j["rank"] = m.rank();
  j["bases"] = Json::array();
  for (const auto b : m.bases()) j["bases"].push_back(mask_to_json(b, m.ground()));
  j["circuits"] = Json::array();
  for (const auto c : m.circuits()) j["circuits"].push_back(mask_to_json(c, m.ground()));
  j["uniform"] = m.is_uniform();
  j["loops"] = monomials_to_json(m.loops());
  j["coloops"] = monomials_to_json(m.coloops());
  return j;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string tok = s.substr(pos, next - pos);
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw input_error("expected a comma-separated integer list, got '" + s + "'");
    }
    pos = next + 1;
  }
  if (out.empty()) throw input_error("expected a nonempty integer list");
  return out;
}

MonomialIdeal parse_ideal(const std::string& s) { return MonomialIdeal(parse_int_list(s)); }

Grading parse_grading(const std::string& s) {
  const auto v = parse_int_list(s);
  if (v.size() != 2) throw input_error("grading must be 'a,b'");
  return Grading(v[0], v[1]);
}

HilbertFunction parse_hf(const std::string& s) { return HilbertFunction(parse_int_list(s)); }

}  // namespace hilbspine
