#include "slbethe/json_io.hpp"

#include <stdexcept>

namespace slbethe {

ojson make_envelope(const std::string& command) {
  ojson j;
  j["schema"] = 1;
  j["command"] = command;
  return j;
}

ojson to_json(const CD& z) { return ojson::array({z.real(), z.imag()}); }

CD complex_from_json(const ojson& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex values are [re, im] pairs");
  return CD(j[0].get<double>(), j[1].get<double>());
}

ojson to_json(const Grading& g) {
  ojson j;
  j["r"] = g.r();
  j["s"] = g.s();
  j["signs"] = g.signs();
  return j;
}

Grading grading_from_json(const ojson& j) {
  return grading_from_signs(j.at("r").get<int>(), j.at("s").get<int>(),
                            j.at("signs").get<std::string>());
}

ojson to_json(const Partition& p) {
  ojson j = ojson::array();
  for (int part : p.parts()) j.push_back(part);
  return j;
}

Partition partition_from_json(const ojson& j) {
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

ojson to_json(const SkewShape& sh) {
  ojson j;
  j["mu"] = to_json(sh.mu());
  j["lambda"] = to_json(sh.lambda());
  return j;
}

SkewShape skew_from_json(const ojson& j) {
  Partition lambda;
  if (j.contains("lambda")) lambda = partition_from_json(j.at("lambda"));
  return SkewShape(partition_from_json(j.at("mu")), std::move(lambda));
}

namespace {

template <class K>
ojson value_to_json(const K& v);

template <>
ojson value_to_json<Rat>(const Rat& v) {
  return rat_to_string(v);
}

template <>
ojson value_to_json<CD>(const CD& v) {
  return to_json(v);
}

template <class K>
ojson bethe_data_to_json(const BetheData<K>& d) {
  ojson j;
  j["grading"] = to_json(d.g);
  ojson roots = ojson::array();
  for (const auto& col : d.roots) {
    ojson list = ojson::array();
    for (const K& u : col) list.push_back(value_to_json<K>(u));
    roots.push_back(std::move(list));
  }
  j["roots"] = std::move(roots);
  ojson w = ojson::array();
  for (const K& x : d.inhom) w.push_back(value_to_json<K>(x));
  j["inhom"] = std::move(w);
  return j;
}

}  // namespace

ojson to_json(const BetheData<Rat>& d) { return bethe_data_to_json(d); }
ojson to_json(const BetheData<CD>& d) { return bethe_data_to_json(d); }

BetheData<Rat> bethe_data_rat_from_json(const ojson& j) {
  const Grading g = grading_from_json(j.at("grading"));
  std::vector<std::vector<Rat>> roots;
  for (const auto& col : j.at("roots")) {
    std::vector<Rat> list;
    for (const auto& v : col) list.push_back(rat_from_string(v.get<std::string>()));
    roots.push_back(std::move(list));
  }
  std::vector<Rat> w;
  for (const auto& v : j.at("inhom")) w.push_back(rat_from_string(v.get<std::string>()));
  return BetheData<Rat>(g, std::move(roots), std::move(w));
}

BetheData<CD> bethe_data_cd_from_json(const ojson& j) {
  const Grading g = grading_from_json(j.at("grading"));
  std::vector<std::vector<CD>> roots;
  for (const auto& col : j.at("roots")) {
    std::vector<CD> list;
    for (const auto& v : col) list.push_back(complex_from_json(v));
    roots.push_back(std::move(list));
  }
  std::vector<CD> w;
  for (const auto& v : j.at("inhom")) w.push_back(complex_from_json(v));
  return BetheData<CD>(g, std::move(roots), std::move(w));
}

ojson to_json(const BAESystem& sys) {
  ojson j;
  j["grading"] = to_json(sys.g);
  j["counts"] = sys.counts;
  ojson w = ojson::array();
  for (const CD& x : sys.inhom) w.push_back(to_json(x));
  j["inhom"] = std::move(w);
  return j;
}

BAESystem bae_system_from_json(const ojson& j) {
  const Grading g = grading_from_json(j.at("grading"));
  std::vector<int> counts;
  for (const auto& v : j.at("counts")) counts.push_back(v.get<int>());
  std::vector<CD> w;
  for (const auto& v : j.at("inhom")) w.push_back(complex_from_json(v));
  return BAESystem(g, std::move(counts), std::move(w));
}

ojson to_json(const BAESolution& sol) {
  ojson j;
  ojson roots = ojson::array();
  for (const auto& col : sol.roots) {
    ojson list = ojson::array();
    for (const CD& u : col) list.push_back(to_json(u));
    roots.push_back(std::move(list));
  }
  j["roots"] = std::move(roots);
  j["residual"] = sol.residual;
  j["collision"] = sol.collision;
  return j;
}

ojson to_json(const SolveInfo& info) {
  ojson j;
  j["seeds_tried"] = info.seeds_tried;
  j["converged"] = info.converged;
  j["rank_deficient"] = info.rank_deficient;
  return j;
}

ojson to_json(const Certificate& cert) {
  ojson j;
  j["name"] = cert.name;
  j["pass"] = cert.pass;
  j["method"] = cert.method;
  j["degree_bound"] = cert.degree_bound;
  j["samples"] = cert.samples;
  j["detail"] = cert.detail;
  return j;
}

ojson to_json(const ResidueReport& rep) {
  ojson j;
  j["max_residue"] = rep.max_residue;
  j["candidates"] = rep.candidates;
  j["degenerate"] = rep.degenerate;
  j["overlapping"] = rep.overlapping;
  return j;
}

ojson to_json(const CancellationReport& rep) {
  ojson j;
  ojson edges = ojson::array();
  for (const CancellationEdge& e : rep.edges) {
    ojson ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["color"] = e.color;
    ej["shift"] = e.shift;
    edges.push_back(std::move(ej));
  }
  j["terms"] = rep.terms.size();
  j["edges"] = std::move(edges);
  j["max_pair_residue"] = rep.max_pair_residue;
  j["degenerate"] = rep.degenerate;
  return j;
}

ojson to_json(const DualityResult& res) {
  ojson j;
  j["b"] = res.b;
  ojson f = ojson::array();
  for (int i = 0; i <= res.f.degree(); ++i)
    f.push_back(to_json(res.f.coeff(static_cast<std::size_t>(i))));
  j["f"] = std::move(f);
  ojson matched = ojson::array();
  for (const CD& u : res.matched_roots) matched.push_back(to_json(u));
  j["matched_roots"] = std::move(matched);
  ojson dual = ojson::array();
  for (const CD& u : res.dual_roots) dual.push_back(to_json(u));
  j["dual_roots"] = std::move(dual);
  j["new_grading"] = to_json(res.new_grading);
  j["transformed"] = to_json(res.transformed);
  j["match_failed"] = res.match_failed;
  j["ambiguous"] = res.ambiguous;
  return j;
}

ojson to_json(const DualReport& rep) {
  ojson j;
  j["max_neighbor_defect"] = rep.max_neighbor_defect;
  j["max_defect"] = rep.max_defect;
  j["collision"] = rep.collision;
  return j;
}

}  // namespace slbethe
