#include "dfm/report.hpp"

namespace dfm {

Json vec_to_json(const VecF& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Json polyf_to_json(const PolyF& p) {
  Json j;
  j["text"] = polyf_to_string(p);
  j["degree"] = p.degree();
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.str());
  j["coefficients"] = std::move(c);
  return j;
}

Json to_json(const CanonicalDecomposition& d) {
  Json j;
  j["rank"] = d.rank();
  Json basis = Json::array();
  for (const auto& f : d.basis) basis.push_back(f.str());
  j["basis"] = std::move(basis);
  Json cs = Json::array();
  for (const auto& c : d.constants) cs.push_back(matrix_to_json(c));
  j["constants"] = std::move(cs);
  return j;
}

Json to_json(const TypeReport& r) {
  Json j;
  j["n"] = r.n;
  j["commutes_c1"] = r.commutes_c1;
  j["rank_over_F"] = r.rank_over_F;
  j["nilpotent"] = r.nilpotent;
  j["nonderogatory"] = r.nonderogatory;
  j["minimal_polynomial"] = polyf_to_json(r.minimal_polynomial);
  j["type1"] = r.type1 ? to_json(*r.type1) : Json(nullptr);
  if (r.type2) {
    j["type2"] = Json{{"f", vec_to_json(r.type2->f)}, {"g", vec_to_json(r.type2->g)}};
  } else {
    j["type2"] = nullptr;
  }
  if (r.type3) {
    j["type3"] = Json{{"h", r.type3->h.str()}, {"f", vec_to_json(r.type3->f)}, {"g", vec_to_json(r.type3->g)}};
  } else {
    j["type3"] = nullptr;
  }
  Json types = Json::array();
  if (r.type1) types.push_back(1);
  if (r.type2) types.push_back(2);
  if (r.type3) types.push_back(3);
  j["types"] = std::move(types);
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["block_count"] = d.blocks.blocks.size();
  Json eps = Json::array();
  for (const auto& e : d.projectors.epsilons) eps.push_back(polyf_to_json(e));
  j["epsilons"] = std::move(eps);
  Json proj = Json::array();
  for (const auto& e : d.projectors.projectors) proj.push_back(matrix_to_json(e));
  j["projectors"] = std::move(proj);
  j["T"] = matrix_to_json(d.blocks.T);
  j["T_inv"] = matrix_to_json(d.blocks.T_inv);
  Json blocks = Json::array();
  for (std::size_t k = 0; k < d.blocks.blocks.size(); ++k) {
    Json b;
    b["size"] = d.blocks.blocks[k].rows();
    b["matrix"] = matrix_to_json(d.blocks.blocks[k]);
    b["minimal_polynomial"] = polyf_to_json(d.blocks.block_min_polys[k]);
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json diagonalization_json(const std::optional<KDiagonalization>& d, int root_bound) {
  Json j;
  j["root_bound"] = root_bound;
  j["found"] = d.has_value();
  if (d) {
    j["T"] = matrix_to_json(d->T);
    j["diagonal"] = vec_to_json(d->diagonal);
  } else {
    j["status"] = "not K-diagonalizable within root bound";
  }
  return j;
}

Json to_json(const IndependenceReport& r, std::span<const RatFunc> inputs) {
  Json j;
  Json in = Json::array();
  for (const auto& f : inputs) in.push_back(f.str());
  j["inputs"] = std::move(in);
  j["rank"] = r.rank;
  j["basis_indices"] = r.basis_indices;
  j["wronskian"] = r.wronskian.str();
  j["certificate"] = r.rank ? matrix_to_json(r.certificate) : Json::array();
  return j;
}

Json to_json(const newton::ExperimentSummary& s) {
  Json j;
  j["n"] = s.n;
  j["r"] = s.r;
  j["max_degree_used"] = s.max_degree_used;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["near_type2"] = s.near_type2;
  j["converged_count"] = s.converged_count;
  j["convergence_rate"] = s.convergence_rate;
  j["type1_among_converged"] = s.type1_among_converged;
  j["type1_fraction_among_converged"] = s.type1_fraction_among_converged;
  j["breakdown_count"] = s.breakdown_count;
  j["residual"] = Json{{"max", s.residual_max}, {"mean", s.residual_mean}};
  j["commutator"] = Json{{"max", s.commutator_max}, {"mean", s.commutator_mean}};
  j["mean_iterations"] = s.mean_iterations;
  if (!s.records.empty()) {
    Json recs = Json::array();
    for (const auto& r : s.records) {
      recs.push_back(Json{{"index", r.index},
                          {"breakdown", r.breakdown},
                          {"converged", r.result.converged},
                          {"iterations", r.result.iterations},
                          {"final_residual_norm", r.result.final_residual_norm},
                          {"approx_type1", r.result.approx_type1},
                          {"max_pairwise_commutator_norm", r.result.max_pairwise_commutator_norm}});
    }
    j["per_trial"] = std::move(recs);
  }
  return j;
}

}  // namespace dfm
