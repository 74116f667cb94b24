#include "cotstruct/report_json.hpp"

#include "cotstruct/formats.hpp"

namespace cotstruct {

Json json_of(const ChainMap& f) {
  Json comps = Json::object();
  for (const auto& [k, block] : f.components()) {
    Json rows = Json::array();
    for (std::size_t t = 0; t < block.dst().size(); ++t) {
      Json row = Json::array();
      for (std::size_t s = 0; s < block.src().size(); ++s) row.push_back(entry_to_string(block.at(t, s)));
      rows.push_back(row);
    }
    comps[std::to_string(k)] = rows;
  }
  return Json{{"shift", f.shift()}, {"components", comps}};
}

Json json_of(const Complex& x) {
  Json terms = Json::object();
  for (const auto& [n, summands] : x.terms()) {
    Json labels = Json::array();
    for (int v : summands) labels.push_back(x.algebra()->quiver().vertex_label(v));
    terms[std::to_string(n)] = labels;
  }
  Json h = Json::object();
  for (const auto& [n, d] : cohomology_dims(x)) h[std::to_string(n)] = d;
  return Json{{"terms", terms}, {"cohomology", h}, {"total_path_dim", x.total_path_dim()}};
}

Json json_of(const HomWitness& w) {
  return Json{{"generator", w.generator_index}, {"shift", w.shift}, {"class", json_of(w.representative)}};
}

Json json_of(const HomSpaceBasis& basis, bool include_reps) {
  Json j{{"dimension", basis.dimension()},
         {"chain_map_dimension", basis.ambient_dimension},
         {"null_homotopic_dimension", basis.boundary_dimension}};
  if (include_reps) {
    Json reps = Json::array();
    for (const auto& r : basis.representatives) reps.push_back(json_of(r));
    j["representatives"] = reps;
  }
  return j;
}

Json json_of(const Tower& tower) {
  Json steps = Json::array();
  for (const auto& st : tower.steps) {
    Json summands = Json::array();
    for (const auto& [gen, shift, mult] : st.r_summands)
      summands.push_back(Json{{"generator", gen}, {"suspension", shift}, {"multiplicity", mult}});
    steps.push_back(Json{{"r_summands", summands},
                         {"r", json_of(st.r)},
                         {"b_next", json_of(st.b_next)}});
  }
  return Json{{"length", tower.steps.size()}, {"terminated", tower.terminated}, {"steps", steps}};
}

Json json_of(const Decomposition& dec) {
  Json j{{"input", json_of(dec.input)},
         {"a_part", json_of(dec.a_part)},
         {"b_part", json_of(dec.b_part)},
         {"tower", json_of(dec.tower)}};
  if (dec.a_membership) j["a_part_in_A_bar"] = dec.a_membership->member;
  return j;
}

Json json_of(const SesReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"generator", row.gen},
                        {"suspension", row.i},
                        {"m", row.m},
                        {"dim_R", row.lhs},
                        {"dim_B_next", row.rhs_next},
                        {"dim_B", row.rhs_cur},
                        {"ok", row.ok}});
  return Json{{"step", r.step}, {"pass", r.pass}, {"rows", rows}};
}

Json json_of(const ApproxMapsReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"sample", row.sample},
                        {"m", row.m},
                        {"dim_from_next", row.dim_next},
                        {"dim_from_current", row.dim_cur},
                        {"induced_rank", row.induced_rank},
                        {"ok", row.ok}});
  return Json{{"step", r.step}, {"pass", r.pass}, {"rows", rows}};
}

Json json_of(const IsomReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"sample", row.sample},
                        {"suspension", row.i},
                        {"dim_from_b", row.dim_b},
                        {"dim_from_x", row.dim_x},
                        {"induced_rank", row.induced_rank},
                        {"ok", row.ok}});
  return Json{{"pass", r.pass}, {"rows", rows}};
}

namespace {
Json json_of(const PairWitness& w) {
  return Json{{"from", w.s_from},
              {"to", w.s_to},
              {"shift", w.shift},
              {"dimension", w.dim},
              {"class", json_of(w.representative)}};
}
Json json_of(const std::vector<PairWitness>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(json_of(w));
  return arr;
}
}  // namespace

Json json_of(const SetupReport& r) {
  return Json{{"condition1_pass", r.cond1_pass},
              {"condition2_pass", r.cond2_pass},
              {"condition1_failures", json_of(r.cond1_failures)},
              {"condition2_failures", json_of(r.cond2_failures)}};
}

Json json_of(const CorigidReport& r) {
  return Json{{"corigid_pass", r.corigid_pass},
              {"no_self_extension_pass", r.no_self_ext_pass},
              {"failures", json_of(r.failures)}};
}

Json json_of(const AxiomReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json j{{"what", f.what}};
    if (f.object_index) j["object"] = *f.object_index;
    failures.push_back(j);
  }
  return Json{{"summand_closure", verdict_name(r.summand_closure)},
              {"shift_closure", verdict_name(r.shift_closure)},
              {"orthogonality", verdict_name(r.orthogonality)},
              {"orthogonality_pairs", r.orthogonality_pairs},
              {"decompositions", verdict_name(r.decompositions)},
              {"finite_type", verdict_name(r.finite_type)},
              {"nonterminating_objects", r.nonterminating_objects},
              {"failures", failures},
              {"pass", r.all_pass()}};
}

Json json_of(const MembershipEqualityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"object", row.object},
                        {"in_A_bar", row.a_bar},
                        {"shifted_b_contractible", row.shifted_b_contractible},
                        {"forward_ok", row.forward_ok},
                        {"sampled_ok", row.sampled_ok},
                        {"a_part_ok", row.a_part_ok},
                        {"ok", row.ok()}});
  return Json{{"pass", r.pass}, {"rows", rows}};
}

Json json_of(const GeneratingReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"probe", row.probe},
                        {"all_hom_vanish", row.all_hom_vanish},
                        {"contractible", row.contractible},
                        {"ok", row.ok}});
  return Json{{"pass", r.pass}, {"rows", rows}};
}

Json json_of(const Setup2IsoReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"generator", row.gen},
                        {"suspension", row.i},
                        {"dim_x", row.dim_x},
                        {"dim_b", row.dim_b},
                        {"induced_rank", row.induced_rank},
                        {"bijective", row.bijective}});
  return Json{{"all_bijective", r.all_bijective}, {"rows", rows}};
}

Json json_of(const NondegeneracyReport& r) {
  Json j{{"window", r.window}, {"conclusive", r.conclusive()}};
  if (r.b_break) j["b_break"] = *r.b_break;
  if (r.a_break) j["a_break"] = *r.a_break;
  if (r.b_witness) j["b_witness"] = json_of(*r.b_witness);
  if (r.a_witness) j["a_witness"] = json_of(*r.a_witness);
  return j;
}

Json json_of(const AdjacencyReport& r) {
  return Json{{"rigidity_pass", r.rigidity_pass},
              {"rigidity_failures", json_of(r.rigidity_failures)},
              {"generation", json_of(r.generation)},
              {"established", r.established},
              {"shared_class_note",
               "the coaisle B and the aisle of the induced t-structure are the same "
               "vanishing condition Hom(S, Sigma^{n>0} X) = 0"},
              {"cross_validation", verdict_name(r.cross_validation)},
              {"cross_validation_failures", r.cross_validation_failures}};
}

}  // namespace cotstruct
