#include "jaclef/report.hpp"

namespace jaclef {

using nlohmann::json;

json to_json(const Certificate& c) {
  json j = {{"level", to_string(c.level)}, {"escalated", c.escalated}};
  if (c.p1) j["p1"] = c.p1;
  if (c.p2) j["p2"] = c.p2;
  return j;
}

json to_json(const HilbertFunction& h) {
  json j = {{"dims", h.dims}, {"certificate", to_json(h.cert)}};
  j["stable_from"] = h.stable_from ? json(*h.stable_from) : json(nullptr);
  return j;
}

json to_json(const SectionInvariants& s) {
  return {{"n", s.n},         {"d", s.d},
          {"r", s.r},         {"s", s.s},
          {"tau", s.tau},     {"isolated", s.isolated},
          {"cone", s.cone},   {"k0", s.k0},
          {"freeness", to_string(s.freeness)}, {"certificate", to_json(s.cert)}};
}

json to_json(const LefschetzVerdict& v) {
  json j = {{"k", v.k},
            {"power", v.power},
            {"target", to_string(v.target)},
            {"dim_from", v.dim_from},
            {"dim_to", v.dim_to},
            {"rank", v.rank},
            {"maximal", v.maximal},
            {"direction", to_string(v.direction)},
            {"certificate", to_json(v.cert)},
            {"trials_used", v.trials_used},
            {"deduced", v.deduced}};
  j["witness"] = v.witness ? json(to_string(*v.witness)) : json(nullptr);
  return j;
}

json to_json(const LefschetzReport& r) {
  json vs = json::array();
  for (const auto& v : r.verdicts) vs.push_back(to_json(v));
  return {{"target", to_string(r.target)},
          {r.strong ? "has_slp_range" : "has_wlp_range", r.holds},
          {"socle_degree", r.socle},
          {"artinian", r.artinian},
          {"verdicts", vs},
          {"certificate", to_json(r.cert)}};
}

namespace {

json verdicts(const std::vector<LefschetzVerdict>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

json invariants_or_null(const std::optional<SectionInvariants>& s) { return s ? to_json(*s) : json(nullptr); }

}  // namespace

json to_json(const TheoremOneReport& r) {
  return {{"preconditions",
           {{"transversal", r.transversal},
            {"section_singular", r.section_singular},
            {"section_isolated", r.section_isolated}}},
          {"section", to_string(r.section)},
          {"invariants", invariants_or_null(r.invariants)},
          {"k0", r.k0},
          {"per_degree_injectivity", verdicts(r.verdicts)},
          {"conclusion", to_string(r.conclusion)},
          {"note", r.note}};
}

json to_json(const CorNReport& r) {
  return {{"preconditions", {{"transversal", r.transversal}, {"section_singular", r.section_singular}}},
          {"invariants", invariants_or_null(r.invariants)},
          {"k0", r.k0},
          {"socle_degree", r.socle},
          {"injective_half", verdicts(r.injective_half)},
          {"surjective_half", verdicts(r.surjective_half)},
          {"duality_consistent", r.duality_consistent},
          {"conclusion", to_string(r.conclusion)},
          {"note", r.note}};
}

json to_json(const ExHypReport& r) {
  return {{"n", r.n},
          {"d", r.d},
          {"tau", r.tau},
          {"surjective_from", r.surjective_from},
          {"bijective_from", r.bijective_from},
          {"i_max", r.i_max},
          {"verdicts", verdicts(r.verdicts)},
          {"surjectivity_holds", r.surjectivity_holds},
          {"bijectivity_holds", r.bijectivity_holds},
          {"conclusion", to_string(r.conclusion)},
          {"note", r.note}};
}

json to_json(const ExCurvesReport& r) {
  return {{"d", r.d},
          {"tau", r.tau},
          {"i0", r.i0},
          {"ct", r.ct.ct},
          {"ct_reached_kmax", r.ct.reached_kmax},
          {"ct_criterion", r.ct_criterion},
          {"injective_range", verdicts(r.injective_range)},
          {"surjective_range", verdicts(r.surjective_range)},
          {"injectivity_holds", r.injectivity_holds},
          {"surjectivity_holds", r.surjectivity_holds},
          {"criterion_agrees", r.criterion_agrees},
          {"conclusion", to_string(r.conclusion)},
          {"note", r.note}};
}

json to_json(const ProbeReport& r) {
  return {{"slp", to_json(r.slp)},
          {"counterexample_candidate", r.counterexample},
          {"conclusion", to_string(r.conclusion)},
          {"note", r.note}};
}

json to_json(const Extension& e) {
  return {{"found", e.f.has_value()},
          {"f", e.f ? json(to_string(*e.f)) : json(nullptr)},
          {"trials_used", e.trials_used},
          {"certificate", to_json(e.cert)}};
}

json to_json(const CheckResult& c) {
  return {{"key", c.key}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}, {"level", c.level}};
}

json run_report(const std::string& command, const ComputeOptions& opt, json result) {
  return {{"schema_version", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"command", command},
          {"seed", opt.seed},
          {"field", opt.field.to_string()},
          {"policy", to_string(opt.policy)},
          {"result", std::move(result)}};
}

}  // namespace jaclef
