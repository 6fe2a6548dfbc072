#pragma once

// Proof certificates: a sequence of (position, rule, direction) rewrite steps
// connecting two terms. replay applies the steps from the start term and
// fails loudly (StepMismatch) if any step does not apply.
//
// Serialization is a JSON list of {"pos": [0,1,...], "rule": name,
// "dir": "fwd"|"bwd"}, with 0 = left and 1 = right. Two optional fields make
// every certificate self-contained:
//   "pick"  index among the rule's matches at that position/direction,
//           written only when nonzero (twist-idem backward, for example,
//           matches once per block split);
//   "pre"   the pre-image subterm for a backward step of an oriented
//           group-I rule, which is not reconstructible from the result
//           (the whole point of group I is that information is lost).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rewrite.hpp"
#include "surface.hpp"
#include "term.hpp"

namespace pralg {

struct Proof {
  Term start, end;
  std::vector<ProofStep> steps;
};

inline nlohmann::json step_to_json(const ProofStep& st) {
  nlohmann::json j;
  j["pos"] = nlohmann::json::array();
  for (Dir d : st.pos) j["pos"].push_back(d == Dir::left ? 0 : 1);
  j["rule"] = st.rule;
  j["dir"] = st.dir == RDir::fwd ? "fwd" : "bwd";
  if (st.pick != 0) j["pick"] = st.pick;
  if (st.pre) j["pre"] = term_to_json(*st.pre);
  return j;
}

inline nlohmann::json proof_to_json(const Proof& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const ProofStep& st : p.steps) j.push_back(step_to_json(st));
  return j;
}

inline std::vector<ProofStep> steps_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SchemaError("$: proof must be a JSON list of steps");
  std::vector<ProofStep> steps;
  for (std::size_t idx = 0; idx < j.size(); ++idx) {
    const auto& sj = j[idx];
    const std::string path = "$[" + std::to_string(idx) + "]";
    if (!sj.is_object()) throw SchemaError(path + ": expected an object");
    ProofStep st;
    if (!sj.contains("pos") || !sj.at("pos").is_array())
      throw SchemaError(path + ".pos: expected an array of 0/1");
    for (const auto& v : sj.at("pos")) {
      if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1))
        throw SchemaError(path + ".pos: entries must be 0 (left) or 1 (right)");
      st.pos.push_back(v.get<int>() == 0 ? Dir::left : Dir::right);
    }
    if (!sj.contains("rule") || !sj.at("rule").is_string())
      throw SchemaError(path + ".rule: expected a string");
    st.rule = sj.at("rule").get<std::string>();
    if (!sj.contains("dir") || !sj.at("dir").is_string())
      throw SchemaError(path + ".dir: expected \"fwd\" or \"bwd\"");
    const std::string d = sj.at("dir").get<std::string>();
    if (d != "fwd" && d != "bwd") throw SchemaError(path + ".dir: expected \"fwd\" or \"bwd\"");
    st.dir = d == "fwd" ? RDir::fwd : RDir::bwd;
    if (sj.contains("pick")) {
      if (!sj.at("pick").is_number_integer())
        throw SchemaError(path + ".pick: expected an integer");
      st.pick = sj.at("pick").get<int>();
    }
    if (sj.contains("pre")) st.pre = detail::term_from_json_at(sj.at("pre"), path + ".pre");
    steps.push_back(std::move(st));
  }
  return steps;
}

// Applies one step; index is only for error reporting.
inline Term apply_step(const Term& cur, const ProofStep& st, std::size_t index) {
  const Rule* r = find_rule(st.rule);
  if (!r) throw StepMismatch(index, "unknown rule '" + st.rule + "'");
  if (!valid_position(cur, st.pos)) throw StepMismatch(index, "position not valid here");
  const Term sub = subterm(cur, st.pos);
  if (st.dir == RDir::bwd && !r->bidirectional) {
    if (!st.pre)
      throw StepMismatch(index, std::string("backward ") + r->name + " needs its pre-image");
    for (const Term& s : r->fwd(*st.pre))
      if (s == sub) return replace(cur, st.pos, *st.pre);
    throw StepMismatch(index, "pre-image does not rewrite to the subterm found here");
  }
  auto out = apply_rule(*r, st.dir, sub);
  if (st.pick < 0 || st.pick >= static_cast<int>(out.size()))
    throw StepMismatch(index, std::string(r->name) + " does not match at this position");
  return replace(cur, st.pos, out[st.pick]);
}

inline Term replay(const Term& start, const std::vector<ProofStep>& steps) {
  Term cur = start;
  for (std::size_t i = 0; i < steps.size(); ++i) cur = apply_step(cur, steps[i], i);
  return cur;
}

inline Term replay(const Proof& p) { return replay(p.start, p.steps); }

// Replays and checks that the proof really connects start to end.
inline bool check_proof(const Proof& p) { return replay(p) == p.end; }

// Inverts a step sequence: the result transforms replay(from, steps) back to
// `from`. Backward steps of bidirectional rules flip to forward ones; forward
// steps of oriented rules become backward steps carrying their pre-image.
inline std::vector<ProofStep> invert_steps(const Term& from,
                                           const std::vector<ProofStep>& steps) {
  std::vector<Term> seq{from};
  for (std::size_t i = 0; i < steps.size(); ++i)
    seq.push_back(apply_step(seq.back(), steps[i], i));
  std::vector<ProofStep> out;
  for (std::size_t i = steps.size(); i-- > 0;) {
    const ProofStep& st = steps[i];
    const Term before_sub = subterm(seq[i], st.pos);
    const Term after_sub = subterm(seq[i + 1], st.pos);
    const Rule* r = find_rule(st.rule);
    if (!r->bidirectional) {
      out.push_back({st.rule, st.pos, RDir::bwd, 0, before_sub});
      continue;
    }
    const RDir inv = st.dir == RDir::fwd ? RDir::bwd : RDir::fwd;
    auto cands = apply_rule(*r, inv, after_sub);
    int pick = -1;
    for (std::size_t j = 0; j < cands.size(); ++j)
      if (cands[j] == before_sub) { pick = static_cast<int>(j); break; }
    if (pick < 0)
      throw Error(std::string("invert_steps: rule ") + st.rule + " is not invertible here");
    out.push_back({st.rule, st.pos, inv, pick, std::nullopt});
  }
  return out;
}

}  // namespace pralg
