#include "facekit/errors.hpp"
#include "facekit/seqmodels.hpp"
#include "internal.hpp"

#include <algorithm>
#include <thread>

namespace facekit {

using nlohmann::json;
using detail::CheckResult;
using detail::Instance;
using detail::PropertyDef;
using detail::Result;

namespace {

const std::string kSeqRegression = "P-SEQ-REGRESSION";

const PropertyDef* find_def(const std::string& id)
{
  for (const PropertyDef& d : detail::polytope_properties())
    if (d.info.id == id)
      return &d;
  return nullptr;
}

bool glob_match(const std::string& pat, const std::string& s)
{
  std::size_t p = 0, i = 0, star = std::string::npos, mark = 0;
  while (i < s.size()) {
    if (p < pat.size() && pat[p] == s[i]) {
      ++p;
      ++i;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*')
    ++p;
  return p == pat.size();
}

CheckResult guarded_check(const PropertyDef& def, const Instance& in, const detail::Kernels& k)
{
  try {
    return def.check(in, k);
  } catch (const std::exception& e) {
    return CheckResult::fail(std::string("exception: ") + e.what());
  }
}

bool still_fails(const PropertyDef& def, const Instance& in, const detail::Kernels& k)
{
  try {
    return def.check(in, k).result == Result::Fail;
  } catch (const std::exception&) {
    return false;
  }
}

// Greedy removal of points, then vertices, keeping the failure.
std::size_t minimize(const PropertyDef& def, Instance& in, const detail::Kernels& k, std::string& message)
{
  std::size_t steps = 0, attempts = 0;
  constexpr std::size_t kMaxAttempts = 4000;
  bool progress = true;
  while (progress && steps < kMinimizeSteps && attempts < kMaxAttempts) {
    progress = false;
    for (std::size_t j = 0; j < in.points.size() && in.points.size() > 1 && steps < kMinimizeSteps; ++attempts) {
      Instance cand = in;
      cand.points.erase(cand.points.begin() + static_cast<long>(j));
      if (attempts < kMaxAttempts && still_fails(def, cand, k)) {
        in = std::move(cand);
        ++steps;
        progress = true;
      } else {
        ++j;
      }
    }
    for (std::size_t p = 0; p < in.polys.size(); ++p)
      for (std::size_t v = 0; v < in.polys[p].size() && in.polys[p].size() > 1 && steps < kMinimizeSteps;
           ++attempts) {
        std::vector<RatVec> verts = in.polys[p].verts();
        verts.erase(verts.begin() + static_cast<long>(v));
        Instance cand = in;
        cand.polys[p] = VPolytope(in.polys[p].dim(), verts);
        if (attempts < kMaxAttempts && still_fails(def, cand, k)) {
          in = std::move(cand);
          ++steps;
          progress = true;
        } else {
          ++v;
        }
      }
  }
  message = guarded_check(def, in, k).message;
  return steps;
}

struct TrialRecord {
  Instance instance;
  CheckResult result;
};

std::vector<TrialRecord> run_trials(const PropertyDef& def, const GenConfig& cfg, const detail::Kernels& k)
{
  std::vector<TrialRecord> rec(cfg.trials);
  auto work = [&](std::size_t t) {
    Rng rng(sub_seed(cfg.seed, def.info.id, t));
    try {
      rec[t].instance = def.generate(rng, cfg);
    } catch (const std::exception& e) {
      rec[t].result = CheckResult::fail(std::string("generation failed: ") + e.what());
      return;
    }
    rec[t].result = guarded_check(def, rec[t].instance, k);
    if (rec[t].result.result == Result::Invalid)
      rec[t].result = CheckResult::fail("generated instance violates the precondition: " + rec[t].result.message);
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads = std::min<std::size_t>({hw, 8, cfg.trials});
  if (nthreads <= 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t)
      work(t);
    return rec;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < nthreads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t t = w; t < cfg.trials; t += nthreads)
        work(t);
    });
  for (auto& th : pool)
    th.join();
  return rec;
}

PropertyReport run_polytope_property(const PropertyDef& def, const GenConfig& cfg, const Hooks& hooks)
{
  const detail::Kernels k{hooks};
  std::vector<TrialRecord> rec = run_trials(def, cfg, k);

  PropertyReport rep;
  rep.property_id = def.info.id;
  rep.seed = cfg.seed;
  rep.trials = cfg.trials;
  std::size_t pairs = 0, skipped = 0, ran = 0;
  std::optional<std::size_t> first_fail;
  for (std::size_t t = 0; t < rec.size(); ++t) {
    pairs += rec[t].result.pairs;
    switch (rec[t].result.result) {
      case Result::Skipped:
        ++skipped;
        break;
      case Result::Fail:
        if (!first_fail)
          first_fail = t;
        ++ran;
        break;
      default:
        ++ran;
    }
  }
  rep.notes.push_back(def.info.statement);
  rep.notes.push_back("elementary checks: " + std::to_string(pairs));
  if (skipped)
    rep.notes.push_back("skipped trials (hypothesis not met): " + std::to_string(skipped));
  for (const std::string& a : def.assumptions)
    rep.notes.push_back("assumption: " + a);

  if (first_fail) {
    const std::size_t t = *first_fail;
    Instance in = rec[t].instance;
    std::string message = rec[t].result.message;
    std::size_t steps = 0;
    if (!in.polys.empty() || !in.boxes.empty())
      steps = minimize(def, in, k, message);
    rep.status = Status::Fail;
    rep.counterexample = json{{"trial", t},
                              {"sub_seed", sub_seed(cfg.seed, def.info.id, t)},
                              {"message", message},
                              {"minimization_steps", steps},
                              {"instance", detail::to_json(in)}};
  } else {
    rep.status = ran > 0 ? Status::Pass : Status::Inconclusive;
  }
  return rep;
}

PropertyReport run_seq_regression(const GenConfig& cfg)
{
  PropertyReport rep;
  rep.property_id = kSeqRegression;
  rep.seed = cfg.seed;
  std::size_t fails = 0;
  for (const std::string& set : claim_set_names())
    for (const Claim& c : claims_for(set)) {
      ++rep.trials;
      const bool ok = c.pass && revalidate(c.cert);
      if (!ok && !rep.counterexample) {
        ++fails;
        rep.counterexample = json{{"claim_set", set}, {"claim", c.name}, {"report", to_json(c)}};
      } else if (!ok) {
        ++fails;
      }
    }
  rep.status = fails ? Status::Fail : Status::Pass;
  rep.notes.push_back("seqmodels corpus and claim sets replayed with certificate revalidation");
  rep.notes.push_back("deterministic: one trial per claim, the seed does not apply");
  if (fails)
    rep.notes.push_back("failing claims: " + std::to_string(fails));
  return rep;
}

}  // namespace

std::string to_string(Status s)
{
  switch (s) {
    case Status::Pass:
      return "Pass";
    case Status::Fail:
      return "Fail";
    case Status::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

json to_json(const PropertyReport& r)
{
  json j{{"property_id", r.property_id},
         {"status", to_string(r.status)},
         {"trials", r.trials},
         {"seed", r.seed},
         {"notes", r.notes}};
  if (r.counterexample)
    j["counterexample"] = *r.counterexample;
  return j;
}

json to_json(const std::vector<PropertyReport>& rs)
{
  json a = json::array();
  for (const PropertyReport& r : rs)
    a.push_back(to_json(r));
  return a;
}

const std::vector<PropertyInfo>& property_registry()
{
  static const std::vector<PropertyInfo> reg = [] {
    std::vector<PropertyInfo> r;
    for (const PropertyDef& d : detail::polytope_properties())
      r.push_back(d.info);
    r.push_back({kSeqRegression, "every corpus verdict and claim of the sequence-space models holds"});
    return r;
  }();
  return reg;
}

std::vector<std::string> select_properties(const std::string& filter)
{
  const auto& reg = property_registry();
  std::vector<bool> keep(reg.size(), false);
  if (filter.empty())
    keep.assign(reg.size(), true);
  std::size_t pos = 0;
  while (!filter.empty() && pos <= filter.size()) {
    std::size_t comma = filter.find(',', pos);
    std::string item = filter.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? filter.size() + 1 : comma + 1;
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty())
      continue;
    bool hit = false;
    for (std::size_t i = 0; i < reg.size(); ++i)
      if (glob_match(item, reg[i].id)) {
        keep[i] = true;
        hit = true;
      }
    if (!hit && item.find('*') == std::string::npos)
      throw InputError("unknown property id '" + item + "'");
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (keep[i])
      ids.push_back(reg[i].id);
  return ids;
}

PropertyReport run_property(const std::string& id, const GenConfig& cfg, const Hooks& hooks)
{
  cfg.validate();
  if (id == kSeqRegression)
    return run_seq_regression(cfg);
  const PropertyDef* def = find_def(id);
  if (!def)
    throw InputError("unknown property id '" + id + "'");
  return run_polytope_property(*def, cfg, hooks);
}

std::vector<PropertyReport> run_all(const GenConfig& cfg, const std::vector<std::string>& ids, const Hooks& hooks)
{
  std::vector<PropertyReport> out;
  for (const std::string& id : ids)
    out.push_back(run_property(id, cfg, hooks));
  return out;
}

std::vector<PropertyReport> run_all(const GenConfig& cfg) { return run_all(cfg, select_properties("")); }

bool counterexample_fails(const std::string& id, const json& cx, const Hooks& hooks)
{
  if (id == kSeqRegression) {
    const std::string set = cx.at("claim_set").get<std::string>();
    const std::string name = cx.at("claim").get<std::string>();
    for (const Claim& c : claims_for(set))
      if (c.name == name)
        return !(c.pass && revalidate(c.cert));
    return false;
  }
  const PropertyDef* def = find_def(id);
  if (!def)
    throw InputError("unknown property id '" + id + "'");
  const detail::Kernels k{hooks};
  return still_fails(*def, detail::instance_from_json(cx.at("instance")), k);
}

}  // namespace facekit
