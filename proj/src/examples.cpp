#include "argen/examples.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "argen/algfile.hpp"

namespace argen {

std::string fixture_path(const std::string& name) {
  return std::string(ARGEN_FIXTURE_DIR) + "/" + name + ".alg";
}

AlgebraPtr load_fixture(const std::string& name, std::uint32_t p) {
  return build_algebra(parse_alg_file(fixture_path(name)), p);
}

namespace {

std::size_t entry_index(const GeneratorSet& g, const std::string& base) {
  for (std::size_t i = 0; i < g.entries.size(); ++i)
    if (g.entries[i].base == base && !g.entries[i].projective) return i;
  throw std::logic_error("no generator entry with base " + base);
}

// One accepted exchange, recorded in the flow.
void step(FlowResult& out, const std::string& base,
          const DecomposeOptions& opts) {
  const GeneratorSet& cur = out.stages.back();
  std::size_t idx = entry_index(cur, base);
  std::string pos = cur.entries[idx].name();
  MutationResult r = mutate_via_shift(cur, idx, opts);
  if (!r.cert.accepted)
    throw std::logic_error("scripted exchange at " + pos + " was rejected");
  out.steps.push_back({pos, r.cert});
  out.stages.push_back(std::move(r.gens));
}

}  // namespace

FlowResult run_example1(std::uint32_t p, const DecomposeOptions& opts) {
  FlowResult out;
  out.alg = load_fixture("example1", p);
  out.hyp = validate_hypotheses(out.alg);
  out.stages.push_back(canonical_m0(out.alg, opts));
  step(out, "S1", opts);
  step(out, "S2", opts);
  step(out, "P1/soc", opts);
  step(out, "P2/soc", opts);
  out.closure_matches_shift =
      same_generator_set(out.final_set(), shift(out.stages[0], 1, opts), opts);
  return out;
}

FlowResult run_example2(std::uint32_t p, const DecomposeOptions& opts) {
  FlowResult out;
  out.alg = load_fixture("example2", p);
  out.hyp = validate_hypotheses(out.alg);
  out.stages.push_back(canonical_m0(out.alg, opts));
  step(out, "S1", opts);
  step(out, "S2", opts);
  step(out, "P1/soc", opts);
  return out;
}

namespace {

// Depth-first search for a chain of accepted exchanges realizing the target
// translation profile.
bool reach_profile(FlowResult& out,
                   const std::map<std::string, int>& target,
                   const DecomposeOptions& opts) {
  const GeneratorSet& cur = out.stages.back();
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < cur.entries.size(); ++i) {
    const GenEntry& e = cur.entries[i];
    if (e.projective) continue;
    auto it = target.find(e.base);
    if (it != target.end() && e.tau_offset < it->second) open.push_back(i);
  }
  if (open.empty()) return true;
  // Prefer simples and less-translated entries; matches the natural wave
  // order and keeps backtracking rare.
  std::stable_sort(open.begin(), open.end(), [&](std::size_t a,
                                                 std::size_t b) {
    const GenEntry &ea = cur.entries[a], &eb = cur.entries[b];
    if ((ea.base[0] == 'S') != (eb.base[0] == 'S')) return ea.base[0] == 'S';
    return ea.tau_offset < eb.tau_offset;
  });
  for (std::size_t idx : open) {
    std::string pos = cur.entries[idx].name();
    MutationResult r = mutate_via_shift(cur, idx, opts);
    if (!r.cert.accepted) continue;
    out.steps.push_back({pos, r.cert});
    out.stages.push_back(std::move(r.gens));
    if (reach_profile(out, target, opts)) return true;
    out.steps.pop_back();
    out.stages.pop_back();
  }
  return false;
}

}  // namespace

FlowResult run_example3(std::uint32_t p, const DecomposeOptions& opts) {
  FlowResult out;
  out.alg = load_fixture("example3", p);
  out.hyp = validate_hypotheses(out.alg);
  out.stages.push_back(canonical_m0(out.alg, opts));
  const std::map<std::string, int> target{
      {"S1", 1},     {"S2", 2},     {"S3", 0},     {"S4", 2},     {"S5", 1},
      {"P1/soc", 1}, {"P2/soc", 0}, {"P3/soc", 1}, {"P4/soc", 0},
      {"P5/soc", 1}};
  if (!reach_profile(out, target, opts))
    throw std::logic_error("no exchange chain reaches the target profile");
  // The candidate exchange at tau^-2(P3/soc) must be turned down.
  GeneratorSet shifted = shift(out.final_set(), 1, opts);
  std::size_t idx = entry_index(shifted, "P3/soc");
  MutationResult r = mutate(shifted, idx, opts);
  out.has_rejection = !r.cert.accepted;
  out.rejection = r.cert;
  out.rejected_candidate = out.final_set();
  GenEntry& e = out.rejected_candidate.entries[entry_index(
      out.rejected_candidate, "P3/soc")];
  e.rep = tau_inverse(e.rep);
  ++e.tau_offset;
  return out;
}

FlowResult run_example(int which, std::uint32_t p,
                       const DecomposeOptions& opts) {
  switch (which) {
    case 1:
      return run_example1(p, opts);
    case 2:
      return run_example2(p, opts);
    case 3:
      return run_example3(p, opts);
    default:
      throw std::invalid_argument("example number must be 1, 2 or 3");
  }
}

}  // namespace argen
