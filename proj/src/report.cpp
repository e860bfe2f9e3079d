#include "argen/report.hpp"

#include <sstream>

namespace argen {

ordered_json to_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return ordered_json{{"rows", m.rows()}, {"cols", m.cols()},
                      {"entries", std::move(rows)}};
}

ordered_json to_json(const Rep& x) {
  ordered_json arrows = ordered_json::array();
  for (std::size_t a = 0; a < x.algebra()->quiver().arrows.size(); ++a)
    arrows.push_back(to_json(x.arrow(static_cast<int>(a))));
  return ordered_json{{"dims", x.dims()}, {"arrows", std::move(arrows)}};
}

ordered_json to_json(const GenEntry& e) {
  return ordered_json{{"name", e.name()},
                      {"dims", e.rep.dims()},
                      {"projective", e.projective}};
}

ordered_json to_json(const GeneratorSet& g) {
  ordered_json entries = ordered_json::array();
  for (const GenEntry& e : g.entries) entries.push_back(to_json(e));
  return ordered_json{{"entries", std::move(entries)}};
}

ordered_json to_json(const MutationCertificate& c) {
  ordered_json j{{"accepted", c.accepted},
                 {"branch", c.branch},
                 {"reason", c.reason},
                 {"middle_term_in_add", c.middle_term_in_add},
                 {"rel_syzygy_in_add", c.rel_syzygy_in_add},
                 {"replaced_dims", c.replaced_dims},
                 {"replacement_dims", c.replacement_dims}};
  if (c.stable_hom_dim >= 0) {
    j["stable_hom_dim"] = c.stable_hom_dim;
    j["plain_syzygy_in_add"] = c.plain_syzygy_in_add;
  }
  return j;
}

ordered_json to_json(const HypothesesReport& h) {
  return ordered_json{{"rad_cube_zero", h.rad_cube_zero},
                      {"selfinjective", h.selfinjective},
                      {"weakly_symmetric", h.weakly_symmetric},
                      {"infinite_type_assumed", h.infinite_type_assumed},
                      {"fast_branch_ok", h.fast_branch_ok()}};
}

ordered_json to_json(const WindowReport& w) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : w.entries)
    entries.push_back(ordered_json{{"name", e.name},
                                   {"dims", e.dims},
                                   {"rel_pd", e.rel_pd},
                                   {"ok", e.ok}});
  return ordered_json{{"all_ok", w.all_ok}, {"entries", std::move(entries)}};
}

ordered_json to_json(const Family& f) {
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    const FamilyNode& n = f.nodes[i];
    nodes.push_back(ordered_json{{"id", i},
                                 {"parent", n.parent},
                                 {"mutated_pos", n.mutated_pos},
                                 {"via_shift", n.via_shift},
                                 {"gens", to_json(n.gens)}});
  }
  return ordered_json{{"attempted", f.attempted},
                      {"count", f.nodes.size()},
                      {"nodes", std::move(nodes)}};
}

std::string family_dot(const Family& f) {
  std::ostringstream os;
  os << "digraph mutations {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << f.nodes[i].gens.describe()
       << "\", shape=box];\n";
  }
  for (std::size_t i = 0; i < f.nodes.size(); ++i) {
    const FamilyNode& n = f.nodes[i];
    if (n.parent < 0) continue;
    os << "  n" << n.parent << " -> n" << i << " [label=\""
       << f.nodes[n.parent].gens.entries[n.mutated_pos].name() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace argen
