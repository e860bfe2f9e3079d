#pragma once

#include <string>

#include <json.hpp>

#include "argen/approx.hpp"
#include "argen/hypotheses.hpp"
#include "argen/mutation.hpp"

namespace argen {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Mat& m);
ordered_json to_json(const Rep& x);
ordered_json to_json(const GenEntry& e);
ordered_json to_json(const GeneratorSet& g);
ordered_json to_json(const MutationCertificate& c);
ordered_json to_json(const HypothesesReport& h);
ordered_json to_json(const WindowReport& w);
ordered_json to_json(const Family& f);

// Graphviz rendering of the mutation graph.
std::string family_dot(const Family& f);

}  // namespace argen
