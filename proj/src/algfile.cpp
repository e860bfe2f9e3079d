#include "argen/algfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace argen {

namespace {

[[noreturn]] void fail(const std::string& origin, int line,
                       const std::string& msg) {
  throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trimmed(std::string s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// A term is [coef*]label[*label]...; labels are resolved later so that the
// arrow section may in principle follow relations.
RelTerm parse_term(const std::string& text, const Quiver& q,
                   const std::string& origin, int line) {
  std::vector<std::string> factors;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, '*')) {
    piece = trimmed(piece);
    if (piece.empty()) fail(origin, line, "empty factor in relation term");
    factors.push_back(piece);
  }
  if (factors.empty()) fail(origin, line, "empty relation term");
  RelTerm t;
  std::size_t first = 0;
  if (std::isdigit(static_cast<unsigned char>(factors[0][0]))) {
    t.coef = std::stoll(factors[0]);
    first = 1;
    if (first == factors.size())
      fail(origin, line, "relation term has no arrows");
  }
  for (std::size_t i = first; i < factors.size(); ++i) {
    int idx = q.arrow_index(factors[i]);
    if (idx < 0) fail(origin, line, "unknown arrow '" + factors[i] + "'");
    t.word.push_back(idx);
  }
  return t;
}

Relation parse_relation(const std::string& text, const Quiver& q,
                        const std::string& origin, int line) {
  Relation rel;
  std::string term;
  long long sign = 1;
  auto flush = [&](long long next_sign) {
    term = trimmed(term);
    if (term.empty()) fail(origin, line, "misplaced sign in relation");
    RelTerm t = parse_term(term, q, origin, line);
    t.coef *= sign;
    rel.terms.push_back(std::move(t));
    term.clear();
    sign = next_sign;
  };
  for (char c : text) {
    if (c == '+')
      flush(1);
    else if (c == '-')
      flush(-1);
    else
      term += c;
  }
  flush(1);
  return rel;
}

}  // namespace

AlgFile parse_alg(std::istream& in, const std::string& origin) {
  AlgFile f;
  bool saw_vertices = false;
  std::string raw;
  int line = 0;
  std::vector<std::pair<int, std::string>> pending_relations;
  while (std::getline(in, raw)) {
    ++line;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trimmed(raw);
    if (raw.empty()) continue;
    std::istringstream ls(raw);
    std::string kw;
    ls >> kw;
    if (kw == "prime") {
      long long p = -1;
      ls >> p;
      if (p < 2 || !PrimeField::is_prime(static_cast<std::uint32_t>(p)))
        fail(origin, line, "prime directive needs a prime number");
      f.prime = static_cast<std::uint32_t>(p);
    } else if (kw == "vertices") {
      int n = 0;
      ls >> n;
      if (n < 1) fail(origin, line, "vertices directive needs a count >= 1");
      f.quiver.num_vertices = n;
      saw_vertices = true;
    } else if (kw == "bound") {
      int b = 0;
      ls >> b;
      if (b < 1) fail(origin, line, "bound directive needs a value >= 1");
      f.bound = b;
    } else if (kw == "arrow") {
      // arrow label: i -> j
      std::string rest;
      std::getline(ls, rest);
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos)
        fail(origin, line, "arrow directive needs 'label: i -> j'");
      std::string label = trimmed(rest.substr(0, colon));
      if (label.empty()) fail(origin, line, "empty arrow label");
      std::string ends = rest.substr(colon + 1);
      std::size_t sep = ends.find("->");
      if (sep == std::string::npos)
        fail(origin, line, "arrow directive needs 'i -> j'");
      int i = 0, j = 0;
      try {
        i = std::stoi(trimmed(ends.substr(0, sep)));
        j = std::stoi(trimmed(ends.substr(sep + 2)));
      } catch (const std::exception&) {
        fail(origin, line, "arrow endpoints must be integers");
      }
      if (!saw_vertices)
        fail(origin, line, "arrow before the vertices directive");
      if (i < 1 || i > f.quiver.num_vertices || j < 1 ||
          j > f.quiver.num_vertices)
        fail(origin, line, "arrow endpoint out of range");
      f.quiver.arrows.push_back({label, i - 1, j - 1});
    } else if (kw == "relation") {
      std::string rest;
      std::getline(ls, rest);
      pending_relations.emplace_back(line, trimmed(rest));
    } else {
      fail(origin, line, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_vertices) fail(origin, line, "missing vertices directive");
  f.quiver.validate();
  for (const auto& [rline, text] : pending_relations)
    f.relations.push_back(parse_relation(text, f.quiver, origin, rline));
  return f;
}

AlgFile parse_alg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_alg(in, path);
}

AlgebraPtr build_algebra(const AlgFile& f, std::uint32_t p) {
  return Algebra::build(f.quiver, f.relations, f.bound, p ? p : f.prime);
}

}  // namespace argen
