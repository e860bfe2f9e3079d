#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>

#include "argen/algfile.hpp"
#include "argen/examples.hpp"

using namespace argen;

static const char* kSample =
    "# two vertices, four arrows\n"
    "prime 2\n"
    "vertices 2\n"
    "arrow c: 1 -> 1\n"
    "arrow a: 1 -> 2\n"
    "arrow b: 2 -> 1\n"
    "arrow d: 2 -> 2\n"
    "bound 3\n"
    "relation c*c - a*b\n"
    "relation c*a\n"
    "relation a*d\n"
    "relation b*c\n"
    "relation d*b\n"
    "relation d*d - b*a\n";

TEST_CASE("parse a complete description") {
  std::istringstream in(kSample);
  AlgFile f = parse_alg(in, "sample");
  CHECK(f.prime == 2);
  CHECK(f.bound == 3);
  CHECK(f.quiver.num_vertices == 2);
  CHECK(f.quiver.arrows.size() == 4);
  CHECK(f.quiver.arrow_index("b") == 2);
  CHECK(f.relations.size() == 6);
  CHECK(f.relations[0].terms.size() == 2);
  CHECK(f.relations[0].terms[1].coef == -1);

  auto alg = build_algebra(f);
  CHECK(alg->dim() == 8);
  CHECK(alg->prime() == 2);
  // override the file's prime
  CHECK(build_algebra(f, 5)->prime() == 5);
}

static std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_alg(in, "bad.alg");
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("diagnostics carry origin and line number") {
  std::string msg = error_of("prime 2\nvertices 2\narrow a: 1 -> 7\n");
  CHECK(msg.find("bad.alg") != std::string::npos);
  CHECK(msg.find("3") != std::string::npos);

  CHECK(error_of("prime 6\n") != "");
  CHECK(error_of("vertices 1\nfrobnicate 3\n") != "");
  CHECK(error_of("vertices 1\narrow a: 1 -> 1\nrelation a*z\n") != "");
}

TEST_CASE("non-parallel relation terms are rejected at build time") {
  std::istringstream in(
      "vertices 2\narrow a: 1 -> 2\narrow b: 2 -> 1\nrelation a - b\n");
  AlgFile f = parse_alg(in, "bad.alg");  // shape is fine, semantics are not
  CHECK_THROWS(build_algebra(f));
}

TEST_CASE("bundled files parse and rebuild") {
  AlgFile f = parse_alg_file(fixture_path("example1"));
  CHECK(f.quiver.num_vertices == 2);
  CHECK(build_algebra(f)->dim() == 8);

  AlgFile f3 = parse_alg_file(fixture_path("example3"));
  CHECK(f3.quiver.num_vertices == 5);
  CHECK(f3.quiver.arrows.size() == 10);
  CHECK(f3.relations.size() == 15);
}

TEST_CASE("missing file is reported") {
  CHECK_THROWS(parse_alg_file("/nonexistent/nowhere.alg"));
}
