#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "oscform/cli.hpp"
#include "oscform/errors.hpp"
#include "oscform/variety_file.hpp"

using namespace oscform;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string example(const std::string& name) {
  const auto text = gallery_text(name);
  REQUIRE(text.has_value());
  return *text;
}

nlohmann::json json_report(const std::string& name, std::vector<std::string> args) {
  args.push_back("-");
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args, example(name));
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return nlohmann::json::parse(r.out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Golden {
  std::string name;
  std::string example;
  std::vector<std::string> args;
};

const std::vector<Golden> kGoldens{
    {"togliatti-osc", "togliatti", {"osc", "--order", "3", "--max"}},
    {"togliatti-fundform", "togliatti", {"fundform", "--order", "2"}},
    {"togliatti-jacobian", "togliatti", {"jacobian-check", "--order", "3"}},
    {"togliatti-tangent-cone", "togliatti", {"tangent-cone", "--at", "1,1", "--hyperplane", "-1,1,1,-1,-1,1"}},
    {"togliatti-implicit-jet", "togliatti-implicit", {"implicit-jet", "--order", "4"}},
    {"shifrin-base-locus", "shifrin", {"base-locus"}},
    {"shifrin-phibar", "shifrin", {"phibar-check", "--order", "3"}},
    {"shifrin-heat", "shifrin", {"heat-check"}},
    {"shifrin-implicit-osc", "shifrin-implicit", {"osc", "--order", "2"}},
    {"dye-base-locus", "dye", {"base-locus", "--order", "2"}},
    {"veronese-osc", "veronese", {"osc", "--order", "3", "--max"}},
    {"twisted-cubic-osc", "twisted-cubic", {"osc", "--order", "3", "--max"}},
    {"quadric-ruled-test", "quadric", {"ruled-test"}},
    {"quadric-implicit-monge", "quadric-implicit", {"monge"}},
    {"graph-surface-ruled-test", "graph-surface", {"ruled-test"}},
    {"graph-surface-monge", "graph-surface", {"monge"}},
    {"ruled-threefold-ruling", "ruled-threefold", {"ruling-check", "--order", "2"}},
    {"scroll-2-2", "scroll-2-2", {"scroll"}},
    {"scroll-3-3", "scroll-3-3", {"scroll"}},
    {"scroll-3-3-3", "scroll-3-3-3", {"scroll"}},
    {"scroll-2-4", "scroll-2-4", {"scroll"}},
};

}  // namespace

TEST_CASE("golden reports") {
  const bool update = std::getenv("OSCFORM_UPDATE_GOLDEN") != nullptr;
  for (const Golden& g : kGoldens) {
    CAPTURE(g.name);
    std::vector<std::string> args = g.args;
    args.insert(args.begin() + 1, "-");
    const Run r = run(args, example(g.example));
    REQUIRE_MESSAGE(r.code == 0, r.err);
    const std::string path = std::string(OSCFORM_GOLDEN_DIR) + "/" + g.name + ".txt";
    if (update) {
      std::ofstream(path) << r.out;
      continue;
    }
    CHECK(r.out == read_file(path));
  }
}

TEST_CASE("every shipped example has a golden report") {
  for (const std::string& name : gallery_names()) {
    bool found = false;
    for (const Golden& g : kGoldens) found = found || g.example == name;
    CHECK_MESSAGE(found, name);
  }
}

TEST_CASE("reports carry the published values") {
  SUBCASE("Togliatti profile") {
    const auto j = json_report("togliatti", {"osc", "--order", "3", "--max"});
    CHECK(j["schema"] == 1);
    CHECK(j["mode"] == "generic-sampled");
    CHECK(j["results"]["dims"] == nlohmann::json::array({0, 2, 4, 5}));
    CHECK(j["sampled_points"].size() >= 2);
  }
  SUBCASE("Togliatti second fundamental form") {
    const auto j = json_report("togliatti", {"fundform", "--order", "2"});
    CHECK(j["results"]["size"] == 2);
    CHECK(j["results"]["dimension_law"] == true);
  }
  SUBCASE("Shifrin base point through stdin") {
    const Run shifrin = run({"example", "shifrin"});
    REQUIRE(shifrin.code == 0);
    const Run r = run({"base-locus", "--order", "2", "-", "--format", "json"}, shifrin.out);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["results"]["has_base_point"] == true);
    CHECK(j["results"]["base_points"] == nlohmann::json::array({"(0:1)"}));
  }
  SUBCASE("Dye pencils have no base point") {
    const auto j = json_report("dye", {"base-locus"});
    CHECK(j["results"]["has_base_point"] == false);
    CHECK(j["results"]["form"]["size"] == 2);
  }
  SUBCASE("scroll ranks") {
    const auto j = json_report("scroll-3-3-3", {"scroll"});
    for (const auto& row : j["results"]["ranks"]) {
      CHECK(row["match"] == true);
      CHECK(row["pushdown_match"] == true);
    }
  }
}

TEST_CASE("reports are reproducible for a fixed seed") {
  const std::vector<std::string> args{"ruled-test", "-", "--seed", "5", "--points", "3"};
  const std::string text = example("graph-surface");
  const Run a = run(args, text);
  const Run b = run(args, text);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Run jobs = run({"ruled-test", "-", "--seed", "5", "--points", "3", "--jobs", "3"}, text);
  CHECK(jobs.out == a.out);
  const Run other = run({"ruled-test", "-", "--seed", "6", "--points", "3"}, text);
  CHECK(other.out != a.out);
}

TEST_CASE("exit codes") {
  CHECK(run({"osc", "-", "--order", "2"}, "kind: parameterization\nparams: x y\ncoords: 1, x^-1, y\n").code == 2);
  CHECK(run({"osc", "-", "--order", "2"}, "kind: implicit\nequations: X0*X1\n").code == 2);
  CHECK(run({"osc", "-"}, example("togliatti")).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"osc", "-", "--order", "2", "--at", "1,x"}, example("togliatti")).code == 2);
  const Run domain = run({"osc", "-", "--order", "1", "--at", "1,1"},
                         "kind: parameterization\nparams: x y\ncoords: 1, x, y, 1/(x - y)\n");
  CHECK(domain.code == 1);
  CHECK(domain.err.find("denominator") != std::string::npos);
  CHECK(run({"jacobian-check", "-", "--order", "2"}, example("togliatti")).code == 1);
  CHECK(run({"example", "no-such-example"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("warnings") {
  const auto j = json_report("graph-surface", {"osc", "--order", "1", "--at", "0,0"});
  CHECK(j["warnings"].empty());
  const Run cusp = run({"osc", "-", "--order", "1", "--at", "0,0", "--format", "json"},
                       "kind: parameterization\nparams: x y\ncoords: 1, x^2, y, x^3\n");
  REQUIRE(cusp.code == 0);
  CHECK(nlohmann::json::parse(cusp.out)["warnings"].size() == 1);
  const auto line = json_report("scroll-2-2", {"scroll", "--degrees", "3"});
  CHECK(line["warnings"].size() == 1);
}

TEST_CASE("variety files") {
  SUBCASE("round trip on the gallery") {
    for (const std::string& name : gallery_names()) {
      CAPTURE(name);
      const VarietyFile v = parse_variety(example(name));
      CHECK(parse_variety(print_variety(v)) == v);
      CHECK(read_file(std::string(OSCFORM_GALLERY_DIR) + "/" + name + ".var") == example(name));
    }
  }
  SUBCASE("Togliatti") {
    const VarietyFile v = parse_variety(example("togliatti"));
    CHECK(v.params.size() == 2);
    CHECK(v.coords.size() == 6);
    CHECK(v.parameterization().ambient_dim() == 5);
  }
  SUBCASE("generated scrolls") {
    const VarietyFile v = parse_variety(example("scroll-1-2-5"));
    CHECK(v.kind == VarietyKind::kScroll);
    CHECK(v.degrees == std::vector<unsigned>{1, 2, 5});
    CHECK_FALSE(gallery_text("scroll-0-2").has_value());
    CHECK_FALSE(gallery_text("scroll-").has_value());
  }
  SUBCASE("errors carry positions") {
    try {
      parse_variety("kind: parameterization\nparams: x y\ncoords: 1, x^-1, y\n");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_variety("kind: implicit\nvars: X0 X1\nequations: X0*X1\n"), ConsistencyError);
    CHECK_THROWS_AS(parse_variety("kind: parameterization\nparams: x y\ncoords: 1, x\n"), ConsistencyError);
    CHECK_THROWS_AS(parse_variety("kind: parameterization\nparams: x\nparams: y\ncoords: 1, x\n"), ParseError);
    CHECK_THROWS_AS(parse_variety("kind: cone\n"), ParseError);
    CHECK_THROWS_AS(parse_variety("colour: blue\n"), ParseError);
    CHECK_THROWS_AS(parse_variety("kind: scroll\ndegrees: 2, , 3\n"), ParseError);
    CHECK_THROWS_AS(parse_variety("kind: implicit\nvars: X0 X1 X2\nequations: X1^2 - X0\npoint: 1, 1, 0\n"),
                    ConsistencyError);
  }
}
