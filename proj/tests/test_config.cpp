#include <doctest.h>

#include <string>

#include "platemps/config.hpp"

using namespace platemps;

namespace {

const char* kMinimal =
    "domain.kind = circle\n"
    "scan.k_min = 2.0\n"
    "scan.k_max = 3.0\n";

}  // namespace

TEST_CASE("minimal config picks up defaults") {
  const RunConfig c = parse_config_text(kMinimal);
  CHECK(c.domain_kind == "circle");
  CHECK(c.radius == 1.0);
  CHECK(c.material.nu == 0.33);
  CHECK(c.bc.default_tag == BcTag::Clamped);
  CHECK(c.basis_kind == BasisKind::PlaneWave);
  CHECK(c.boundary_n == 2048);
  CHECK(c.interior_n == 1024);
  CHECK(c.seed == 1);
  CHECK(c.step == 0.01);
  CHECK(c.branches == 4);
  CHECK(c.dip_ratio == 0.1);
  CHECK(c.reg_eps == 1e-12);
  CHECK(c.raster == 64);
}

TEST_CASE("comments, blank lines and arcs parse") {
  const RunConfig c = parse_config_text(
      "# a plate\n"
      "\n"
      "domain.kind = paper-shape2\n"
      "bc.all = free\n"
      "bc.arc.0 = 0 : 3.141592653589793 : clamped\n"
      "bc.arc.1 = 4.0 : 4.5 : simply-supported\n"
      "scan.k_min = 2.0\n"
      "scan.k_max = 5.0\n"
      "basis.kind = fb\n"
      "basis.precondition = true\n");
  CHECK(c.domain_kind == "paper-shape2");
  CHECK(c.basis_kind == BasisKind::FourierBessel);
  CHECK(c.precondition);
  REQUIRE(c.bc.arcs.size() == 2);
  CHECK(c.bc.tag_at(1.0) == BcTag::Clamped);
  CHECK(c.bc.tag_at(4.2) == BcTag::SimplySupported);
  CHECK(c.bc.tag_at(5.5) == BcTag::Free);
}

TEST_CASE("validation errors carry the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_config_text(text, "test.cfg");
    } catch (const ConfigError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("domain.kind = circle\nscan.k_min = x\nscan.k_max = 3\n") == 2);
  CHECK(line_of("scan.k_min = 2\nscan.k_max = 1\n") == 2);
  CHECK(line_of("scan.k_min = 2\nscan.k_max = 3\nnot a key value line\n") == 3);
  CHECK(line_of("scan.k_min = 2\nscan.k_max = 3\nbogus.key = 1\n") == 3);
  CHECK(line_of("scan.k_min = 2\nscan.k_min = 2\nscan.k_max = 3\n") == 2);
  CHECK(line_of("scan.k_min = 2\nscan.k_max = 3\nmaterial.nu = 0.7\n") > 0);
  CHECK(line_of("scan.k_min = 2\nscan.k_max = 3\nbc.arc.0 = 1 : 0.5 : free\n") == 3);
  // placeholder for boundary-weighted sampling: only the uniform law exists
  CHECK(line_of("scan.k_min = 2\nscan.k_max = 3\nsampling.interior_density = edge\n") == 3);
  CHECK_THROWS_AS(parse_config_text("domain.kind = circle\n"), ConfigError);  // k range required
}

TEST_CASE("error message format is file:line: message") {
  try {
    parse_config_text("scan.k_min = 2\nscan.k_max = oops\n", "plate.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("plate.cfg:2: ", 0) == 0);
  }
}

TEST_CASE("serialize and reparse reproduce the config") {
  const RunConfig a = parse_config_text(
      "domain.kind = trig\n"
      "domain.x_cos = 1 0.05\n"
      "domain.y_sin = 1 0.3333333333333333\n"
      "material.T = 0.25\n"
      "material.nu = 0.3\n"
      "bc.all = simply-supported\n"
      "basis.count_per_k = 9.5\n"
      "sampling.seed = 42\n"
      "scan.k_min = 2.5\n"
      "scan.k_max = 7.5\n"
      "scan.step = 0.02\n"
      "scan.dip_ratio = 0.6\n"
      "output.dir = elsewhere\n"
      "output.raster = 32\n");
  const RunConfig b = parse_config_text(serialize_config(a));
  CHECK(serialize_config(b) == serialize_config(a));
  CHECK(b.x_cos == a.x_cos);
  CHECK(b.material.T == a.material.T);
  CHECK(b.seed == 42);
  CHECK(b.dip_ratio == 0.6);
  CHECK(b.out_dir == "elsewhere");
}
