#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cisupport/cli/cache.hpp"
#include "cisupport/cli/run.hpp"
#include "cisupport/cli/suite.hpp"

using namespace cisupport;

namespace {

const char* kMinimal = R"(# codimension three, residue field
field
  p = 5
ring
  vars = x, y, z
  relations = x^2, y^2, z^2
module k
  residue
command
  betti --length 5
)";

const char* kCyclic = R"(field
  p = 3
ring
  vars = x, y
  relations = x^2, y^2
module M
  generators = 0
  column = x
)";

JobSpec with_command(const char* text, const std::string& line) {
  JobSpec j = parse_input(text);
  j.command = parse_command(tokenize_command(line));
  return parse_input(render(j));
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("cisupport-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

struct StoreGuard {
  explicit StoreGuard(std::shared_ptr<ResolutionStore> s) { set_resolution_store(std::move(s)); }
  ~StoreGuard() { set_resolution_store(nullptr); }
};

void expect_error(const std::string& text, int line, int column, const std::string& fragment) {
  try {
    parse_input(text);
    FAIL("accepted: " << text);
  } catch (const JobParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK_MESSAGE(e.message().find(fragment) != std::string::npos, e.message());
  }
}

}  // namespace

TEST_CASE("minimal job file") {
  JobSpec j = parse_input(kMinimal);
  CHECK(j.p == 5);
  CHECK(j.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(j.relations == std::vector<std::string>{"x^2", "y^2", "z^2"});
  REQUIRE(j.modules.size() == 1);
  CHECK(j.modules[0].name == "k");
  CHECK(j.modules[0].residue);
  REQUIRE(j.command);
  CHECK(j.command->name == "betti");
  CHECK(j.command->length == 5);
}

TEST_CASE("render and parse are inverse") {
  for (const char* text : {kMinimal, kCyclic}) {
    JobSpec j = parse_input(text);
    const std::string canon = render(j);
    CHECK(parse_input(canon) == j);
    CHECK(render(parse_input(canon)) == canon);
  }
  // Non-canonical spelling collapses to the canonical form.
  JobSpec a = parse_input("field\np=7\nring\nvars=a,b\nweights=1,1\nrelations=b^2+a^2 ,a*b\nmodule N\ngenerators=0,0\ncolumn=b,-1*a+0\n"
                          "command\nrealize --cone \"chi2 + 2*chi1;chi1^2\" --seed 9\n");
  CHECK(a.weights.empty());
  CHECK(a.relations == std::vector<std::string>{"a^2 + b^2", "a*b"});
  CHECK(a.modules[0].columns[0] == std::vector<std::string>{"b", "-a"});
  CHECK(*a.command->cone == std::vector<std::string>{"2*chi1 + chi2", "chi1^2"});
  CHECK(parse_input(render(a)) == a);

  CommandSpec c = parse_command(tokenize_command("restrict --subspace 2x3:1,0,0,0,1,1 --point 1,2,0 --window 12 --allow-unstable"));
  CHECK(parse_command(tokenize_command(render_command(c))) == c);
}

TEST_CASE("diagnostics carry line and column") {
  expect_error("field\n  p = 5\nring\n  vars = x, y\n  relations = x, x*y\n", 5, 15, "not a regular sequence");
  expect_error("field\n  p = 5\nring\n  vars = x, y\n  relations = x^2, y^\n", 5, 22, "");
  expect_error("field\n  p = 6\n", 2, 7, "prime");
  expect_error("field\n  p = 5\nring\n  vars = x, x\n", 4, 13, "duplicate variable");
  expect_error("p = 5\n", 1, 1, "section header");
  expect_error("field\n  p = 5\nring\n  vars = x\n  relations = x^2\nmodule M\n  generators = 0, 0\n  column = x, x^2\n", 8, 15,
               "non-homogeneous");
  expect_error("field\n  p = 5\nring\n  vars = x\n  relations = x^2\nmodule M\n  generators = 0\n  column = x + x^2\n", 8, 12,
               "non-homogeneous");
  expect_error("field\n  p = 5\nring\n  vars = x\n  relations = x^2\ncommand\n  explode\n", 7, 3, "unknown command");
  expect_error("field\n  p = 5\nring\n  vars = x\n  relations = x^2\nmodule M\ncommand\n  betti --module N\n", 8, 3, "unknown module");
}

TEST_CASE("empty module section is the zero module") {
  JobSpec j = parse_input("field\n  p = 5\nring\n  vars = x\n  relations = x^2\nmodule Z\n");
  JobContext ctx = materialize(j);
  CHECK(ctx.module("Z").num_generators() == 0);
  CHECK(ctx.module("Z").is_zero());
}

TEST_CASE("reports for the documented commands") {
  RunReport b = run(parse_input(kMinimal));
  CHECK(b.exit_code == kExitOk);
  CHECK(b.json["result"]["ranks"] == nlohmann::ordered_json({1, 3, 6, 10, 15, 21}));

  RunReport v = run(with_command(kCyclic, "variety"));
  CHECK(v.json["result"]["ideal"] == nlohmann::ordered_json({"chi2"}));
  CHECK(v.json["result"]["stabilized"] == true);

  RunReport m = run(with_command(kCyclic, "member --point 0,1"));
  CHECK(m.json["result"]["member"] == false);
  RunReport m2 = run(with_command(kCyclic, "member --point 1,0"));
  CHECK(m2.json["result"]["member"] == true);

  RunReport r = run(with_command(kMinimal, "restrict --subspace 1x3:1,1,1"));
  CHECK(r.json["result"]["agree"] == true);
}

TEST_CASE("unstabilized varieties use their own exit code") {
  RunReport r = run(with_command(kMinimal, "realize --cone \"chi1^2*chi2 - chi3^3\" --window 6"));
  CHECK(r.exit_code == kExitUnstable);
  CHECK_FALSE(r.warnings.empty());
  RunReport ok = run(with_command(kMinimal, "realize --cone \"chi1^2*chi2 - chi3^3\" --window 6 --allow-unstable"));
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.json.dump() == r.json.dump());
}

TEST_CASE("identical jobs give identical bytes") {
  JobSpec j = with_command(kMinimal, "resolve --length 4");
  CHECK(run(j).json.dump(2) == run(j).json.dump(2));
}

TEST_CASE("sha256 test vector") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("resolution payload round trip") {
  JobContext ctx = materialize(parse_input(kCyclic));
  FreeResolution F = minimal_resolution(ctx.module("M"), 4);
  FreeResolution G = deserialize_resolution(serialize_resolution(F), F.ring);
  CHECK(G.d == F.d);
  CHECK(G.f0_degrees == F.f0_degrees);
  CHECK(G.length == F.length);
  CHECK(G.finite == F.finite);
  CHECK(serialize_resolution(G) == serialize_resolution(F));
}

TEST_CASE("cache hits, corruption and keys") {
  TempDir dir;
  auto cache = std::make_shared<FileCache>(dir.path);
  StoreGuard guard(cache);
  JobContext ctx = materialize(parse_input(kMinimal));
  const GradedModule& k = ctx.module("k");

  FreeResolution cold = minimal_resolution(k, 5);
  CHECK(cache->misses() == 1);
  CHECK(std::filesystem::exists(cache->path_for(resolution_key(k, 5))));
  FreeResolution warm = minimal_resolution(k, 5);
  CHECK(cache->hits() == 1);
  CHECK(warm.d == cold.d);

  // Another length is another key.
  CHECK(cache->path_for(resolution_key(k, 4)) != cache->path_for(resolution_key(k, 5)));
  minimal_resolution(k, 4);
  CHECK(cache->misses() == 2);

  // Truncate the entry: detected, recomputed and rewritten.
  const auto path = cache->path_for(resolution_key(k, 5));
  std::string text;
  {
    std::ifstream in(path, std::ios::binary);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text.substr(0, text.size() / 2);
  }
  FreeResolution again = minimal_resolution(k, 5);
  CHECK(cache->corrupt() == 1);
  CHECK(again.d == cold.d);
  FreeResolution fixed = minimal_resolution(k, 5);
  CHECK(cache->corrupt() == 1);
  CHECK(fixed.d == cold.d);

  // Payload edited without fixing the hash.
  {
    std::ifstream in(path, std::ios::binary);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  text[text.size() - 8] = text[text.size() - 8] == '1' ? '2' : '1';
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
  }
  CHECK(minimal_resolution(k, 5).d == cold.d);
  CHECK(cache->corrupt() == 2);
}

TEST_CASE("suite properties on the smallest catalog ring") {
  CatalogContext ctx = make_context(ring_a2(3));
  CHECK(oracle_agreement(ctx).passed());
  CHECK(pair_is_intersection(ctx, 3).passed());
  CHECK(syzygy_invariance(ctx, 2).passed());
  CHECK(operator_identities(ctx).passed());
  CHECK(tensor_over_base_instance(3).passed());
}
