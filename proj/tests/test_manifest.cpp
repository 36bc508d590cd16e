#include <doctest.h>

#include "parsa/manifest.hpp"
#include "parsa/runtime.hpp"
#include "test_helpers.hpp"

using namespace parsa;

TEST_CASE("manifest: lossless JSON round trip") {
  RunManifest m;
  m.input = "data/x.svm";
  m.format = "libsvm";
  m.out_dir = "/tmp/out";
  m.k = 7;
  m.a = 3;
  m.b = 9;
  m.seed = 0xDEADBEEFCAFEF00DULL;
  m.balance_rule = "partition-size";
  m.tau = kUnboundedDelay;
  m.workers = 5;
  m.server_shards = 2;
  m.global_init_fraction = 0.25;
  m.v_sweeps = 4;
  m.improvement_trials = 11;
  m.created_at = "2025-06-01T10:00:00Z";

  const auto text = m.to_json_string();
  const auto back = RunManifest::from_json_string(text);
  CHECK(back.input == m.input);
  CHECK(back.format == m.format);
  CHECK(back.out_dir == m.out_dir);
  CHECK(back.k == m.k);
  CHECK(back.a == m.a);
  CHECK(back.b == m.b);
  CHECK(back.seed == m.seed);
  CHECK(back.balance_rule == m.balance_rule);
  CHECK(back.tau == m.tau);
  CHECK(back.workers == m.workers);
  CHECK(back.server_shards == m.server_shards);
  CHECK(back.global_init_fraction == m.global_init_fraction);
  CHECK(back.v_sweeps == m.v_sweeps);
  CHECK(back.improvement_trials == m.improvement_trials);
  CHECK(back.created_at == m.created_at);
  // Serialize again: stable text.
  CHECK(back.to_json_string() == text);
}

TEST_CASE("manifest: save and load") {
  test_helpers::TempDir dir("manifest");
  RunManifest m;
  m.input = "synth";
  m.format = "synthetic";
  m.out_dir = dir.file("out");
  m.save(dir.file("m.json"));
  const auto back = RunManifest::load(dir.file("m.json"));
  CHECK(back.input == "synth");
  CHECK(back.format == "synthetic");
}
