#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "racsim/address.hpp"
#include "racsim/generators.hpp"
#include "racsim/rng.hpp"

using namespace racsim;

namespace {

std::map<std::uint64_t, std::size_t> block_histogram(const TraceStream& stream,
                                                     std::uint32_t block_size) {
  std::map<std::uint64_t, std::size_t> hist;
  for (const auto& a : stream.accesses) ++hist[a.address / block_size];
  return hist;
}

}  // namespace

TEST_CASE("uniform generator matches the rng modulo rule exactly") {
  auto stream = gen_uniform(64, 1000, 5, 64);
  REQUIRE(stream.accesses.size() == 1000);
  SplitMix64 rng(5);
  for (const auto& a : stream.accesses) {
    CHECK(a.kind == AccessKind::load);
    CHECK(a.address == (rng.next() % 64) * 64);
  }
}

TEST_CASE("uniform generator hits all blocks at reasonable length") {
  auto hist = block_histogram(gen_uniform(16, 10000, 1, 64), 64);
  CHECK(hist.size() == 16);
  for (const auto& [block, count] : hist) {
    CHECK(block < 16);
    // 10000/16 = 625 expected; allow a wide deterministic margin.
    CHECK(count > 400);
    CHECK(count < 900);
  }
}

TEST_CASE("zipf s=0 degenerates to the uniform distribution") {
  auto hist = block_histogram(gen_zipf(8, 0.0, 20000, 3, 64), 64);
  CHECK(hist.size() == 8);
  for (const auto& [block, count] : hist) {
    CHECK(count > 2000);
    CHECK(count < 3000);
  }
}

TEST_CASE("zipf s=1 concentrates mass on the lowest block ids") {
  auto hist = block_histogram(gen_zipf(64, 1.0, 50000, 7, 64), 64);
  // Block 0 (rank 1) should dwarf a deep-tail block, roughly by rank ratio.
  CHECK(hist[0] > 8000);
  CHECK(hist[0] > 20 * (hist.count(63) ? hist[63] : 1));
  // And the head must dominate: blocks 0..7 carry more than half the mass
  // (the exact harmonic share of the top 8 of 64 ranks is ~57%).
  std::size_t head = 0;
  for (std::uint64_t b = 0; b < 8; ++b) head += hist.count(b) ? hist[b] : 0;
  CHECK(head > 25000);
}

TEST_CASE("zipf large s is nearly single-block") {
  auto hist = block_histogram(gen_zipf(16, 4.0, 5000, 11, 64), 64);
  CHECK(hist[0] > 4500);
}

TEST_CASE("generators are deterministic per seed and differ across seeds") {
  auto a = gen_uniform(32, 500, 9, 64);
  auto b = gen_uniform(32, 500, 9, 64);
  auto c = gen_uniform(32, 500, 10, 64);
  CHECK(a.accesses == b.accesses);
  CHECK(a.accesses != c.accesses);

  auto za = gen_zipf(32, 0.8, 500, 9, 64);
  auto zb = gen_zipf(32, 0.8, 500, 9, 64);
  CHECK(za.accesses == zb.accesses);
}

TEST_CASE("cyclic generator repeats the block list verbatim") {
  const std::uint64_t blocks[] = {5, 1, 9};
  auto stream = gen_cyclic(blocks, 2, 64);
  REQUIRE(stream.accesses.size() == 6);
  const std::uint64_t want[] = {5, 1, 9, 5, 1, 9};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(stream.accesses[i].kind == AccessKind::load);
    CHECK(stream.accesses[i].address == want[i] * 64);
  }
}

TEST_CASE("single-set generator keeps every access in the chosen set") {
  SimConfig cfg;
  cfg.num_sets = 64;
  cfg.tag_ways = 32;
  cfg.data_ways = 16;
  cfg.block_size_bytes = 64;
  auto stream = gen_single_set(cfg, 7, 20, 10);
  REQUIRE(stream.accesses.size() == 200);
  std::map<std::uint64_t, std::size_t> distinct;
  for (const auto& a : stream.accesses) {
    auto parts = map_address(cfg, a.address);
    CHECK(parts.set_index == 7);
    ++distinct[parts.block_addr];
  }
  CHECK(distinct.size() == 20);
  for (const auto& [block, count] : distinct) CHECK(count == 10);
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(gen_uniform(0, 10, 0, 64), ConfigError);
  CHECK_THROWS_AS(gen_zipf(0, 1.0, 10, 0, 64), ConfigError);
  CHECK_THROWS_AS(gen_zipf(8, -0.5, 10, 0, 64), ConfigError);
  CHECK_THROWS_AS(gen_cyclic({}, 2, 64), ConfigError);
  SimConfig cfg;
  CHECK_THROWS_AS(gen_single_set(cfg, 5000, 4, 1), ConfigError);
  CHECK_THROWS_AS(gen_single_set(cfg, 0, 0, 1), ConfigError);
}

TEST_CASE("empty-length generators return empty traces") {
  CHECK(gen_uniform(8, 0, 0, 64).accesses.empty());
  CHECK(gen_zipf(8, 1.0, 0, 0, 64).accesses.empty());
  const std::uint64_t blocks[] = {1};
  CHECK(gen_cyclic(blocks, 0, 64).accesses.empty());
}
