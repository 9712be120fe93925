#include <doctest.h>

#include <vector>

#include "racsim/frame_pool.hpp"
#include "racsim/rng.hpp"

using racsim::FramePool;

TEST_CASE("frame pool basic bookkeeping") {
    FramePool pool(8);
    CHECK(pool.valid_count() == 0);
    CHECK(pool.free_count() == 8);
    CHECK(pool.lowest_free() == 0);

    pool.mark_valid(0);
    pool.mark_valid(1);
    CHECK(pool.lowest_free() == 2);
    pool.mark_invalid(0);
    CHECK(pool.lowest_free() == 0);
    CHECK(pool.valid_count() == 1);
}

TEST_CASE("nth_valid follows ascending index order") {
    FramePool pool(8);
    for (auto f : {1, 3, 5, 7}) pool.mark_valid(f);
    CHECK(pool.nth_valid(0) == 1);
    CHECK(pool.nth_valid(1) == 3);
    CHECK(pool.nth_valid(2) == 5);
    CHECK(pool.nth_valid(3) == 7);
    CHECK_THROWS(pool.nth_valid(4));
}

TEST_CASE("free_list lists exactly the invalid frames") {
    FramePool pool(5);
    pool.mark_valid(1);
    pool.mark_valid(4);
    CHECK(pool.free_list() == std::vector<std::uint32_t>{0, 2, 3});
}

TEST_CASE("pool agrees with a scan reference under random churn") {
    FramePool pool(37);  // non-power-of-two size
    std::vector<bool> ref(37, false);
    racsim::SplitMix64 rng(99);
    for (int step = 0; step < 5000; ++step) {
        std::uint64_t f = rng.next() % 37;
        if (ref[f]) {
            pool.mark_invalid(f);
            ref[f] = false;
        } else {
            pool.mark_valid(f);
            ref[f] = true;
        }

        std::uint64_t valid = 0;
        for (bool b : ref)
            if (b) ++valid;
        REQUIRE(pool.valid_count() == valid);

        if (valid < ref.size()) {
            std::uint64_t first_free = 0;
            while (ref[first_free]) ++first_free;
            REQUIRE(pool.lowest_free() == first_free);
        }
        if (valid > 0) {
            std::uint64_t r = rng.next() % valid;
            std::uint64_t seen = 0, expect = 0;
            for (std::uint64_t i = 0; i < ref.size(); ++i) {
                if (ref[i] && seen++ == r) {
                    expect = i;
                    break;
                }
            }
            REQUIRE(pool.nth_valid(r) == expect);
        }
    }
}
