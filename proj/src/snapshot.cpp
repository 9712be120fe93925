#include "racsim/snapshot.hpp"

#include <algorithm>
#include <unordered_set>

namespace racsim {

namespace {

std::string at_set_way(std::uint32_t set, std::uint32_t way) {
    return "set " + std::to_string(set) + " way " + std::to_string(way);
}

} // namespace

std::uint64_t StateSnapshot::valid_tag_count() const {
    std::uint64_t n = 0;
    for (const auto& set : sets)
        for (const auto& e : set)
            if (e.valid) ++n;
    return n;
}

std::uint64_t StateSnapshot::valid_frame_count() const {
    std::uint64_t n = 0;
    for (const auto& f : frames)
        if (f.valid) ++n;
    return n;
}

std::vector<std::string> check_invariants(const StateSnapshot& s) {
    std::vector<std::string> violations;
    auto bad = [&](std::string msg) { violations.push_back(std::move(msg)); };

    // I2: capacity
    if (s.sets.size() != s.num_sets)
        bad("I2: expected " + std::to_string(s.num_sets) + " sets, found " +
            std::to_string(s.sets.size()));
    for (std::uint32_t si = 0; si < s.sets.size(); ++si) {
        if (s.sets[si].size() != s.tag_ways)
            bad("I2: set " + std::to_string(si) + " holds " + std::to_string(s.sets[si].size()) +
                " ways, expected " + std::to_string(s.tag_ways));
    }
    if (s.frames.size() != s.total_frames)
        bad("I2: expected " + std::to_string(s.total_frames) + " frames, found " +
            std::to_string(s.frames.size()));

    // I1: fwd/back bijection, checked from both sides
    for (std::uint32_t si = 0; si < s.sets.size(); ++si) {
        for (std::uint32_t w = 0; w < s.sets[si].size(); ++w) {
            const auto& e = s.sets[si][w];
            if (!e.valid) continue;
            if (e.fwd >= s.frames.size()) {
                bad("I1: " + at_set_way(si, w) + " fwd link " + std::to_string(e.fwd) +
                    " out of range");
                continue;
            }
            const auto& f = s.frames[e.fwd];
            if (!f.valid)
                bad("I1: " + at_set_way(si, w) + " fwd link names invalid frame " +
                    std::to_string(e.fwd));
            else if (f.back_set != si || f.back_way != w)
                bad("I1: " + at_set_way(si, w) + " fwd link names frame " + std::to_string(e.fwd) +
                    " whose back link points at " + at_set_way(f.back_set, f.back_way));
        }
    }
    for (std::uint32_t fi = 0; fi < s.frames.size(); ++fi) {
        const auto& f = s.frames[fi];
        if (!f.valid) continue;
        if (f.back_set >= s.sets.size() || f.back_way >= s.sets[f.back_set].size()) {
            bad("I1: frame " + std::to_string(fi) + " back link " +
                at_set_way(f.back_set, f.back_way) + " out of range");
            continue;
        }
        const auto& e = s.sets[f.back_set][f.back_way];
        if (!e.valid)
            bad("I1: frame " + std::to_string(fi) + " back link names invalid tag entry at " +
                at_set_way(f.back_set, f.back_way));
        else if (e.fwd != fi)
            bad("I1: frame " + std::to_string(fi) + " back link names " +
                at_set_way(f.back_set, f.back_way) + " whose fwd link is " +
                std::to_string(e.fwd));
    }
    if (s.valid_tag_count() != s.valid_frame_count())
        bad("I1: " + std::to_string(s.valid_tag_count()) + " valid tags vs " +
            std::to_string(s.valid_frame_count()) + " valid frames");

    // I3: recency lists are permutations of exactly the valid ways
    if (s.recency.size() != s.sets.size()) {
        bad("I3: recency table has " + std::to_string(s.recency.size()) + " sets");
    } else {
        for (std::uint32_t si = 0; si < s.sets.size(); ++si) {
            std::unordered_set<std::uint32_t> seen;
            for (std::uint32_t w : s.recency[si]) {
                if (w >= s.sets[si].size()) {
                    bad("I3: set " + std::to_string(si) + " recency names way " +
                        std::to_string(w) + " out of range");
                    continue;
                }
                if (!seen.insert(w).second)
                    bad("I3: set " + std::to_string(si) + " recency repeats way " +
                        std::to_string(w));
                if (!s.sets[si][w].valid)
                    bad("I3: set " + std::to_string(si) + " recency names invalid way " +
                        std::to_string(w));
            }
            for (std::uint32_t w = 0; w < s.sets[si].size(); ++w) {
                if (s.sets[si][w].valid && !seen.count(w))
                    bad("I3: set " + std::to_string(si) + " valid way " + std::to_string(w) +
                        " missing from recency");
            }
        }
    }

    // I4: free list is exactly the invalid frame indices
    {
        std::unordered_set<std::uint32_t> free(s.free_frames.begin(), s.free_frames.end());
        if (free.size() != s.free_frames.size())
            bad("I4: free list repeats a frame index");
        for (std::uint32_t fi = 0; fi < s.frames.size(); ++fi) {
            bool listed = free.count(fi) != 0;
            if (s.frames[fi].valid && listed)
                bad("I4: valid frame " + std::to_string(fi) + " listed as free");
            if (!s.frames[fi].valid && !listed)
                bad("I4: invalid frame " + std::to_string(fi) + " missing from free list");
        }
    }

    // I8: per-set tag uniqueness
    for (std::uint32_t si = 0; si < s.sets.size(); ++si) {
        std::unordered_set<std::uint64_t> tags;
        for (std::uint32_t w = 0; w < s.sets[si].size(); ++w) {
            const auto& e = s.sets[si][w];
            if (e.valid && !tags.insert(e.tag).second)
                bad("I8: set " + std::to_string(si) + " holds tag " + std::to_string(e.tag) +
                    " in two valid ways");
        }
    }

    return violations;
}

} // namespace racsim
