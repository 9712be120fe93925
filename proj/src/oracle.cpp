#include "racsim/oracle.hpp"

#include <algorithm>

#include "racsim/address.hpp"

namespace racsim {

ReferenceOracle::ReferenceOracle(Policy policy, const SimConfig& cfg)
    : policy_(policy), cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
    if (is_set_assoc_policy(policy_)) {
        ways_ = cfg_.data_ways;  // baselines run at the rac data capacity
        frame_count_ = static_cast<std::uint64_t>(cfg_.num_sets) * ways_;
    } else {
        ways_ = cfg_.tag_ways;
        frame_count_ = cfg_.total_frames();
    }
    sets_.assign(cfg_.num_sets, std::vector<TagEntry>(ways_));
    frames_.assign(frame_count_, Frame{});
}

std::uint64_t ReferenceOracle::lru_way(std::uint64_t set_index) const {
    std::uint64_t best = ways_;
    std::uint64_t best_stamp = 0;
    for (std::uint64_t w = 0; w < ways_; ++w) {
        const TagEntry& e = sets_[set_index][w];
        if (!e.valid) continue;
        if (best == ways_ || e.last_used < best_stamp) {
            best = w;
            best_stamp = e.last_used;
        }
    }
    if (best == ways_) throw EngineError("oracle: no valid way for LRU");
    return best;
}

std::uint64_t ReferenceOracle::lowest_invalid_way(std::uint64_t set_index) const {
    for (std::uint64_t w = 0; w < ways_; ++w) {
        if (!sets_[set_index][w].valid) return w;
    }
    throw EngineError("oracle: no invalid way");
}

std::uint64_t ReferenceOracle::count_valid_frames() const {
    std::uint64_t n = 0;
    for (const Frame& f : frames_)
        if (f.valid) ++n;
    return n;
}

std::uint64_t ReferenceOracle::nth_valid_frame(std::uint64_t r) const {
    for (std::uint64_t i = 0; i < frames_.size(); ++i) {
        if (frames_[i].valid) {
            if (r == 0) return i;
            --r;
        }
    }
    throw EngineError("oracle: rank out of range");
}

std::uint64_t ReferenceOracle::pick_victim_frame() {
    if (policy_ == Policy::vway) {
        for (;;) {
            Frame& f = frames_[scan_cursor_];
            if (f.valid && f.reuse_count == 0) {
                std::uint64_t victim = scan_cursor_;
                scan_cursor_ = (scan_cursor_ + 1) % frames_.size();
                return victim;
            }
            if (f.valid) --f.reuse_count;
            scan_cursor_ = (scan_cursor_ + 1) % frames_.size();
        }
    }
    std::uint64_t k = count_valid_frames();
    if (k == 0) throw EngineError("oracle: no valid frame");
    return nth_valid_frame(rng_.next() % k);
}

void ReferenceOracle::evict_tag(std::uint64_t set_index, std::uint64_t way, AccessOutcome& out) {
    TagEntry& entry = sets_[set_index][way];
    out.evicted.push_back(
        {entry.tag * cfg_.num_sets + set_index, frames_[entry.fwd].dirty});
    entry.valid = false;
}

void ReferenceOracle::install(std::uint64_t set_index, std::uint64_t way, std::uint64_t tag,
                              std::uint64_t frame, bool is_store) {
    sets_[set_index][way] = TagEntry{true, tag, frame, ++clock_};
    frames_[frame] = Frame{true, set_index, way, is_store, 0};
}

AccessOutcome ReferenceOracle::access(const Access& access) {
    return is_set_assoc_policy(policy_) ? access_set_assoc(access) : access_decoupled(access);
}

AccessOutcome ReferenceOracle::access_decoupled(const Access& access) {
    const AddressParts parts = map_address(cfg_, access.address);
    const bool is_store = access.kind == AccessKind::store;
    auto& set = sets_[parts.set_index];

    for (std::uint64_t w = 0; w < ways_; ++w) {
        TagEntry& e = set[w];
        if (e.valid && e.tag == parts.tag) {
            e.last_used = ++clock_;
            if (is_store) frames_[e.fwd].dirty = true;
            if (policy_ == Policy::vway && frames_[e.fwd].reuse_count < 3)
                ++frames_[e.fwd].reuse_count;
            AccessOutcome out;
            out.hit = true;
            out.frame_used = static_cast<std::uint32_t>(e.fwd);
            return out;
        }
    }

    std::uint64_t valid_in_set = 0;
    for (std::uint64_t w = 0; w < ways_; ++w)
        if (set[w].valid) ++valid_in_set;
    const bool set_has_room = valid_in_set < ways_;
    const bool frames_have_room = count_valid_frames() < frame_count_;

    AccessOutcome out;
    std::uint64_t way;
    std::uint64_t frame;
    if (set_has_room && frames_have_room) {
        out.fill_case = FillCase::c1;
        way = lowest_invalid_way(parts.set_index);
        frame = 0;
        while (frames_[frame].valid) ++frame;
    } else if (!set_has_room && frames_have_room) {
        out.fill_case = FillCase::c2;
        way = lru_way(parts.set_index);
        frame = set[way].fwd;
        evict_tag(parts.set_index, way, out);
    } else if (set_has_room && !frames_have_room) {
        out.fill_case = FillCase::c3;
        frame = pick_victim_frame();
        evict_tag(frames_[frame].back_set, frames_[frame].back_way, out);
        way = lowest_invalid_way(parts.set_index);
    } else {
        out.fill_case = FillCase::c4;
        way = lru_way(parts.set_index);
        if (cfg_.case4_mode == Case4Mode::reuse) {
            frame = set[way].fwd;
            evict_tag(parts.set_index, way, out);
        } else {
            std::uint64_t freed = set[way].fwd;
            evict_tag(parts.set_index, way, out);
            frames_[freed] = Frame{};
            if (count_valid_frames() == 0) {
                frame = freed;
            } else {
                frame = pick_victim_frame();
                evict_tag(frames_[frame].back_set, frames_[frame].back_way, out);
            }
        }
    }
    install(parts.set_index, way, parts.tag, frame, is_store);
    out.frame_used = static_cast<std::uint32_t>(frame);
    return out;
}

AccessOutcome ReferenceOracle::access_set_assoc(const Access& access) {
    const AddressParts parts = map_address(cfg_.num_sets, cfg_.block_size_bytes, access.address);
    const bool is_store = access.kind == AccessKind::store;
    auto& set = sets_[parts.set_index];
    auto slot = [&](std::uint64_t way) { return parts.set_index * ways_ + way; };

    for (std::uint64_t w = 0; w < ways_; ++w) {
        TagEntry& e = set[w];
        if (e.valid && e.tag == parts.tag) {
            e.last_used = ++clock_;
            if (is_store) frames_[e.fwd].dirty = true;
            AccessOutcome out;
            out.hit = true;
            out.frame_used = static_cast<std::uint32_t>(e.fwd);
            return out;
        }
    }

    std::uint64_t valid_in_set = 0;
    for (std::uint64_t w = 0; w < ways_; ++w)
        if (set[w].valid) ++valid_in_set;

    AccessOutcome out;
    std::uint64_t way;
    if (valid_in_set < ways_) {
        out.fill_case = FillCase::c1;
        way = lowest_invalid_way(parts.set_index);
    } else {
        out.fill_case = FillCase::c2;
        way = policy_ == Policy::lru ? lru_way(parts.set_index) : rng_.next() % ways_;
        evict_tag(parts.set_index, way, out);
    }
    install(parts.set_index, way, parts.tag, slot(way), is_store);
    out.frame_used = static_cast<std::uint32_t>(slot(way));
    return out;
}

StateSnapshot ReferenceOracle::snapshot() const {
    StateSnapshot s;
    s.num_sets = cfg_.num_sets;
    s.tag_ways = ways_;
    s.total_frames = frame_count_;
    s.sets.resize(sets_.size());
    s.recency.resize(sets_.size());
    for (std::uint64_t si = 0; si < sets_.size(); ++si) {
        s.sets[si].reserve(ways_);
        std::vector<std::pair<std::uint64_t, std::uint32_t>> order;  // (stamp, way)
        for (std::uint64_t w = 0; w < ways_; ++w) {
            const TagEntry& e = sets_[si][w];
            s.sets[si].push_back({e.valid, e.tag, static_cast<std::uint32_t>(e.fwd)});
            if (e.valid) order.emplace_back(e.last_used, static_cast<std::uint32_t>(w));
        }
        std::sort(order.rbegin(), order.rend());
        for (const auto& [stamp, w] : order) s.recency[si].push_back(w);
    }
    s.frames.reserve(frames_.size());
    for (std::uint64_t fi = 0; fi < frames_.size(); ++fi) {
        const Frame& f = frames_[fi];
        s.frames.push_back({f.valid, static_cast<std::uint32_t>(f.back_set),
                            static_cast<std::uint32_t>(f.back_way), f.dirty, f.reuse_count});
        if (!f.valid) s.free_frames.push_back(static_cast<std::uint32_t>(fi));
    }
    return s;
}

std::vector<AccessOutcome> oracle_replay(Policy policy, const SimConfig& cfg,
                                         std::span<const Access> trace) {
    ReferenceOracle oracle(policy, cfg);
    std::vector<AccessOutcome> outcomes;
    outcomes.reserve(trace.size());
    for (const Access& a : trace) outcomes.push_back(oracle.access(a));
    return outcomes;
}

} // namespace racsim
