#include "racsim/rac_engine.hpp"

#include <algorithm>

#include "racsim/address.hpp"

namespace racsim {

RacEngine::RacEngine(const SimConfig& cfg, GlobalVictim victim)
    : cfg_(cfg), victim_(victim), pool_(cfg.total_frames()), rng_(cfg.seed) {
    cfg_.validate();
    sets_.resize(cfg_.num_sets);
    for (auto& set : sets_) {
        set.entries.resize(cfg_.tag_ways);
        set.recency.reserve(cfg_.tag_ways);
    }
    frames_.resize(pool_.size());
}

std::uint32_t RacEngine::lowest_invalid_way(const TagSet& set) const {
    for (std::uint32_t w = 0; w < set.entries.size(); ++w) {
        if (!set.entries[w].valid) return w;
    }
    throw EngineError("no invalid way in set");
}

std::uint32_t RacEngine::select_random_victim() {
    std::uint64_t k = pool_.valid_count();
    if (k == 0) throw EngineError("select_random_victim: no valid frame");
    std::uint64_t r = rng_.next() % k;
    return static_cast<std::uint32_t>(pool_.nth_valid(r));
}

std::uint32_t RacEngine::select_reuse_victim() {
    if (pool_.valid_count() == 0) throw EngineError("select_reuse_victim: no valid frame");
    // Clock scan: skip invalid frames, decrement nonzero counters, take the
    // first zero. Counters saturate at 3, so this visits at most four
    // circuits before a counter reaches zero.
    const std::uint64_t n = frames_.size();
    for (;;) {
        Frame& f = frames_[scan_cursor_];
        if (f.valid && f.reuse_count == 0) {
            auto victim = static_cast<std::uint32_t>(scan_cursor_);
            scan_cursor_ = (scan_cursor_ + 1) % n;
            return victim;
        }
        if (f.valid) --f.reuse_count;
        scan_cursor_ = (scan_cursor_ + 1) % n;
    }
}

std::uint32_t RacEngine::select_victim_frame() {
    return victim_ == GlobalVictim::random_frame ? select_random_victim() : select_reuse_victim();
}

void RacEngine::touch_mru(TagSet& set, std::uint32_t way) {
    auto it = std::find(set.recency.begin(), set.recency.end(), way);
    if (it != set.recency.end()) set.recency.erase(it);
    set.recency.insert(set.recency.begin(), way);
}

void RacEngine::remove_from_recency(TagSet& set, std::uint32_t way) {
    auto it = std::find(set.recency.begin(), set.recency.end(), way);
    if (it != set.recency.end()) set.recency.erase(it);
}

void RacEngine::evict_tag(std::uint32_t set_index, std::uint32_t way, AccessOutcome& out) {
    TagSet& set = sets_[set_index];
    TagEntry& entry = set.entries[way];
    std::uint64_t block = entry.tag * cfg_.num_sets + set_index;
    out.evicted.push_back({block, frames_[entry.fwd].dirty});
    entry.valid = false;
    remove_from_recency(set, way);
    --valid_tags_;
}

void RacEngine::install(std::uint32_t set_index, std::uint32_t way, std::uint64_t tag,
                        std::uint32_t frame, bool is_store) {
    TagSet& set = sets_[set_index];
    set.entries[way] = TagEntry{true, tag, frame};
    frames_[frame].back_set = set_index;
    frames_[frame].back_way = way;
    frames_[frame].dirty = is_store;
    frames_[frame].reuse_count = 0;
    set.recency.insert(set.recency.begin(), way);
    ++valid_tags_;
}

AccessOutcome RacEngine::access(const Access& access) {
    const AddressParts parts = map_address(cfg_, access.address);
    TagSet& set = sets_[parts.set_index];
    const bool is_store = access.kind == AccessKind::store;

    for (std::uint32_t w = 0; w < set.entries.size(); ++w) {
        TagEntry& entry = set.entries[w];
        if (entry.valid && entry.tag == parts.tag) {
            touch_mru(set, w);
            if (is_store) frames_[entry.fwd].dirty = true;
            if (victim_ == GlobalVictim::reuse_scan && frames_[entry.fwd].reuse_count < 3)
                ++frames_[entry.fwd].reuse_count;
            AccessOutcome out;
            out.hit = true;
            out.frame_used = entry.fwd;
            return out;
        }
    }

    // Miss. The fill case is decided by table state before any mutation.
    const bool set_has_room = set.recency.size() < cfg_.tag_ways;
    const bool frames_have_room = pool_.free_count() > 0;

    AccessOutcome out;
    if (set_has_room && frames_have_room) {
        out.fill_case = FillCase::c1;
        std::uint32_t way = lowest_invalid_way(set);
        auto frame = static_cast<std::uint32_t>(pool_.lowest_free());
        pool_.mark_valid(frame);
        frames_[frame].valid = true;
        install(parts.set_index, way, parts.tag, frame, is_store);
        out.frame_used = frame;
    } else if (!set_has_room && frames_have_room) {
        out.fill_case = FillCase::c2;
        std::uint32_t way = set.recency.back();
        std::uint32_t frame = set.entries[way].fwd;
        evict_tag(parts.set_index, way, out);
        install(parts.set_index, way, parts.tag, frame, is_store);
        out.frame_used = frame;
    } else if (set_has_room && !frames_have_room) {
        out.fill_case = FillCase::c3;
        std::uint32_t frame = select_victim_frame();
        evict_tag(frames_[frame].back_set, frames_[frame].back_way, out);
        // Recompute after the invalidation: the victim's owner may live in
        // this very set and free a lower way.
        std::uint32_t way = lowest_invalid_way(set);
        install(parts.set_index, way, parts.tag, frame, is_store);
        out.frame_used = frame;
    } else {
        out.fill_case = FillCase::c4;
        std::uint32_t lru_way = set.recency.back();
        if (cfg_.case4_mode == Case4Mode::reuse) {
            std::uint32_t frame = set.entries[lru_way].fwd;
            evict_tag(parts.set_index, lru_way, out);
            install(parts.set_index, lru_way, parts.tag, frame, is_store);
            out.frame_used = frame;
        } else {
            std::uint32_t freed = set.entries[lru_way].fwd;
            evict_tag(parts.set_index, lru_way, out);
            frames_[freed].valid = false;
            frames_[freed].dirty = false;
            pool_.mark_invalid(freed);
            std::uint32_t frame;
            if (pool_.valid_count() == 0) {
                // Single-frame store: nothing left to draw from, so take the
                // frame just freed and degrade to one eviction.
                frame = freed;
                pool_.mark_valid(frame);
                frames_[frame].valid = true;
            } else {
                frame = select_victim_frame();
                evict_tag(frames_[frame].back_set, frames_[frame].back_way, out);
            }
            install(parts.set_index, lru_way, parts.tag, frame, is_store);
            out.frame_used = frame;
        }
    }
    return out;
}

StateSnapshot RacEngine::snapshot() const {
    StateSnapshot s;
    s.num_sets = cfg_.num_sets;
    s.tag_ways = cfg_.tag_ways;
    s.total_frames = pool_.size();
    s.sets.resize(sets_.size());
    s.recency.resize(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        s.sets[i].reserve(cfg_.tag_ways);
        for (const auto& e : sets_[i].entries)
            s.sets[i].push_back({e.valid, e.tag, e.fwd});
        s.recency[i] = sets_[i].recency;
    }
    s.frames.reserve(frames_.size());
    for (const auto& f : frames_)
        s.frames.push_back({f.valid, f.back_set, f.back_way, f.dirty, f.reuse_count});
    s.free_frames = pool_.free_list();
    return s;
}

} // namespace racsim
