#include "racsim/set_assoc_engine.hpp"

#include <algorithm>

#include "racsim/address.hpp"

namespace racsim {

SetAssocEngine::SetAssocEngine(const BaselineConfig& cfg, ReplacePolicy policy)
    : cfg_(cfg), policy_(policy), rng_(cfg.seed) {
    cfg_.validate();
    sets_.resize(cfg_.num_sets);
    for (auto& set : sets_) {
        set.lines.resize(cfg_.ways);
        set.recency.reserve(cfg_.ways);
    }
}

void SetAssocEngine::touch_mru(Set& set, std::uint32_t way) {
    auto it = std::find(set.recency.begin(), set.recency.end(), way);
    if (it != set.recency.end()) set.recency.erase(it);
    set.recency.insert(set.recency.begin(), way);
}

AccessOutcome SetAssocEngine::access(const Access& access) {
    const AddressParts parts = map_address(cfg_, access.address);
    Set& set = sets_[parts.set_index];
    const bool is_store = access.kind == AccessKind::store;
    auto slot_id = [&](std::uint32_t way) {
        return static_cast<std::uint32_t>(parts.set_index * cfg_.ways + way);
    };

    for (std::uint32_t w = 0; w < set.lines.size(); ++w) {
        Line& line = set.lines[w];
        if (line.valid && line.tag == parts.tag) {
            touch_mru(set, w);
            if (is_store) line.dirty = true;
            AccessOutcome out;
            out.hit = true;
            out.frame_used = slot_id(w);
            return out;
        }
    }

    AccessOutcome out;
    const bool set_full = set.recency.size() == cfg_.ways;
    std::uint32_t way;
    if (!set_full) {
        out.fill_case = FillCase::c1;
        way = 0;
        while (set.lines[way].valid) ++way;
    } else {
        out.fill_case = FillCase::c2;
        // One RNG draw per eviction, none otherwise, so seeds stay aligned
        // across reruns.
        way = policy_ == ReplacePolicy::lru
                  ? set.recency.back()
                  : static_cast<std::uint32_t>(rng_.next() % cfg_.ways);
        Line& victim = set.lines[way];
        out.evicted.push_back({victim.tag * cfg_.num_sets + parts.set_index, victim.dirty});
        auto it = std::find(set.recency.begin(), set.recency.end(), way);
        set.recency.erase(it);
    }
    set.lines[way] = Line{true, parts.tag, is_store};
    set.recency.insert(set.recency.begin(), way);
    out.frame_used = slot_id(way);
    return out;
}

StateSnapshot SetAssocEngine::snapshot() const {
    StateSnapshot s;
    s.num_sets = cfg_.num_sets;
    s.tag_ways = cfg_.ways;
    s.total_frames = static_cast<std::uint64_t>(cfg_.num_sets) * cfg_.ways;
    s.sets.resize(sets_.size());
    s.recency.resize(sets_.size());
    s.frames.resize(s.total_frames);
    for (std::uint32_t si = 0; si < sets_.size(); ++si) {
        const Set& set = sets_[si];
        s.sets[si].reserve(cfg_.ways);
        for (std::uint32_t w = 0; w < set.lines.size(); ++w) {
            const Line& line = set.lines[w];
            std::uint32_t slot = si * cfg_.ways + w;
            s.sets[si].push_back({line.valid, line.tag, slot});
            s.frames[slot] = {line.valid, si, w, line.dirty, 0};
            if (!line.valid) s.free_frames.push_back(slot);
        }
        s.recency[si] = set.recency;
    }
    return s;
}

} // namespace racsim
