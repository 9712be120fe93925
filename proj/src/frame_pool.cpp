#include "racsim/frame_pool.hpp"

#include <stdexcept>

namespace racsim {

FramePool::FramePool(std::uint64_t frame_count)
    : valid_(frame_count, false), tree_(frame_count + 1, 0) {
    mask_ = 1;
    while (mask_ * 2 <= frame_count) mask_ *= 2;
}

void FramePool::add(std::uint64_t index, std::int64_t delta) {
    for (std::uint64_t i = index + 1; i < tree_.size(); i += i & (~i + 1)) {
        tree_[i] = static_cast<std::uint64_t>(static_cast<std::int64_t>(tree_[i]) + delta);
    }
}

void FramePool::mark_valid(std::uint64_t frame) {
    if (valid_[frame]) throw std::logic_error("FramePool: frame already valid");
    valid_[frame] = true;
    ++valid_count_;
    add(frame, +1);
}

void FramePool::mark_invalid(std::uint64_t frame) {
    if (!valid_[frame]) throw std::logic_error("FramePool: frame already invalid");
    valid_[frame] = false;
    --valid_count_;
    add(frame, -1);
}

std::uint64_t FramePool::lowest_free() const {
    if (free_count() == 0) throw std::logic_error("FramePool: no free frame");
    // Longest all-valid prefix ends exactly at the first invalid index.
    std::uint64_t pos = 0;  // prefix length so far
    std::uint64_t valid_seen = 0;
    for (std::uint64_t step = mask_; step > 0; step /= 2) {
        std::uint64_t next = pos + step;
        if (next < tree_.size() && valid_seen + tree_[next] == next) {
            valid_seen += tree_[next];
            pos = next;
        }
    }
    return pos;
}

std::uint64_t FramePool::nth_valid(std::uint64_t r) const {
    if (r >= valid_count_) throw std::logic_error("FramePool: rank out of range");
    std::uint64_t pos = 0;
    std::uint64_t remaining = r + 1;  // 1-based rank among valid bits
    for (std::uint64_t step = mask_; step > 0; step /= 2) {
        std::uint64_t next = pos + step;
        if (next < tree_.size() && tree_[next] < remaining) {
            remaining -= tree_[next];
            pos = next;
        }
    }
    return pos;  // 0-based index of the r-th valid frame
}

std::vector<std::uint32_t> FramePool::free_list() const {
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(free_count()));
    for (std::uint64_t i = 0; i < valid_.size(); ++i) {
        if (!valid_[i]) out.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

} // namespace racsim
