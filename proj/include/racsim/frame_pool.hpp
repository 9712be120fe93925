#ifndef RACSIM_FRAME_POOL_HPP_
#define RACSIM_FRAME_POOL_HPP_

#include <cstdint>
#include <vector>

namespace racsim {

// Valid-bit tracker for the global data store. Backs both allocation
// ("lowest free frame") and victim selection ("r-th valid frame in ascending
// index order") in O(log n) via a Fenwick tree over the valid bits. The
// reference oracle answers the same queries by linear scan.
class FramePool {
public:
    explicit FramePool(std::uint64_t frame_count);

    std::uint64_t size() const { return valid_.size(); }
    std::uint64_t valid_count() const { return valid_count_; }
    std::uint64_t free_count() const { return size() - valid_count_; }
    bool is_valid(std::uint64_t frame) const { return valid_[frame]; }

    void mark_valid(std::uint64_t frame);
    void mark_invalid(std::uint64_t frame);

    // Lowest invalid frame index. Requires free_count() > 0.
    std::uint64_t lowest_free() const;

    // r-th valid frame scanning indices in ascending order, 0-indexed.
    // Requires r < valid_count().
    std::uint64_t nth_valid(std::uint64_t r) const;

    std::vector<std::uint32_t> free_list() const;

private:
    void add(std::uint64_t index, std::int64_t delta);

    std::vector<bool> valid_;
    std::vector<std::uint64_t> tree_;  // Fenwick, 1-based, counts valid bits
    std::uint64_t valid_count_ = 0;
    std::uint64_t mask_ = 0;  // highest power of two <= size()
};

} // namespace racsim

#endif
