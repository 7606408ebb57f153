#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace elnet {

// Bit i-1 of a mask stands for element i; ground sets are capped at 31 elements.
using Mask = std::uint32_t;

constexpr int kMaxGround = 31;

inline bool has(Mask m, int i) { return (m >> (i - 1)) & 1u; }
inline Mask bit(int i) { return Mask{1} << (i - 1); }
inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask{0xFFFFFFFFu} >> (32 - n)); }

// Strictly increasing 1-based members of [ground].
class SubsetIndex {
public:
    SubsetIndex() = default;
    SubsetIndex(int ground, std::vector<int> members);  // validates
    static SubsetIndex from_mask(int ground, Mask m);
    // "1,2,4" or "" for the empty set.
    static SubsetIndex parse(int ground, const std::string& key);

    int ground() const { return ground_; }
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    Mask mask() const;
    bool contains(int i) const;
    SubsetIndex complement() const;
    std::string key() const;

    friend bool operator==(const SubsetIndex& a, const SubsetIndex& b) {
        return a.ground_ == b.ground_ && a.members_ == b.members_;
    }
    friend bool operator<(const SubsetIndex& a, const SubsetIndex& b) {
        return a.members_ < b.members_;
    }

private:
    int ground_ = 0;
    std::vector<int> members_;
};

std::string mask_key(Mask m);
Mask parse_mask_key(const std::string& key, int ground);
std::vector<int> mask_members(Mask m);

// All k-subsets of [n] as masks, in lexicographic order of their member lists.
std::vector<Mask> k_subsets(int n, int k);

// Reduce i into [1, n].
inline int cyc(int i, int n) { return ((i - 1) % n + n) % n + 1; }

}  // namespace elnet
