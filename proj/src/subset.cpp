#include "elnet/subset.hpp"

#include <algorithm>

#include "elnet/errors.hpp"

namespace elnet {

SubsetIndex::SubsetIndex(int ground, std::vector<int> members)
    : ground_(ground), members_(std::move(members)) {
    if (ground < 0 || ground > kMaxGround) throw DimensionMismatch("ground set too large");
    for (size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1 || members_[i] > ground)
            throw DimensionMismatch("subset member out of range");
        if (i > 0 && members_[i] <= members_[i - 1])
            throw DimensionMismatch("subset members must be strictly increasing");
    }
}

SubsetIndex SubsetIndex::from_mask(int ground, Mask m) {
    if (ground < kMaxGround && (m >> ground) != 0) throw DimensionMismatch("mask outside ground set");
    return SubsetIndex(ground, mask_members(m));
}

SubsetIndex SubsetIndex::parse(int ground, const std::string& key) {
    return from_mask(ground, parse_mask_key(key, ground));
}

Mask SubsetIndex::mask() const {
    Mask m = 0;
    for (int i : members_) m |= bit(i);
    return m;
}

bool SubsetIndex::contains(int i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

SubsetIndex SubsetIndex::complement() const {
    return from_mask(ground_, full_mask(ground_) & ~mask());
}

std::string SubsetIndex::key() const { return mask_key(mask()); }

std::string mask_key(Mask m) {
    std::string out;
    for (int i : mask_members(m)) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

Mask parse_mask_key(const std::string& key, int ground) {
    Mask m = 0;
    int prev = 0;
    size_t pos = 0;
    if (key.empty()) return 0;
    while (pos <= key.size()) {
        size_t next = key.find(',', pos);
        if (next == std::string::npos) next = key.size();
        const std::string tok = key.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad subset key '" + key + "'");
        const int v = std::stoi(tok);
        if (v < 1 || v > ground || v <= prev) throw ParseError("bad subset key '" + key + "'");
        m |= bit(v);
        prev = v;
        pos = next + 1;
    }
    return m;
}

std::vector<int> mask_members(Mask m) {
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1) {
        if (m & 1u) out.push_back(i);
    }
    return out;
}

std::vector<Mask> k_subsets(int n, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i + 1;
    while (true) {
        Mask m = 0;
        for (int v : idx) m |= bit(v);
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace elnet
