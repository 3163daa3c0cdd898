#ifndef SPLITDEC_SET_FAMILY_HPP
#define SPLITDEC_SET_FAMILY_HPP

#include <cstdint>
#include <vector>

namespace splitdec {



// Multiset of non-empty subsets of {0..ground-1}; members stored sorted,
// duplicates permitted.
struct SetFamily {
    int ground = 0;
    std::vector<std::vector<int>> members;

    SetFamily() = default;
    explicit SetFamily(int ground_size) : ground(ground_size) {}

    void add(std::vector<int> m);  // sorts and validates
    long long norm() const;       // |members| + total member size
};

// True iff the sets intersect and neither contains the other (sorted input).
bool overlap(const std::vector<int>& a, const std::vector<int>& b);

// Coarsest partition refining `initial` in which no block overlaps any
// member: two elements share a block iff they share an initial block and
// belong to exactly the same members. Blocks ordered by minimum element.
std::vector<std::vector<int>> partition_refine(const std::vector<std::vector<int>>& initial,
                                               const SetFamily& f);

// Connected components of the overlap graph: per member, a class id
// (identical members share a class id and always land in one class).
std::vector<int> overlap_classes(const SetFamily& f);

} // namespace splitdec

#endif
