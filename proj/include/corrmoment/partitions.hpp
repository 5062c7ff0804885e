// partitions.hpp -- singleton-free set partitions of {1..k} and pairings.
//
// Partitions index the terms of the trace-moment cumulant expansion; blocks
// of size one never occur (1-cumulants vanish for centered entries).
// Canonical form: each block ascending, blocks ordered by smallest element.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corrmoment {

struct Partition {
    int k = 0;
    std::vector<std::vector<int>> blocks;  // canonical form, elements 1-based

    bool is_pairing() const;
    int max_block_size() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

inline constexpr int kMaxPartitionOrder = 12;
inline constexpr int kMaxPairingOrder = 16;

// All partitions of {1..k} with every block of size >= 2, canonical order.
std::vector<Partition> enumerate_partitions_no_singletons(int k);

// All (k-1)!! pair partitions of {1..k}, k even.
std::vector<Partition> enumerate_pairings(int k);

// True iff two blocks {a,b}, {c,d} interleave as a < c < b < d.
bool is_crossing(const Partition& pairing);

// m-th Catalan number, 0 <= m <= 15.
std::int64_t catalan(int m);

// JSON array-of-arrays form, e.g. [[1,2],[3,4]].
std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text);

// Canonicalize arbitrary blocks (sorts within and between blocks) and
// validate that they partition {1..k} with no singletons.
Partition make_partition(int k, std::vector<std::vector<int>> blocks);

}  // namespace corrmoment
