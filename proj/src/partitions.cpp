#include "corrmoment/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace corrmoment {

bool Partition::is_pairing() const {
    for (const auto& b : blocks)
        if (b.size() != 2) return false;
    return k > 0;
}

int Partition::max_block_size() const {
    size_t m = 0;
    for (const auto& b : blocks) m = std::max(m, b.size());
    return static_cast<int>(m);
}

Partition make_partition(int k, std::vector<std::vector<int>> blocks) {
    if (k < 1) throw std::invalid_argument("make_partition: k must be positive");
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    for (auto& b : blocks) {
        if (b.size() < 2)
            throw std::invalid_argument("make_partition: singleton block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1 || e > k || seen[static_cast<size_t>(e)])
                throw std::invalid_argument("make_partition: not a partition of {1..k}");
            seen[static_cast<size_t>(e)] = 1;
        }
    }
    for (int e = 1; e <= k; ++e)
        if (!seen[static_cast<size_t>(e)])
            throw std::invalid_argument("make_partition: element missing");
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return Partition{k, std::move(blocks)};
}

namespace {

// Recurse over the block of the smallest unassigned element.
void extend(int k, std::vector<int>& unused, std::vector<std::vector<int>>& acc,
            std::vector<Partition>& out) {
    if (unused.empty()) {
        out.push_back(Partition{k, acc});
        return;
    }
    const int head = unused.front();
    std::vector<int> rest(unused.begin() + 1, unused.end());
    const int m = static_cast<int>(rest.size());
    // choose companions of `head` as a nonempty subset of `rest`
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> block{head};
        std::vector<int> remaining;
        for (int i = 0; i < m; ++i)
            (mask >> i & 1u ? block : remaining).push_back(rest[static_cast<size_t>(i)]);
        acc.push_back(std::move(block));
        extend(k, remaining, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions_no_singletons(int k) {
    if (k < 1 || k > kMaxPartitionOrder)
        throw std::invalid_argument("enumerate_partitions_no_singletons: expansion order too large");
    std::vector<int> all(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i + 1;
    std::vector<Partition> out;
    std::vector<std::vector<int>> acc;
    extend(k, all, acc, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.blocks < b.blocks;
    });
    return out;
}

namespace {

void extend_pairing(int k, std::vector<int>& unused,
                    std::vector<std::vector<int>>& acc, std::vector<Partition>& out) {
    if (unused.empty()) {
        out.push_back(Partition{k, acc});
        return;
    }
    const int head = unused.front();
    for (size_t pick = 1; pick < unused.size(); ++pick) {
        std::vector<int> remaining;
        for (size_t i = 1; i < unused.size(); ++i)
            if (i != pick) remaining.push_back(unused[i]);
        acc.push_back({head, unused[pick]});
        extend_pairing(k, remaining, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_pairings(int k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("enumerate_pairings: k must be even");
    if (k > kMaxPairingOrder)
        throw std::invalid_argument("enumerate_pairings: expansion order too large");
    std::vector<int> all(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<size_t>(i)] = i + 1;
    std::vector<Partition> out;
    std::vector<std::vector<int>> acc;
    extend_pairing(k, all, acc, out);
    return out;
}

bool is_crossing(const Partition& p) {
    const auto& bs = p.blocks;
    for (size_t x = 0; x < bs.size(); ++x)
        for (size_t y = x + 1; y < bs.size(); ++y) {
            const int a = bs[x][0], b = bs[x][1];
            const int c = bs[y][0], d = bs[y][1];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return true;
        }
    return false;
}

std::int64_t catalan(int m) {
    if (m < 0 || m > 15) throw std::invalid_argument("catalan: m out of range");
    std::int64_t c = 1;
    for (int i = 0; i < m; ++i)
        c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

std::string format_partition(const Partition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& b : p.blocks) j.push_back(b);
    return j.dump();
}

Partition parse_partition(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::vector<int>> blocks;
    int k = 0;
    for (const auto& jb : j) {
        std::vector<int> b = jb.get<std::vector<int>>();
        for (int e : b) k = std::max(k, e);
        blocks.push_back(std::move(b));
    }
    return make_partition(k, std::move(blocks));
}

}  // namespace corrmoment
