#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "word.hpp"

namespace stringology {

// Prefix doubling with counting sorts, O(n log n).
inline std::vector<std::uint32_t> suffix_array(const Word& x) {
    const std::size_t n = x.size();
    std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
    if (n == 0) return sa;
    Word alph = alphabet_of(x);
    for (std::size_t i = 0; i < n; ++i)
        rank[i] = static_cast<std::uint32_t>(std::lower_bound(alph.begin(), alph.end(), x[i]) - alph.begin());
    std::size_t classes = alph.size();
    for (std::size_t i = 0; i < n; ++i) sa[i] = static_cast<std::uint32_t>(i);
    std::stable_sort(sa.begin(), sa.end(), [&](auto a, auto b) { return rank[a] < rank[b]; });
    std::vector<std::uint32_t> cnt;
    for (std::size_t h = 1; classes < n; h <<= 1) {
        // Sort by (rank[i], rank[i+h]) using the previous order for the second key.
        std::size_t p = 0;
        for (std::size_t i = n - h; i < n; ++i) tmp[p++] = static_cast<std::uint32_t>(i);
        for (std::size_t i = 0; i < n; ++i)
            if (sa[i] >= h) tmp[p++] = static_cast<std::uint32_t>(sa[i] - h);
        cnt.assign(classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
        for (std::size_t c = 1; c <= classes; ++c) cnt[c] += cnt[c - 1];
        for (std::size_t i = 0; i < n; ++i) sa[cnt[rank[tmp[i]]]++] = tmp[i];
        auto second = [&](std::uint32_t i) -> std::int64_t { return i + h < n ? rank[i + h] : -1; };
        tmp[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            bool same = rank[sa[i]] == rank[sa[i - 1]] && second(sa[i]) == second(sa[i - 1]);
            tmp[sa[i]] = tmp[sa[i - 1]] + (same ? 0 : 1);
        }
        classes = tmp[sa[n - 1]] + 1;
        rank.swap(tmp);
    }
    return sa;
}

// Kasai: lcp[r] = LCP of suffixes sa[r-1] and sa[r]; lcp[0] = 0.
inline std::vector<std::uint32_t> lcp_array(const Word& x, const std::vector<std::uint32_t>& sa) {
    const std::size_t n = x.size();
    std::vector<std::uint32_t> rank(n), lcp(n, 0);
    for (std::size_t r = 0; r < n; ++r) rank[sa[r]] = static_cast<std::uint32_t>(r);
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        std::size_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && x[i + h] == x[j + h]) ++h;
        lcp[rank[i]] = static_cast<std::uint32_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

// Sparse-table range minimum over an array.
class RangeMin {
public:
    RangeMin() = default;
    explicit RangeMin(const std::vector<std::uint32_t>& a) {
        const std::size_t n = a.size();
        table_.push_back(a);
        for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
            const auto& prev = table_.back();
            std::vector<std::uint32_t> cur(n - (std::size_t{1} << k) + 1);
            for (std::size_t i = 0; i < cur.size(); ++i)
                cur[i] = std::min(prev[i], prev[i + (std::size_t{1} << (k - 1))]);
            table_.push_back(std::move(cur));
        }
    }

    // min over [l, r], l <= r
    std::uint32_t query(std::size_t l, std::size_t r) const {
        std::size_t k = 63 - static_cast<std::size_t>(__builtin_clzll(r - l + 1));
        return std::min(table_[k][l], table_[k][r + 1 - (std::size_t{1} << k)]);
    }

private:
    std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace stringology
