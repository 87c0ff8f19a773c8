#include "propwheel/combinatorics.hpp"

#include <stdexcept>

namespace propwheel {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::int64_t surjection_count(int q, int l) {
    if (l < 0 || q < 0) throw std::invalid_argument("negative arity");
    if (l == 0) return q == 0 ? 1 : 0;
    if (q < l) return 0;
    // Inclusion-exclusion over the outputs that are missed.
    std::int64_t total = 0;
    for (int k = 0; k <= l; ++k) {
        std::int64_t pw = 1;
        for (int t = 0; t < q; ++t) pw *= (l - k);
        total += (k % 2 == 0 ? 1 : -1) * binomial(l, k) * pw;
    }
    return total;
}

std::int64_t stirling2(int q, int j) {
    if (q < 0 || j < 0) return 0;
    if (q == 0 && j == 0) return 1;
    if (q == 0 || j == 0) return 0;
    std::vector<std::vector<std::int64_t>> s(q + 1, std::vector<std::int64_t>(j + 1, 0));
    s[0][0] = 1;
    for (int n = 1; n <= q; ++n)
        for (int k = 1; k <= j; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
    return s[q][j];
}

std::int64_t bell(int n) {
    std::int64_t total = 0;
    for (int k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

std::int64_t partitions_into_parts(int m, int n) {
    if (n < 0 || m < 0) return 0;
    if (m == 0 && n == 0) return 1;
    if (m == 0 || n == 0 || n > m) return 0;
    // p(m, n) = p(m-1, n-1) + p(m-n, n).
    std::vector<std::vector<std::int64_t>> p(m + 1, std::vector<std::int64_t>(n + 1, 0));
    p[0][0] = 1;
    for (int mm = 1; mm <= m; ++mm)
        for (int nn = 1; nn <= n && nn <= mm; ++nn)
            p[mm][nn] = p[mm - 1][nn - 1] + p[mm - nn][nn];
    return p[m][n];
}

namespace {

void extend_partition(int remaining, int cap, std::vector<int>& stack,
                      std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(stack);
        return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
        stack.push_back(part);
        extend_partition(remaining - part, part, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    if (n < 0) return {};
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    extend_partition(n, n == 0 ? 1 : n, stack, out);
    return out;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cur.reserve(k);
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<std::vector<int>> subsets_by_mask(int n) {
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& ground) {
    std::vector<std::vector<std::vector<int>>> out;
    int n = static_cast<int>(ground.size());
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // Restricted-growth strings: rgs[0] = 0, rgs[i] <= max(rgs[0..i-1]) + 1.
    std::vector<int> rgs(n, 0);
    auto emit = [&] {
        int blocks = 0;
        for (int v : rgs) blocks = std::max(blocks, v + 1);
        std::vector<std::vector<int>> part(blocks);
        for (int i = 0; i < n; ++i) part[rgs[i]].push_back(ground[i]);
        out.push_back(std::move(part));
    };
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rec(rec, 1, 0);
    return out;
}

std::vector<std::vector<int>> surjections(int q, int l) {
    std::vector<std::vector<int>> out;
    if (l > q || l < 0) return out;
    if (q == 0) {
        if (l == 0) out.push_back({});
        return out;
    }
    if (l == 0) return out;
    std::vector<int> f(q, 1);
    while (true) {
        std::vector<bool> hit(l + 1, false);
        for (int v : f) hit[v] = true;
        bool surj = true;
        for (int t = 1; t <= l; ++t) surj = surj && hit[t];
        if (surj) out.push_back(f);
        int i = q - 1;
        while (i >= 0 && f[i] == l) f[i--] = 1;
        if (i < 0) break;
        ++f[i];
    }
    return out;
}

}  // namespace propwheel
