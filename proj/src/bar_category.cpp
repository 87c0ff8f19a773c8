#include "propwheel/bar_category.hpp"

#include <algorithm>
#include <stdexcept>

namespace propwheel {

int FoldMap::inputs() const {
    int n = 0;
    for (const auto& f : fibers) n += static_cast<int>(f.size());
    return n;
}

void FoldMap::validate() const {
    const int n = inputs();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (const auto& f : fibers) {
        if (f.empty()) throw std::invalid_argument("FoldMap: empty fiber");
        for (int x : f) {
            if (x < 1 || x > n) throw std::invalid_argument("FoldMap: input out of range");
            if (seen[static_cast<size_t>(x)]) throw std::invalid_argument("FoldMap: repeated input");
            seen[static_cast<size_t>(x)] = 1;
        }
    }
}

FoldMap FoldMap::identity(int n) {
    FoldMap m;
    m.fibers.resize(static_cast<size_t>(n));
    for (int b = 1; b <= n; ++b) m.fibers[static_cast<size_t>(b) - 1] = {b};
    return m;
}

FoldMap FoldMap::fold(int n_out, int i) {
    if (i < 1 || i > n_out) throw std::invalid_argument("fold index out of range");
    FoldMap m;
    m.fibers.resize(static_cast<size_t>(n_out));
    for (int b = 1; b <= n_out; ++b) {
        if (b < i)
            m.fibers[static_cast<size_t>(b) - 1] = {b};
        else if (b == i)
            m.fibers[static_cast<size_t>(b) - 1] = {i, i + 1};
        else
            m.fibers[static_cast<size_t>(b) - 1] = {b + 1};
    }
    return m;
}

FoldMap FoldMap::relabel(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    FoldMap m;
    m.fibers.resize(static_cast<size_t>(n));
    for (int a = 1; a <= n; ++a) {
        const int b = images[static_cast<size_t>(a) - 1];
        if (b < 1 || b > n) throw std::invalid_argument("relabel: image out of range");
        if (!m.fibers[static_cast<size_t>(b) - 1].empty())
            throw std::invalid_argument("relabel: not a bijection");
        m.fibers[static_cast<size_t>(b) - 1] = {a};
    }
    return m;
}

FoldMap compose_maps(const FoldMap& outer, const FoldMap& inner) {
    if (inner.outputs() != outer.inputs())
        throw std::invalid_argument("compose_maps: arity mismatch");
    FoldMap r;
    r.fibers.resize(outer.fibers.size());
    for (size_t c = 0; c < outer.fibers.size(); ++c) {
        for (int b : outer.fibers[c]) {
            const auto& f = inner.fibers[static_cast<size_t>(b) - 1];
            r.fibers[c].insert(r.fibers[c].end(), f.begin(), f.end());
        }
    }
    return r;
}

void add_to(MapSum& target, const FoldMap& m, const Rat& c) {
    if (c == 0) return;
    auto it = target.find(m);
    if (it == target.end()) {
        target.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) target.erase(it);
    }
}

MapSum compose_sums(const MapSum& outer, const MapSum& inner) {
    MapSum r;
    for (const auto& [mo, co] : outer)
        for (const auto& [mi, ci] : inner) add_to(r, compose_maps(mo, mi), co * ci);
    return r;
}

void expand_pullback(const FoldMap& h, const std::vector<int>& gamma,
                     const std::function<void(const std::vector<int>&)>& emit) {
    const int slots = static_cast<int>(gamma.size());
    const int n_in = h.inputs();
    std::vector<int> gp(static_cast<size_t>(slots), 0);
    std::vector<int> used(static_cast<size_t>(n_in) + 1, 0);
    int covered = 0;

    std::function<void(int)> rec = [&](int t) {
        if (t == slots) {
            if (covered == n_in) emit(gp);
            return;
        }
        const auto& fiber = h.fibers[static_cast<size_t>(gamma[static_cast<size_t>(t)]) - 1];
        // Prune: remaining slots must still be able to cover the unused inputs.
        if (n_in - covered > slots - t) return;
        for (int a : fiber) {
            gp[static_cast<size_t>(t)] = a;
            if (++used[static_cast<size_t>(a)] == 1) ++covered;
            rec(t + 1);
            if (--used[static_cast<size_t>(a)] == 0) --covered;
        }
    };
    rec(0);
}

std::vector<int> summand_offsets(const std::vector<int>& comp) {
    std::vector<int> off(comp.size(), 0);
    int acc = 0;
    for (size_t t = 0; t < comp.size(); ++t) {
        off[t] = acc;
        acc += comp[t] + 1;
    }
    return off;
}

int summand_letters(const std::vector<int>& comp) {
    int n = static_cast<int>(comp.size());
    for (int k : comp) n += k;
    return n;
}

MapSum resolution_differential_component(const std::vector<int>& comp, int t) {
    if (t < 1 || t > static_cast<int>(comp.size()))
        throw std::invalid_argument("differential component: bad factor");
    const int kt = comp[static_cast<size_t>(t) - 1];
    if (kt < 1) throw std::invalid_argument("differential component: factor in degree 0");
    const int letters = summand_letters(comp);
    const int off = summand_offsets(comp)[static_cast<size_t>(t) - 1];
    int prefix = 0;
    for (int u = 0; u < t - 1; ++u) prefix += comp[static_cast<size_t>(u)];
    const Rat pre = (prefix % 2 == 0) ? Rat(1) : Rat(-1);

    MapSum r;
    for (int i = 1; i <= kt; ++i) {
        const Rat s = (i % 2 == 1) ? pre : -pre;
        add_to(r, FoldMap::fold(letters - 1, off + i), s);
    }
    return r;
}

std::vector<std::vector<int>> compositions(int k, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(static_cast<size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == parts - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
    };
    rec(0, k);
    return out;
}

}  // namespace propwheel
