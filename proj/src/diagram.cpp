#include "propwheel/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "propwheel/combinatorics.hpp"
#include "propwheel/koszul.hpp"

namespace propwheel {

void WheeledDiagram::validate() const {
    if (q < 0 || l < 0) throw std::invalid_argument("negative biarity");
    if (static_cast<int>(fibers.size()) != l)
        throw std::invalid_argument("fiber count does not match output arity");
    std::vector<bool> seen(static_cast<std::size_t>(q) + 1, false);
    auto check_block = [&](const std::vector<int>& block) {
        if (block.empty()) throw std::invalid_argument("empty block");
        int prev = 0;
        for (int v : block) {
            if (v < 1 || v > q) throw std::invalid_argument("input label out of range");
            if (v <= prev) throw std::invalid_argument("block entries not strictly ascending");
            if (seen[v]) throw std::invalid_argument("input label repeated across blocks");
            seen[v] = true;
            prev = v;
        }
    };
    for (const auto& f : fibers) check_block(f);
    int prev_min = 0;
    for (const auto& w : wheels) {
        check_block(w);
        if (w.front() <= prev_min) throw std::invalid_argument("wheels not ordered by minima");
        prev_min = w.front();
    }
    for (int v = 1; v <= q; ++v)
        if (!seen[v]) throw std::invalid_argument("input label not covered");
}

bool WheeledDiagram::operator==(const WheeledDiagram& o) const {
    return q == o.q && l == o.l && fibers == o.fibers && wheels == o.wheels;
}

bool WheeledDiagram::operator<(const WheeledDiagram& o) const {
    if (q != o.q) return q < o.q;
    if (l != o.l) return l < o.l;
    if (fibers != o.fibers) return fibers < o.fibers;
    return wheels < o.wheels;
}

namespace {

// Signature of the permutation that sorts `labels` ascending.
int sort_signature(const std::vector<int>& labels) {
    int inversions = 0;
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            if (labels[a] > labels[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Canonical canonicalize_factors(int q, int l, const std::vector<Factor>& factors) {
    int sign = 1;
    std::vector<Factor> sorted_factors = factors;
    for (auto& f : sorted_factors) {
        if (f.labels.empty()) throw std::invalid_argument("empty factor");
        sign *= sort_signature(f.labels);
        std::sort(f.labels.begin(), f.labels.end());
    }

    // Target position of each factor in canonical order.
    int n = static_cast<int>(sorted_factors.size());
    std::vector<int> wheel_indices;
    std::vector<bool> output_seen(static_cast<std::size_t>(l) + 1, false);
    for (int i = 0; i < n; ++i) {
        const Factor& f = sorted_factors[i];
        if (f.is_wheel) {
            wheel_indices.push_back(i);
        } else {
            if (f.output < 1 || f.output > l || output_seen[f.output])
                throw std::invalid_argument("corolla outputs must cover each output once");
            output_seen[f.output] = true;
        }
    }
    std::sort(wheel_indices.begin(), wheel_indices.end(), [&](int a, int b) {
        return sorted_factors[a].labels.front() < sorted_factors[b].labels.front();
    });

    std::vector<int> target(n);
    GradedWord degrees(n);
    for (int i = 0; i < n; ++i) degrees[i] = sorted_factors[i].degree();
    for (int i = 0; i < n; ++i)
        if (!sorted_factors[i].is_wheel) target[i] = sorted_factors[i].output;
    for (std::size_t r = 0; r < wheel_indices.size(); ++r)
        target[wheel_indices[r]] = l + static_cast<int>(r) + 1;

    if (n > 0) sign *= koszul_sign(Permutation(target), degrees);

    Canonical out;
    out.sign = sign;
    out.diagram.q = q;
    out.diagram.l = l;
    out.diagram.fibers.resize(l);
    out.diagram.wheels.resize(wheel_indices.size());
    for (int i = 0; i < n; ++i) {
        const Factor& f = sorted_factors[i];
        if (f.is_wheel)
            out.diagram.wheels[target[i] - l - 1] = f.labels;
        else
            out.diagram.fibers[f.output - 1] = f.labels;
    }
    out.diagram.validate();
    return out;
}

Canonical canonical_form(int q, int l, const std::vector<std::vector<int>>& fibers,
                         const std::vector<std::vector<int>>& wheels) {
    if (static_cast<int>(fibers.size()) != l)
        throw std::invalid_argument("fiber count does not match output arity");
    std::vector<Factor> factors;
    factors.reserve(fibers.size() + wheels.size());
    for (int i = 0; i < l; ++i) factors.push_back(Factor{false, i + 1, fibers[i]});
    for (const auto& w : wheels) factors.push_back(Factor{true, 0, w});
    return canonicalize_factors(q, l, factors);
}

Element Element::basis(const WheeledDiagram& d) {
    d.validate();
    Element e(d.q, d.l);
    e.add(d, Rat(1));
    return e;
}

void Element::add(const WheeledDiagram& d, const Rat& c) {
    if (c == 0) return;
    if (d.q != q_ || d.l != l_) throw std::invalid_argument("biarity mismatch in Element::add");
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Element::add(const Canonical& c, const Rat& coeff) {
    add(c.diagram, coeff * c.sign);
}

Element& Element::operator+=(const Element& o) {
    if (o.q_ != q_ || o.l_ != l_) throw std::invalid_argument("biarity mismatch in sum");
    for (const auto& [d, c] : o.terms_) add(d, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (o.q_ != q_ || o.l_ != l_) throw std::invalid_argument("biarity mismatch in difference");
    for (const auto& [d, c] : o.terms_) add(d, -c);
    return *this;
}

Element& Element::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

bool Element::operator==(const Element& o) const {
    return q_ == o.q_ && l_ == o.l_ && terms_ == o.terms_;
}

std::vector<WheeledDiagram> enumerate_basis(int q, int l) {
    std::vector<WheeledDiagram> out;
    if (l > q || q < 0 || l < 0) return out;
    for (const auto& J : subsets_by_mask(q)) {
        if (static_cast<int>(J.size()) < l) continue;
        std::vector<int> rest;
        {
            std::vector<bool> in_J(static_cast<std::size_t>(q) + 1, false);
            for (int v : J) in_J[v] = true;
            for (int v = 1; v <= q; ++v)
                if (!in_J[v]) rest.push_back(v);
        }
        for (const auto& f : surjections(static_cast<int>(J.size()), l)) {
            WheeledDiagram base;
            base.q = q;
            base.l = l;
            base.fibers.assign(l, {});
            for (std::size_t i = 0; i < J.size(); ++i) base.fibers[f[i] - 1].push_back(J[i]);
            for (const auto& part : set_partitions(rest)) {
                WheeledDiagram d = base;
                d.wheels = part;
                d.validate();
                out.push_back(std::move(d));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t dimension(int q, int l) {
    if (l > q || q < 0 || l < 0) return 0;
    std::int64_t total = 0;
    for (int m = l; m <= q; ++m)
        total += binomial(q, m) * surjection_count(m, l) * bell(q - m);
    return total;
}

}  // namespace propwheel
