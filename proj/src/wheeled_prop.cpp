#include "propwheel/wheeled_prop.hpp"

#include <algorithm>
#include <stdexcept>

#include "propwheel/generator_table.hpp"
#include "propwheel/koszul.hpp"

namespace propwheel {

namespace {

// Factor sequence of a canonical diagram: corollas by output, then wheels.
std::vector<Factor> factor_sequence(const WheeledDiagram& d) {
    std::vector<Factor> seq;
    seq.reserve(d.fibers.size() + d.wheels.size());
    for (int o = 1; o <= d.l; ++o) seq.push_back(Factor{false, o, d.fibers[o - 1]});
    for (const auto& w : d.wheels) seq.push_back(Factor{true, 0, w});
    return seq;
}

GradedWord factor_degrees(const std::vector<Factor>& seq) {
    GradedWord deg(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) deg[i] = seq[i].degree();
    return deg;
}

std::vector<int> relabel_down(const std::vector<int>& labels, int removed) {
    std::vector<int> out;
    out.reserve(labels.size());
    for (int v : labels) out.push_back(v > removed ? v - 1 : v);
    return out;
}

int position_in(const std::vector<int>& ascending, int value) {
    auto it = std::lower_bound(ascending.begin(), ascending.end(), value);
    if (it == ascending.end() || *it != value) return 0;
    return static_cast<int>(it - ascending.begin()) + 1;
}

// fiber at ordered position p of `host` replaced by the spliced-in `graft`.
std::vector<int> splice_labels(const std::vector<int>& host, int p, const std::vector<int>& graft) {
    std::vector<int> out;
    out.reserve(host.size() + graft.size() - 1);
    out.insert(out.end(), host.begin(), host.begin() + (p - 1));
    out.insert(out.end(), graft.begin(), graft.end());
    out.insert(out.end(), host.begin() + p, host.end());
    return out;
}

Canonical act_inputs_diagram(const Permutation& sigma, const WheeledDiagram& d) {
    Permutation inv = sigma.inverse();
    std::vector<Factor> seq = factor_sequence(d);
    for (auto& f : seq)
        for (auto& v : f.labels) v = inv(v);
    return canonicalize_factors(d.q, d.l, seq);
}

Canonical act_outputs_diagram(const Permutation& tau, const WheeledDiagram& d) {
    std::vector<Factor> seq = factor_sequence(d);
    for (auto& f : seq)
        if (!f.is_wheel) f.output = tau(f.output);
    return canonicalize_factors(d.q, d.l, seq);
}

Canonical horizontal_diagrams(const WheeledDiagram& a, const WheeledDiagram& b) {
    std::vector<Factor> seq = factor_sequence(a);
    for (Factor f : factor_sequence(b)) {
        for (auto& v : f.labels) v += a.q;
        if (!f.is_wheel) f.output += a.l;
        seq.push_back(std::move(f));
    }
    return canonicalize_factors(a.q + b.q, a.l + b.l, seq);
}

// Returns the contracted diagram with its sign, or sign 0 for the zero case.
Canonical contract_diagram(int i, int j, const WheeledDiagram& d) {
    std::vector<Factor> seq = factor_sequence(d);
    GradedWord degrees = factor_degrees(seq);
    const std::vector<int>& fiber_j = d.fibers[j - 1];

    int sign = 1;
    std::vector<Factor> result;

    int p = position_in(fiber_j, i);
    if (p > 0) {
        // Case (i): the contracted input sits on the corolla it feeds.
        if (fiber_j.size() == 1) return Canonical{WheeledDiagram{}, 0};
        sign *= (p % 2 == 0) ? 1 : -1;
        for (int pos = 1; pos <= static_cast<int>(seq.size()); ++pos) {
            Factor f = seq[pos - 1];
            if (!f.is_wheel && f.output == j) {
                f.is_wheel = true;
                f.output = 0;
                f.labels.erase(f.labels.begin() + (p - 1));
            }
            result.push_back(std::move(f));
        }
    } else {
        // Locate the block that absorbs the corolla of output j.
        int host_pos = 0;
        for (int pos = 1; pos <= static_cast<int>(seq.size()); ++pos) {
            const Factor& f = seq[pos - 1];
            if (f.is_wheel || f.output != j) {
                p = position_in(f.labels, i);
                if (p > 0) {
                    host_pos = pos;
                    break;
                }
            }
        }
        if (host_pos == 0) throw std::logic_error("contracted input not found in any block");
        const Factor& host = seq[host_pos - 1];
        int n_graft = static_cast<int>(fiber_j.size());
        int n_host = static_cast<int>(host.labels.size());
        // Cases (ii) and (iii) share the slot sign table and the Koszul cost
        // of carrying the grafted corolla next to its host.
        sign *= host.is_wheel ? GeneratorTable::wheel_slot_sign(n_host, n_graft, p)
                              : GeneratorTable::corolla_slot_sign(n_host, n_graft, p);
        sign *= koszul_move_sign(degrees, j, host_pos > j ? host_pos : host_pos + 1);
        for (int pos = 1; pos <= static_cast<int>(seq.size()); ++pos) {
            if (pos == j) continue;
            Factor f = seq[pos - 1];
            if (pos == host_pos) f.labels = splice_labels(f.labels, p, fiber_j);
            result.push_back(std::move(f));
        }
    }

    for (auto& f : result) {
        f.labels = relabel_down(f.labels, i);
        if (!f.is_wheel && f.output > j) --f.output;
    }
    Canonical canon = canonicalize_factors(d.q - 1, d.l - 1, result);
    canon.sign *= sign;
    return canon;
}

}  // namespace

Element act_inputs(const Permutation& sigma, const Element& e) {
    if (sigma.size() != e.q()) throw std::invalid_argument("input permutation arity mismatch");
    Element out(e.q(), e.l());
    for (const auto& [d, c] : e.terms()) out.add(act_inputs_diagram(sigma, d), c);
    return out;
}

Element act_outputs(const Permutation& tau, const Element& e) {
    if (tau.size() != e.l()) throw std::invalid_argument("output permutation arity mismatch");
    Element out(e.q(), e.l());
    for (const auto& [d, c] : e.terms()) out.add(act_outputs_diagram(tau, d), c);
    return out;
}

Element horizontal(const Element& a, const Element& b) {
    Element out(a.q() + b.q(), a.l() + b.l());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) out.add(horizontal_diagrams(da, db), ca * cb);
    return out;
}

Element contract(int i, int j, const Element& e) {
    if (i < 1 || i > e.q()) throw std::invalid_argument("contraction input index out of range");
    if (j < 1 || j > e.l()) throw std::invalid_argument("contraction output index out of range");
    Element out(e.q() - 1, e.l() - 1);
    for (const auto& [d, c] : e.terms()) {
        Canonical canon = contract_diagram(i, j, d);
        if (canon.sign != 0) out.add(canon, c);
    }
    return out;
}

Element vertical(const Element& g, const Element& f) {
    if (g.q() != f.l())
        throw std::invalid_argument("vertical composition arity mismatch: inner arities differ");
    Element h = horizontal(g, f);
    for (int step = 0; step < g.q(); ++step) h = contract(1, g.l() + 1, h);
    return h;
}

Element mu(int n) {
    if (n < 1) throw std::invalid_argument("mu requires arity >= 1");
    WheeledDiagram d;
    d.q = n;
    d.l = 1;
    d.fibers.push_back({});
    for (int v = 1; v <= n; ++v) d.fibers[0].push_back(v);
    return Element::basis(d);
}

Element identity_element(int n) {
    if (n < 0) throw std::invalid_argument("identity requires arity >= 0");
    WheeledDiagram d;
    d.q = n;
    d.l = n;
    for (int v = 1; v <= n; ++v) d.fibers.push_back({v});
    return Element::basis(d);
}

Element wheel_generator(int n) {
    if (n < 1) throw std::invalid_argument("wheel requires arity >= 1");
    WheeledDiagram d;
    d.q = n;
    d.l = 0;
    d.wheels.push_back({});
    for (int v = 1; v <= n; ++v) d.wheels[0].push_back(v);
    return Element::basis(d);
}

Element class_h(int p) {
    if (p < 1) throw std::invalid_argument("class_h requires p >= 1");
    Element h = mu(2);
    for (int k = 1; k < p; ++k) h = vertical(mu(2), horizontal(h, identity_element(1)));
    return h;
}

Element class_hbar(int p) {
    if (p < 1) throw std::invalid_argument("class_hbar requires p >= 1");
    return contract(1, 1, class_h(p));
}

}  // namespace propwheel
