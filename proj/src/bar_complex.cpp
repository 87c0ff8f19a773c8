#include "propwheel/bar_complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "propwheel/combinatorics.hpp"
#include "propwheel/koszul.hpp"

namespace propwheel {

namespace {

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// All permutations of {1..n} as image vectors, lexicographic.
std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace

BarComplex::BarComplex(const ComplexSpec& spec, int max_level_dim) : spec_(spec) {
    if (spec.q < 0 || spec.l < 0 || spec.j < 0) throw std::invalid_argument("negative arity");
    if (spec.q > 8) throw std::runtime_error("resource guard: target arity exceeds 8");
    const int f = factors();
    if (f == 0) throw std::invalid_argument("complex needs at least one source factor");

    const int t = spec.q - f;
    for (int k = 0; k <= t; ++k) {
        CochainLevel lv;
        lv.comps = compositions(k, f);
        lv.gammas = surjections(spec.q, k + f);
        for (size_t i = 0; i < lv.comps.size(); ++i) lv.comp_index[lv.comps[i]] = static_cast<int>(i);
        for (size_t i = 0; i < lv.gammas.size(); ++i) lv.gamma_index[lv.gammas[i]] = static_cast<int>(i);
        if (lv.dim() > max_level_dim)
            throw std::runtime_error("resource guard: cochain level dimension exceeds limit");
        levels_.push_back(std::move(lv));
    }

    for (int k = 0; k + 1 <= t; ++k) {
        const CochainLevel& from = levels_[static_cast<size_t>(k)];
        const CochainLevel& to = levels_[static_cast<size_t>(k) + 1];
        QMatrix d(to.dim(), from.dim());
        for (size_t ci_to = 0; ci_to < to.comps.size(); ++ci_to) {
            const auto& comp_hi = to.comps[ci_to];
            for (int tt = 1; tt <= f; ++tt) {
                if (comp_hi[static_cast<size_t>(tt) - 1] < 1) continue;
                auto comp_lo = comp_hi;
                --comp_lo[static_cast<size_t>(tt) - 1];
                const int ci_from = from.comp_index.at(comp_lo);
                const MapSum ms = resolution_differential_component(comp_hi, tt);
                for (const auto& [h, s] : ms) {
                    for (size_t gi = 0; gi < from.gammas.size(); ++gi) {
                        const Rat coeff = s;
                        expand_pullback(h, from.gammas[gi], [&](const std::vector<int>& gp) {
                            const int gpi = to.gamma_index.at(gp);
                            d.at(to.index(static_cast<int>(ci_to), gpi),
                                 from.index(ci_from, static_cast<int>(gi))) += coeff;
                        });
                    }
                }
            }
        }
        d_.push_back(std::move(d));
    }
}

int BarComplex::top() const {
    const int t = spec_.q - factors();
    return t < 0 ? -1 : t;
}

QMatrix BarComplex::slot_action(const Permutation& sigma, int k) const {
    if (sigma.size() != spec_.q) throw std::invalid_argument("slot_action: wrong degree");
    const CochainLevel& lv = level(k);
    const Permutation inv = sigma.inverse();
    QMatrix a(lv.dim(), lv.dim());
    const int q = spec_.q;
    for (size_t gi = 0; gi < lv.gammas.size(); ++gi) {
        const auto& g = lv.gammas[gi];
        std::vector<int> gp(static_cast<size_t>(q));
        for (int t = 1; t <= q; ++t) gp[static_cast<size_t>(t) - 1] = g[static_cast<size_t>(inv(t)) - 1];
        const int gpi = lv.gamma_index.at(gp);
        for (size_t ci = 0; ci < lv.comps.size(); ++ci)
            a.at(lv.index(static_cast<int>(ci), gpi), lv.index(static_cast<int>(ci), static_cast<int>(gi))) = 1;
    }
    return a;
}

QMatrix BarComplex::factor_action(const Permutation& pi, int k) const {
    const int f = factors();
    if (pi.size() != f) throw std::invalid_argument("factor_action: wrong factor count");
    const CochainLevel& lv = level(k);
    QMatrix a(lv.dim(), lv.dim());
    for (size_t ci = 0; ci < lv.comps.size(); ++ci) {
        const auto& comp = lv.comps[ci];
        std::vector<int> comp_new(comp.size());
        for (int t = 1; t <= f; ++t)
            comp_new[static_cast<size_t>(pi(t)) - 1] = comp[static_cast<size_t>(t) - 1];
        const int ci_new = lv.comp_index.at(comp_new);
        const int sign = koszul_sign(pi, comp);

        const auto off_old = summand_offsets(comp);
        const auto off_new = summand_offsets(comp_new);
        const int letters = summand_letters(comp);
        std::vector<int> beta(static_cast<size_t>(letters));
        for (int t = 1; t <= f; ++t)
            for (int r = 1; r <= comp[static_cast<size_t>(t) - 1] + 1; ++r)
                beta[static_cast<size_t>(off_old[static_cast<size_t>(t) - 1] + r) - 1] =
                    off_new[static_cast<size_t>(pi(t)) - 1] + r;

        for (size_t gi = 0; gi < lv.gammas.size(); ++gi) {
            const auto& g = lv.gammas[gi];
            std::vector<int> gp(g.size());
            for (size_t s = 0; s < g.size(); ++s) gp[s] = beta[static_cast<size_t>(g[s]) - 1];
            const int gpi = lv.gamma_index.at(gp);
            a.at(lv.index(ci_new, gpi), lv.index(static_cast<int>(ci), static_cast<int>(gi))) = sign;
        }
    }
    return a;
}

QMatrix BarComplex::source_idempotent(int k) const {
    const CochainLevel& lv = level(k);
    if (spec_.j == 0) return QMatrix::identity(lv.dim());
    const int f = factors();
    QMatrix acc(lv.dim(), lv.dim());
    for (const auto& images : all_permutations(spec_.j)) {
        std::vector<int> full(static_cast<size_t>(f));
        for (int t = 1; t <= spec_.l; ++t) full[static_cast<size_t>(t) - 1] = t;
        for (int t = 1; t <= spec_.j; ++t)
            full[static_cast<size_t>(spec_.l + t) - 1] = spec_.l + images[static_cast<size_t>(t) - 1];
        const Permutation pi(full);
        const Permutation small(images);
        const Rat eps = small.signature();
        const QMatrix m = factor_action(pi, k);
        for (int r = 0; r < acc.rows(); ++r)
            for (int c = 0; c < acc.cols(); ++c)
                if (m.at(r, c) != 0) acc.at(r, c) += eps * m.at(r, c);
    }
    const Rat scale = Rat(1) / Rat(factorial(spec_.j));
    for (int r = 0; r < acc.rows(); ++r)
        for (int c = 0; c < acc.cols(); ++c) acc.at(r, c) *= scale;
    return acc;
}

QMatrix BarComplex::target_idempotent(int k) const {
    const CochainLevel& lv = level(k);
    if (!spec_.lambda_target || spec_.q <= 1) return QMatrix::identity(lv.dim());
    QMatrix acc(lv.dim(), lv.dim());
    for (const auto& images : all_permutations(spec_.q)) {
        const Permutation sigma(images);
        const Rat eps = sigma.signature();
        const QMatrix m = slot_action(sigma, k);
        for (int r = 0; r < acc.rows(); ++r)
            for (int c = 0; c < acc.cols(); ++c)
                if (m.at(r, c) != 0) acc.at(r, c) += eps * m.at(r, c);
    }
    const Rat scale = Rat(1) / Rat(factorial(spec_.q));
    for (int r = 0; r < acc.rows(); ++r)
        for (int c = 0; c < acc.cols(); ++c) acc.at(r, c) *= scale;
    return acc;
}

QMatrix BarComplex::idempotent(int k) const {
    const bool src = spec_.j > 0;
    const bool tgt = spec_.lambda_target && spec_.q > 1;
    if (!src && !tgt) return QMatrix::identity(level(k).dim());
    if (src && !tgt) return source_idempotent(k);
    if (!src) return target_idempotent(k);
    return source_idempotent(k).multiply(target_idempotent(k));
}

std::map<int, std::int64_t> ChainComplexQ::cohomology_dims() const {
    std::map<int, std::int64_t> out;
    const int n = static_cast<int>(dims.size());
    std::vector<int> ranks(d.size());
    for (size_t k = 0; k < d.size(); ++k) ranks[k] = d[k].rank();
    for (int k = 0; k < n; ++k) {
        std::int64_t h = dims[static_cast<size_t>(k)];
        if (k < static_cast<int>(d.size())) h -= ranks[static_cast<size_t>(k)];
        if (k > 0) h -= ranks[static_cast<size_t>(k) - 1];
        if (h != 0) out[k] = h;
    }
    return out;
}

CohomologySpace cohomology_at(const ChainComplexQ& c, int degree) {
    const int n = static_cast<int>(c.dims.size());
    if (degree < 0 || degree >= n) throw std::invalid_argument("cohomology_at: degree outside complex");
    const int dim_here = c.dims[static_cast<size_t>(degree)];

    QMatrix cocycles = (degree < static_cast<int>(c.d.size()))
                           ? c.d[static_cast<size_t>(degree)].kernel_basis()
                           : QMatrix::identity(dim_here);
    QMatrix boundaries(dim_here, 0);
    if (degree > 0) {
        const QMatrix& dprev = c.d[static_cast<size_t>(degree) - 1];
        boundaries = dprev.columns(dprev.independent_columns());
    }

    // Leftmost-first independent column selection keeps every boundary
    // column and extends by cocycles; the extension represents a basis of
    // the quotient.
    const QMatrix glued = QMatrix::augment(boundaries, cocycles);
    const std::vector<int> keep = glued.independent_columns();
    std::vector<int> rep_cols;
    for (int idx : keep)
        if (idx >= boundaries.cols()) rep_cols.push_back(idx - boundaries.cols());

    CohomologySpace h;
    h.degree = degree;
    h.dim = static_cast<int>(rep_cols.size());
    h.reps = cocycles.columns(rep_cols);
    h.rep_boundary = QMatrix::augment(h.reps, boundaries);
    return h;
}

QMatrix CohomologySpace::coordinates(const QMatrix& cocycles) const {
    QMatrix full;
    if (!rep_boundary.solve(cocycles, &full))
        throw std::runtime_error("coordinates: column not a cocycle modulo boundaries");
    QMatrix out(dim, cocycles.cols());
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < cocycles.cols(); ++c) out.at(r, c) = full.at(r, c);
    return out;
}

RestrictedComplex restrict_bar_complex(const BarComplex& b) {
    RestrictedComplex rc;
    const int n = b.levels();
    const bool trivial = b.spec().j == 0 && !(b.spec().lambda_target && b.spec().q > 1);
    rc.cx.dims.resize(static_cast<size_t>(n));
    rc.basis.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        if (trivial) {
            rc.basis[static_cast<size_t>(k)] = QMatrix::identity(b.level(k).dim());
        } else {
            const QMatrix p = b.idempotent(k);
            rc.basis[static_cast<size_t>(k)] = p.columns(p.independent_columns());
        }
        rc.cx.dims[static_cast<size_t>(k)] = rc.basis[static_cast<size_t>(k)].cols();
    }
    for (int k = 0; k + 1 < n; ++k) {
        if (trivial) {
            rc.cx.d.push_back(b.differential(k));
            continue;
        }
        const QMatrix image = b.differential(k).multiply(rc.basis[static_cast<size_t>(k)]);
        QMatrix coords;
        if (!rc.basis[static_cast<size_t>(k) + 1].solve(image, &coords))
            throw std::runtime_error("restricted differential leaves the invariant subcomplex");
        rc.cx.d.push_back(std::move(coords));
    }
    return rc;
}

QMatrix RestrictedComplex::restrict_operator(int k, const QMatrix& ambient_op) const {
    const QMatrix image = ambient_op.multiply(basis.at(static_cast<size_t>(k)));
    QMatrix coords;
    if (!basis.at(static_cast<size_t>(k)).solve(image, &coords))
        throw std::runtime_error("operator does not preserve the invariant subcomplex");
    return coords;
}

}  // namespace propwheel
