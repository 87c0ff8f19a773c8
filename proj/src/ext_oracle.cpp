#include "propwheel/ext_oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "propwheel/combinatorics.hpp"

namespace propwheel {

namespace {

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Permutation pad_with_identity(const Permutation& tau, int extra) {
    std::vector<int> images = tau.images();
    for (int t = 1; t <= extra; ++t) images.push_back(tau.size() + t);
    return Permutation(images);
}

}  // namespace

std::map<int, std::int64_t> ext_dimensions(int l, int q, int max_level_dim) {
    if (l < 0 || q < 0) throw std::invalid_argument("negative arity");
    if (l == 0) {
        std::map<int, std::int64_t> out;
        if (q == 0) out[0] = 1;
        return out;
    }
    if (l > q) return {};
    BarComplex b(ComplexSpec{q, l, 0, false}, max_level_dim);
    return restrict_bar_complex(b).cx.cohomology_dims();
}

std::map<int, std::int64_t> ext_lambda_dimensions(int j, int q, int max_level_dim) {
    if (j < 0 || q < 0) throw std::invalid_argument("negative arity");
    if (j == 0) {
        std::map<int, std::int64_t> out;
        if (q == 0) out[0] = 1;
        return out;
    }
    if (j > q) return {};
    BarComplex b(ComplexSpec{q, 0, j, false}, max_level_dim);
    return restrict_bar_complex(b).cx.cohomology_dims();
}

std::map<int, std::int64_t> ext_lambda_lambda(int n, int m, int max_level_dim) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative arity");
    if (n == 0) {
        std::map<int, std::int64_t> out;
        if (m == 0) out[0] = 1;
        return out;
    }
    if (n > m) return {};
    BarComplex b(ComplexSpec{m, 0, n, true}, max_level_dim);
    return restrict_bar_complex(b).cx.cohomology_dims();
}

QMatrix z_cocycle_column(const BarComplex& b, const std::vector<int>& f) {
    const int q = b.spec().q;
    const int l = b.spec().l;
    if (b.spec().j != 0 || b.spec().lambda_target || l < 1 || l > q)
        throw std::invalid_argument("z_cocycle_column needs a plain (l -> q) complex");
    if (static_cast<int>(f.size()) != q) throw std::invalid_argument("surjection has wrong length");
    const CochainLevel& lv = b.level(b.top());

    std::vector<int> comp(static_cast<size_t>(l), 0);
    std::vector<int> rank_in_fiber(static_cast<size_t>(q), 0);
    std::vector<int> seen(static_cast<size_t>(l), 0);
    for (int x = 1; x <= q; ++x) {
        const int t = f[static_cast<size_t>(x) - 1];
        if (t < 1 || t > l) throw std::invalid_argument("surjection value out of range");
        rank_in_fiber[static_cast<size_t>(x) - 1] = ++seen[static_cast<size_t>(t) - 1];
    }
    for (int t = 1; t <= l; ++t) {
        if (seen[static_cast<size_t>(t) - 1] == 0) throw std::invalid_argument("map is not onto");
        comp[static_cast<size_t>(t) - 1] = seen[static_cast<size_t>(t) - 1] - 1;
    }
    const auto off = summand_offsets(comp);
    std::vector<int> gamma(static_cast<size_t>(q));
    for (int x = 1; x <= q; ++x) {
        const int t = f[static_cast<size_t>(x) - 1];
        gamma[static_cast<size_t>(x) - 1] =
            off[static_cast<size_t>(t) - 1] + rank_in_fiber[static_cast<size_t>(x) - 1];
    }
    /*
     * Normalize by the Koszul sign of collating the block generators into a
     * single interleaved word: each pair of odd-degree blocks contributes a
     * transposition of odd symbols. With this factor the cocycle class lines
     * up with the engine diagram whose fibers are the f-preimages, so products
     * computed on the resolution match engine composition on the nose.
     */
    int odd = 0;
    for (int t = 1; t <= l; ++t)
        if (comp[static_cast<size_t>(t) - 1] % 2 != 0) ++odd;
    const bool flip = (odd * (odd - 1) / 2) % 2 != 0;

    QMatrix z(lv.dim(), 1);
    z.at(lv.index(lv.comp_index.at(comp), lv.gamma_index.at(gamma)), 0) = flip ? Rat(-1) : Rat(1);
    return z;
}

TopClassBasis top_class_basis(int l, int q) {
    if (l < 1 || l > q) throw std::invalid_argument("top_class_basis needs 1 <= l <= q");
    BarComplex b(ComplexSpec{q, l, 0, false});
    const int topdeg = b.top();
    const CochainLevel& lv = b.level(topdeg);
    const auto fs = surjections(q, l);

    QMatrix z(lv.dim(), static_cast<int>(fs.size()));
    for (size_t fi = 0; fi < fs.size(); ++fi) {
        const QMatrix col = z_cocycle_column(b, fs[fi]);
        for (int r = 0; r < col.rows(); ++r)
            if (col.at(r, 0) != 0) z.at(r, static_cast<int>(fi)) = col.at(r, 0);
    }

    QMatrix boundaries(lv.dim(), 0);
    if (topdeg >= 1) {
        const QMatrix& dprev = b.differential(topdeg - 1);
        boundaries = dprev.columns(dprev.independent_columns());
    }
    if (static_cast<int>(fs.size()) + boundaries.cols() != lv.dim())
        throw std::runtime_error("top classes do not count the full cohomology");
    QMatrix rep_boundary = QMatrix::augment(z, boundaries);
    if (rep_boundary.rank() != lv.dim())
        throw std::runtime_error("top classes are dependent modulo boundaries");

    CohomologySpace h{topdeg, static_cast<int>(fs.size()), std::move(z), std::move(rep_boundary)};
    return TopClassBasis{l, q, std::move(b), std::move(h), fs};
}

QMatrix action_on_cohomology(const Permutation& p, ActionSide side, int l, int q) {
    TopClassBasis tb = top_class_basis(l, q);
    const int topdeg = tb.complex.top();
    const QMatrix op = (side == ActionSide::inputs) ? tb.complex.slot_action(p, topdeg)
                                                    : tb.complex.factor_action(p, topdeg);
    return tb.h.coordinates(op.multiply(tb.h.reps));
}

ExtSector::ExtSector(int l, int j, int q, int max_level_dim) : l_(l), j_(j), q_(q) {
    if (l < 0 || j < 0 || q < 0) throw std::invalid_argument("ExtSector: negative degree");
    if (l == 0 && j == 0) {
        unit_ = (q == 0);
        empty_ = !unit_;
        return;
    }
    if (l + j > q) return;
    complex_ = std::make_shared<BarComplex>(ComplexSpec{q, l, j, false}, max_level_dim);
    restricted_ = restrict_bar_complex(*complex_);
    h_ = cohomology_at(restricted_.cx, complex_->top());
    empty_ = (h_.dim == 0);
}

std::int64_t ExtSector::dim() const {
    if (unit_) return 1;
    return empty_ ? 0 : h_.dim;
}

Rat ExtSector::character(const Permutation& sigma, const Permutation& tau) const {
    if (sigma.size() != q_ || tau.size() != l_)
        throw std::invalid_argument("character: wrong degrees");
    if (unit_) return 1;
    if (empty_) return 0;
    const int topdeg = complex_->top();
    const QMatrix op = complex_->slot_action(sigma, topdeg)
                           .multiply(complex_->factor_action(pad_with_identity(tau, j_), topdeg));
    const QMatrix op_r = restricted_.restrict_operator(topdeg, op);
    return h_.coordinates(op_r.multiply(h_.reps)).trace();
}

Rat ext_sector_character(const Permutation& sigma, const Permutation& tau, int l, int j, int q) {
    return ExtSector(l, j, q).character(sigma, tau);
}

Rat ext_character(const Permutation& sigma, const Permutation& tau, int l, int q) {
    if (l == 0 && q == 0) return 1;
    Rat total = 0;
    for (int j = 0; l + j <= q; ++j)
        total += ExtSector(l, j, q).character(sigma, tau);
    return total;
}

bool OracleReport::ok() const {
    for (const auto& [name, pass] : checks)
        if (!pass) return false;
    return true;
}

OracleReport oracle_report(const ComplexSpec& spec, int max_level_dim) {
    OracleReport rep;
    rep.spec = spec;
    BarComplex b(spec, max_level_dim);
    const int n = b.levels();
    for (int k = 0; k < n; ++k) rep.level_dims.push_back(b.level(k).dim());

    const bool has_idem = spec.j > 0 || (spec.lambda_target && spec.q > 1);

    bool dsq = true;
    for (int k = 0; k + 2 < n; ++k)
        dsq = dsq && is_zero_matrix(b.differential(k + 1).multiply(b.differential(k)));
    rep.checks.emplace_back("differential_squares_to_zero", dsq);

    if (has_idem) {
        bool proj = true;
        bool comm = true;
        std::vector<QMatrix> ps;
        for (int k = 0; k < n; ++k) ps.push_back(b.idempotent(k));
        for (int k = 0; k < n; ++k) proj = proj && ps[static_cast<size_t>(k)].multiply(ps[static_cast<size_t>(k)]) == ps[static_cast<size_t>(k)];
        for (int k = 0; k + 1 < n; ++k)
            comm = comm && ps[static_cast<size_t>(k) + 1].multiply(b.differential(k)) ==
                               b.differential(k).multiply(ps[static_cast<size_t>(k)]);
        rep.checks.emplace_back("idempotent_is_projection", proj);
        rep.checks.emplace_back("idempotent_commutes_with_differential", comm);
    }

    RestrictedComplex rc = restrict_bar_complex(b);
    bool rdsq = true;
    for (size_t k = 0; k + 1 < rc.cx.d.size(); ++k)
        rdsq = rdsq && is_zero_matrix(rc.cx.d[k + 1].multiply(rc.cx.d[k]));
    rep.checks.emplace_back("restricted_differential_squares_to_zero", rdsq);

    rep.dims = rc.cx.cohomology_dims();

    // Counting formulas, where one is known.
    const int q = spec.q;
    if (!spec.lambda_target && spec.l >= 1 && spec.j == 0) {
        std::map<int, std::int64_t> want;
        if (spec.l <= q && surjection_count(q, spec.l) > 0) want[q - spec.l] = surjection_count(q, spec.l);
        rep.checks.emplace_back("dimensions_match_surjection_count", rep.dims == want);
    } else if (!spec.lambda_target && spec.l == 0 && spec.j >= 1) {
        std::map<int, std::int64_t> want;
        if (spec.j <= q && stirling2(q, spec.j) > 0) want[q - spec.j] = stirling2(q, spec.j);
        rep.checks.emplace_back("dimensions_match_stirling_count", rep.dims == want);
    } else if (spec.lambda_target && spec.l == 0 && spec.j >= 1) {
        std::map<int, std::int64_t> want;
        if (spec.j <= q && partitions_into_parts(q, spec.j) > 0)
            want[q - spec.j] = partitions_into_parts(q, spec.j);
        rep.checks.emplace_back("dimensions_match_partition_count", rep.dims == want);
    } else if (!spec.lambda_target && spec.l >= 1 && spec.j >= 1) {
        std::map<int, std::int64_t> want;
        const int f = spec.l + spec.j;
        if (f <= q && surjection_count(q, f) > 0)
            want[q - f] = surjection_count(q, f) / factorial(spec.j);
        rep.checks.emplace_back("dimensions_match_mixed_count", rep.dims == want);
    }
    return rep;
}

Permutation cycle_type_representative(const std::vector<int>& type) {
    int n = 0;
    for (int p : type) {
        if (p < 1) throw std::invalid_argument("cycle type parts must be positive");
        n += p;
    }
    std::vector<int> images(static_cast<size_t>(n));
    int start = 1;
    for (int p : type) {
        for (int i = 0; i < p; ++i)
            images[static_cast<size_t>(start + i) - 1] = (i + 1 < p) ? start + i + 1 : start;
        start += p;
    }
    return Permutation(images);
}

CharacterTable character_table(int q, int max_j) {
    if (q < 0 || max_j < 0) throw std::invalid_argument("character_table: negative arguments");
    CharacterTable t;
    t.q = q;
    t.max_j = max_j;
    t.classes = partitions_of(q);
    const Permutation no_factors = Permutation::identity(0);
    std::vector<ExtSector> sectors;
    sectors.reserve(static_cast<size_t>(max_j));
    for (int j = 1; j <= max_j; ++j) sectors.emplace_back(0, j, q);
    for (const auto& type : t.classes) {
        const Permutation rep = cycle_type_representative(type);
        std::vector<Rat> row;
        Rat total = 0;
        for (const ExtSector& s : sectors) {
            row.push_back(s.character(rep, no_factors));
            total += row.back();
        }
        t.values.push_back(std::move(row));
        t.totals.push_back(total);
    }
    return t;
}

}  // namespace propwheel
