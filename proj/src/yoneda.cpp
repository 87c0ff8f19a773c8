#include "propwheel/yoneda.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "propwheel/bar_category.hpp"

namespace propwheel {

namespace {

std::vector<std::vector<int>> all_bijections(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<int> invert_images(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i]) - 1] = static_cast<int>(i) + 1;
    return inv;
}

std::map<std::vector<int>, int> index_of(const std::vector<std::vector<int>>& items) {
    std::map<std::vector<int>, int> m;
    for (size_t i = 0; i < items.size(); ++i) m[items[i]] = static_cast<int>(i);
    return m;
}

}  // namespace

ExtClass surjection_class(int a, int b, const std::vector<int>& f) {
    BarComplex cx(ComplexSpec{b, a, 0, false});
    return ExtClass{a, b, z_cocycle_column(cx, f)};
}

ExtClass power_class(int b) {
    return surjection_class(1, b, std::vector<int>(static_cast<size_t>(b), 1));
}

ExtClass identity_class(int n) {
    std::vector<int> f(static_cast<size_t>(n));
    std::iota(f.begin(), f.end(), 1);
    return surjection_class(n, n, f);
}

ExtClass ext_add(const ExtClass& u, const ExtClass& v) {
    if (u.a != v.a || u.b != v.b) throw std::invalid_argument("ext_add: degree mismatch");
    ExtClass r = u;
    for (int i = 0; i < r.cocycle.rows(); ++i) r.cocycle.at(i, 0) += v.cocycle.at(i, 0);
    return r;
}

ExtClass ext_scale(const Rat& c, const ExtClass& u) {
    ExtClass r = u;
    for (int i = 0; i < r.cocycle.rows(); ++i) r.cocycle.at(i, 0) *= c;
    return r;
}

ExtClass yoneda_compose(const ExtClass& y, const ExtClass& x, unsigned seed) {
    if (x.b != y.a) throw std::invalid_argument("yoneda_compose: middle arity mismatch");
    if (x.a < 1) throw std::invalid_argument("yoneda_compose: source arity must be positive");
    const int a = x.a;
    const int b = x.b;
    const int c = y.b;
    const int dx = b - a;
    const int dy = c - b;
    if (dx < 0 || dy < 0) throw std::invalid_argument("yoneda_compose: classes must sit in top degree");

    BarComplex cxA(ComplexSpec{b, a, 0, false});
    BarComplex cxB(ComplexSpec{c, b, 0, false});
    BarComplex cxR(ComplexSpec{c, a, 0, false});
    const CochainLevel& lvA = cxA.level(dx);
    const CochainLevel& lvB = cxB.level(dy);
    const CochainLevel& lvR = cxR.level(dx + dy);
    if (x.cocycle.rows() != lvA.dim() || x.cocycle.cols() != 1)
        throw std::invalid_argument("yoneda_compose: first-factor cochain has wrong shape");
    if (y.cocycle.rows() != lvB.dim() || y.cocycle.cols() != 1)
        throw std::invalid_argument("yoneda_compose: second-factor cochain has wrong shape");

    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);

    // lift[si][ti] is the chain-map component from source summand si (a
    // factors) to target summand ti (b factors) at the current level; all
    // components are sums of relabelling maps because both word lengths
    // agree in every level of the lift.
    std::vector<std::vector<MapSum>> lift(lvA.comps.size(), std::vector<MapSum>(1));

    // Level 0: evaluating the target augmentation on the unknown
    // relabelling reads off one cochain coordinate of x per bijection.
    {
        const auto perms = all_bijections(b);
        for (size_t si = 0; si < lvA.comps.size(); ++si) {
            for (const auto& p : perms) {
                const int gi = lvA.gamma_index.at(invert_images(p));
                const Rat coeff = x.cocycle.at(lvA.index(static_cast<int>(si), gi), 0);
                add_to(lift[si][0], FoldMap::relabel(p), coeff);
            }
        }
    }

    std::vector<std::vector<int>> s_prev = lvA.comps;

    for (int k = 1; k <= dy; ++k) {
        const auto s_hi = compositions(dx + k, a);
        const auto t_hi = compositions(k, b);
        const auto t_lo = compositions(k - 1, b);
        const auto s_lo_index = index_of(s_prev);
        const auto t_lo_index = index_of(t_lo);
        const int n_letters = k + b;
        const auto perms = all_bijections(n_letters);
        std::vector<FoldMap> perm_maps;
        perm_maps.reserve(perms.size());
        for (const auto& p : perms) perm_maps.push_back(FoldMap::relabel(p));

        std::map<std::pair<int, FoldMap>, int> row_index;
        auto row_of = [&](int tlo, const FoldMap& g) {
            auto [it, fresh] = row_index.try_emplace({tlo, g}, static_cast<int>(row_index.size()));
            (void)fresh;
            return it->second;
        };

        // Right-hand sides first (they discover rows too): previous level
        // composed with the source resolution boundary.
        std::vector<std::map<int, Rat>> rhs(s_hi.size());
        for (size_t si = 0; si < s_hi.size(); ++si) {
            for (int v = 1; v <= a; ++v) {
                if (s_hi[si][static_cast<size_t>(v) - 1] < 1) continue;
                auto comp_lo = s_hi[si];
                --comp_lo[static_cast<size_t>(v) - 1];
                const int slo = s_lo_index.at(comp_lo);
                const MapSum dv = resolution_differential_component(s_hi[si], v);
                for (size_t tlo = 0; tlo < t_lo.size(); ++tlo) {
                    const MapSum ms = compose_sums(lift[static_cast<size_t>(slo)][tlo], dv);
                    for (const auto& [g, cg] : ms) rhs[si][row_of(static_cast<int>(tlo), g)] += cg;
                }
            }
        }

        // Left-hand side: target resolution boundary applied to the
        // unknown relabellings. Identical for every source summand.
        const int ncols = static_cast<int>(t_hi.size() * perms.size());
        std::vector<std::vector<std::pair<int, Rat>>> cols(static_cast<size_t>(ncols));
        for (size_t ti = 0; ti < t_hi.size(); ++ti) {
            for (int u = 1; u <= b; ++u) {
                if (t_hi[ti][static_cast<size_t>(u) - 1] < 1) continue;
                auto comp_lo = t_hi[ti];
                --comp_lo[static_cast<size_t>(u) - 1];
                const int tlo = t_lo_index.at(comp_lo);
                const MapSum du = resolution_differential_component(t_hi[ti], u);
                for (size_t pi = 0; pi < perms.size(); ++pi) {
                    const int col = static_cast<int>(ti * perms.size() + pi);
                    for (const auto& [h, cd] : du)
                        cols[static_cast<size_t>(col)].emplace_back(row_of(tlo, compose_maps(h, perm_maps[pi])), cd);
                }
            }
        }

        const int nrows = static_cast<int>(row_index.size());
        QMatrix am(nrows, ncols);
        for (int colidx = 0; colidx < ncols; ++colidx)
            for (const auto& [r, cv] : cols[static_cast<size_t>(colidx)]) am.at(r, colidx) += cv;

        const QMatrix kernel = am.kernel_basis();

        std::vector<std::vector<MapSum>> next(s_hi.size(), std::vector<MapSum>(t_hi.size()));
        for (size_t si = 0; si < s_hi.size(); ++si) {
            QMatrix rhs_col(nrows, 1);
            for (const auto& [r, cv] : rhs[si]) rhs_col.at(r, 0) = cv;
            QMatrix sol;
            if (!am.solve(rhs_col, &sol))
                throw std::runtime_error("yoneda_compose: lifting equations are inconsistent");
            if (seed != 0 && kernel.cols() > 0) {
                for (int kc = 0; kc < kernel.cols(); ++kc) {
                    const Rat r = coeff_dist(gen);
                    if (r == 0) continue;
                    for (int row = 0; row < sol.rows(); ++row) sol.at(row, 0) += r * kernel.at(row, kc);
                }
            }
            for (size_t ti = 0; ti < t_hi.size(); ++ti)
                for (size_t pi = 0; pi < perms.size(); ++pi) {
                    const Rat& cv = sol.at(static_cast<int>(ti * perms.size() + pi), 0);
                    if (cv != 0) add_to(next[si][ti], perm_maps[pi], cv);
                }
        }

        lift = std::move(next);
        s_prev = s_hi;
    }

    // Evaluate y on the top lift.
    QMatrix result(lvR.dim(), 1);
    for (size_t si = 0; si < s_prev.size(); ++si) {
        const int ci_r = lvR.comp_index.at(s_prev[si]);
        for (size_t ti = 0; ti < lvB.comps.size(); ++ti) {
            const MapSum& ms = lift[si][ti];
            if (ms.empty()) continue;
            for (size_t gi = 0; gi < lvB.gammas.size(); ++gi) {
                const Rat ycoeff = y.cocycle.at(lvB.index(static_cast<int>(ti), static_cast<int>(gi)), 0);
                if (ycoeff == 0) continue;
                for (const auto& [h, cu] : ms) {
                    const Rat total = ycoeff * cu;
                    expand_pullback(h, lvB.gammas[gi], [&](const std::vector<int>& gp) {
                        result.at(lvR.index(ci_r, lvR.gamma_index.at(gp)), 0) += total;
                    });
                }
            }
        }
    }
    return ExtClass{a, c, std::move(result)};
}

QMatrix yoneda_coordinates(const ExtClass& cls) {
    return top_class_basis(cls.a, cls.b).h.coordinates(cls.cocycle);
}

}  // namespace propwheel
