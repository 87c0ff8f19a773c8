#include "propwheel/checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "propwheel/combinatorics.hpp"
#include "propwheel/diagram.hpp"
#include "propwheel/expr.hpp"
#include "propwheel/ext_oracle.hpp"
#include "propwheel/generator_table.hpp"
#include "propwheel/koszul.hpp"
#include "propwheel/matrix.hpp"
#include "propwheel/serialize.hpp"
#include "propwheel/wheeled_prop.hpp"
#include "propwheel/yoneda.hpp"

namespace propwheel {

namespace {

struct Checker {
    std::vector<CheckResult> out;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, pass ? std::string() : detail});
    }

    void equal(const std::string& name, const Element& got, const Element& want) {
        if (got == want) {
            check(name, true);
        } else {
            check(name, false,
                  "got " + element_to_string(got) + ", want " + element_to_string(want));
        }
    }
};

std::vector<Permutation> all_perms(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Sends 1..first to second+1..second+first and first+1..first+second to 1..second.
Permutation block_swap(int first, int second) {
    std::vector<int> img(static_cast<size_t>(first + second));
    for (int i = 1; i <= first; ++i) img[static_cast<size_t>(i - 1)] = second + i;
    for (int i = 1; i <= second; ++i) img[static_cast<size_t>(first + i - 1)] = i;
    return Permutation(img);
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> img;
    img.reserve(static_cast<size_t>(a.size() + b.size()));
    for (int i = 1; i <= a.size(); ++i) img.push_back(a(i));
    for (int i = 1; i <= b.size(); ++i) img.push_back(a.size() + b(i));
    return Permutation(img);
}

std::vector<int> complement_of(int n, int skip) {
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (v != skip) out.push_back(v);
    return out;
}

std::int64_t factorial(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::vector<int> image_vector(const WheeledDiagram& d) {
    std::vector<int> f(static_cast<size_t>(d.q), 0);
    for (int t = 0; t < d.l; ++t)
        for (int x : d.fibers[static_cast<size_t>(t)]) f[static_cast<size_t>(x - 1)] = t + 1;
    return f;
}

WheeledDiagram diagram_of_surjection(int q, int l, const std::vector<int>& f) {
    WheeledDiagram d;
    d.q = q;
    d.l = l;
    d.fibers.assign(static_cast<size_t>(l), {});
    for (int x = 1; x <= q; ++x) d.fibers[static_cast<size_t>(f[static_cast<size_t>(x - 1)] - 1)].push_back(x);
    return d;
}

// Matrix of the engine action on the wheel-free subspace of E(q, l), columns
// and rows indexed by surjections(q, l).
QMatrix engine_action_matrix(const Permutation& p, ActionSide side, int l, int q, bool* ok) {
    const auto fs = surjections(q, l);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < fs.size(); ++i) index[fs[i]] = static_cast<int>(i);
    QMatrix m(static_cast<int>(fs.size()), static_cast<int>(fs.size()));
    for (size_t c = 0; c < fs.size(); ++c) {
        const Element e = Element::basis(diagram_of_surjection(q, l, fs[c]));
        const Element img = side == ActionSide::inputs ? act_inputs(p, e) : act_outputs(p, e);
        for (const auto& [d, coeff] : img.terms()) {
            if (!d.wheels.empty()) {
                *ok = false;
                return m;
            }
            m.at(index.at(image_vector(d)), static_cast<int>(c)) = coeff;
        }
    }
    return m;
}

// Closed-form slot action on the surjection classes: z_f goes to the z at
// f composed with sigma^{-1}, signed by the product over blocks of the
// signature of the induced fiber permutation.
QMatrix formula_input_matrix(const Permutation& sigma, int l, int q) {
    const auto fs = surjections(q, l);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < fs.size(); ++i) index[fs[i]] = static_cast<int>(i);
    const Permutation inv = sigma.inverse();
    QMatrix m(static_cast<int>(fs.size()), static_cast<int>(fs.size()));
    for (size_t c = 0; c < fs.size(); ++c) {
        const std::vector<int>& f = fs[c];
        std::vector<int> g(static_cast<size_t>(q));
        for (int x = 1; x <= q; ++x) g[static_cast<size_t>(x - 1)] = f[static_cast<size_t>(inv(x) - 1)];
        int sign = 1;
        for (int t = 1; t <= l; ++t) {
            std::vector<int> fiber;
            for (int x = 1; x <= q; ++x)
                if (f[static_cast<size_t>(x - 1)] == t) fiber.push_back(x);
            sign *= sigma.restrict_and_reindex(fiber).signature();
        }
        m.at(index.at(g), static_cast<int>(c)) = sign;
    }
    return m;
}

// Closed-form action of the adjacent factor transposition (a, a+1) on the
// surjection classes: swap the two blocks of f, signed by the product of
// their cohomological degrees.
QMatrix formula_output_adjacent(int a, int l, int q) {
    const auto fs = surjections(q, l);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < fs.size(); ++i) index[fs[i]] = static_cast<int>(i);
    QMatrix m(static_cast<int>(fs.size()), static_cast<int>(fs.size()));
    for (size_t c = 0; c < fs.size(); ++c) {
        const std::vector<int>& f = fs[c];
        std::vector<int> g(static_cast<size_t>(q));
        int ja = -1, jb = -1;
        for (int x = 1; x <= q; ++x) {
            int v = f[static_cast<size_t>(x - 1)];
            if (v == a) {
                ++ja;
                v = a + 1;
            } else if (v == a + 1) {
                ++jb;
                v = a;
            }
            g[static_cast<size_t>(x - 1)] = v;
        }
        const int sign = (ja * jb) % 2 ? -1 : 1;
        m.at(index.at(g), static_cast<int>(c)) = sign;
    }
    return m;
}

// Trace of the joint input/output action on the span of basis diagrams with
// exactly j wheels.
Rat engine_sector_trace(const Permutation& sigma, const Permutation& tau, int l, int j, int q) {
    Rat tr = 0;
    for (const auto& d : enumerate_basis(q, l)) {
        if (static_cast<int>(d.wheels.size()) != j) continue;
        const Element img = act_outputs(tau, act_inputs(sigma, Element::basis(d)));
        const auto it = img.terms().find(d);
        if (it != img.terms().end()) tr += it->second;
    }
    return tr;
}

std::string dims_to_string(const std::map<int, std::int64_t>& dims) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, v] : dims) {
        if (!first) os << ", ";
        os << k << ": " << v;
        first = false;
    }
    os << "}";
    return os.str();
}

Element random_element(std::mt19937& rng, int q, int l) {
    const auto basis = enumerate_basis(q, l);
    Element e(q, l);
    if (basis.empty()) return e;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> count(1, std::min<int>(6, static_cast<int>(basis.size())));
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        int n = num(rng);
        if (n == 0) n = 1;
        e.add(basis[static_cast<size_t>(pick(rng))], Rat(n) / Rat(den(rng)));
    }
    return e;
}

ExprPtr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> leaf(0, 2);
    std::uniform_int_distribution<int> small(1, 3);
    std::uniform_int_distribution<int> node(0, 6);
    if (depth <= 0) {
        switch (leaf(rng)) {
            case 0: return make_mu(small(rng) + 1);
            case 1: return make_id(small(rng) - 1);
            default: return make_wheel(small(rng));
        }
    }
    switch (node(rng)) {
        case 0: return make_tensor(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 1: return make_compose(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        case 2: return make_contract(small(rng), small(rng), random_expr(rng, depth - 1));
        case 3: {
            std::vector<int> img(static_cast<size_t>(small(rng)) + 1);
            for (size_t i = 0; i < img.size(); ++i) img[i] = static_cast<int>(i) + 1;
            std::shuffle(img.begin(), img.end(), rng);
            const std::string cycles = Permutation(img).to_cycles();
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                return make_act_in(cycles, random_expr(rng, depth - 1));
            return make_act_out(cycles, random_expr(rng, depth - 1));
        }
        case 4: {
            ExprPtr inner = random_expr(rng, depth - 1);
            if (inner->kind == MorphismExpr::Kind::scale) return inner;
            std::uniform_int_distribution<int> num(-7, 7);
            int n = num(rng);
            if (n == 0) n = 3;
            return make_scale(Rat(n) / Rat(small(rng)), inner);
        }
        case 5: {
            std::vector<ExprPtr> parts;
            const int k = small(rng) - 1 + 2;
            for (int i = 0; i < k; ++i) parts.push_back(random_expr(rng, depth - 1));
            return make_sum(std::move(parts));
        }
        default: return random_expr(rng, 0);
    }
}

QMatrix random_matrix(std::mt19937& rng, int rows, int cols, int density_percent) {
    QMatrix m(rows, cols);
    std::uniform_int_distribution<int> roll(0, 99);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (roll(rng) < density_percent) m.at(i, j) = Rat(num(rng)) / Rat(den(rng));
    return m;
}

bool same_coordinates(const QMatrix& a, const QMatrix& b) { return a == b; }

std::string coords_to_string(const QMatrix& m) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << rat_to_string(m.at(i, 0));
    }
    os << ")";
    return os.str();
}

void suite_koszul(Checker& c, std::mt19937& rng, int) {
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> len(1, 6);

    bool id_ok = true;
    bool comp_ok = true;
    bool move_ok = true;
    for (int it = 0; it < 200; ++it) {
        const int n = len(rng);
        GradedWord w(static_cast<size_t>(n));
        for (auto& d : w) d = deg(rng);
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = i + 1;
        if (koszul_sign(Permutation(img), w) != 1) id_ok = false;

        std::shuffle(img.begin(), img.end(), rng);
        const Permutation p(img);
        std::shuffle(img.begin(), img.end(), rng);
        const Permutation q(img);
        GradedWord after_p(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) after_p[static_cast<size_t>(p(i) - 1)] = w[static_cast<size_t>(i - 1)];
        if (koszul_sign(p.then(q), w) != koszul_sign(p, w) * koszul_sign(q, after_p))
            comp_ok = false;

        std::uniform_int_distribution<int> pos(1, n);
        const int from = pos(rng);
        const int to = pos(rng);
        std::vector<int> mv(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            int tgt;
            if (i == from)
                tgt = to;
            else if (from < to)
                tgt = (i < from || i > to) ? i : i - 1;
            else
                tgt = (i < to || i > from) ? i : i + 1;
            mv[static_cast<size_t>(i - 1)] = tgt;
        }
        if (koszul_move_sign(w, from, to) != koszul_sign(Permutation(mv), w)) move_ok = false;
    }
    c.check("identity_permutation_sign_is_one", id_ok);
    c.check("sign_respects_composition", comp_ok);
    c.check("move_sign_matches_cycle_sign", move_ok);

    c.check("odd_odd_transposition",
            koszul_sign(Permutation({2, 1}), GradedWord{1, 1}) == -1);
    c.check("odd_even_transposition",
            koszul_sign(Permutation({2, 1}), GradedWord{1, 2}) == 1);
    c.check("even_even_transposition",
            koszul_sign(Permutation({2, 1}), GradedWord{2, 2}) == 1);
    c.check("degree_zero_is_invisible",
            koszul_sign(Permutation({3, 1, 2}), GradedWord{1, 0, 1}) == -1);
}

void suite_dimensions(Checker& c, std::mt19937&, int) {
    bool formula1 = true;
    bool formula2 = true;
    bool sorted_valid = true;
    bool degrees = true;
    for (int q = 0; q <= 6; ++q)
        for (int l = 0; l <= q; ++l) {
            std::int64_t by_wheels = 0;
            for (int j = 0; l + j <= q; ++j)
                by_wheels += surjection_count(q, l + j) / factorial(j);
            if (dimension(q, l) != by_wheels) formula1 = false;

            std::int64_t by_split = 0;
            for (int m = l; m <= q; ++m)
                by_split += binomial(q, m) * surjection_count(m, l) * bell(q - m);
            if (dimension(q, l) != by_split) formula2 = false;

            if (q <= 5) {
                const auto basis = enumerate_basis(q, l);
                if (static_cast<std::int64_t>(basis.size()) != dimension(q, l)) sorted_valid = false;
                for (size_t i = 0; i < basis.size(); ++i) {
                    try {
                        basis[i].validate();
                    } catch (const std::exception&) {
                        sorted_valid = false;
                    }
                    if (i + 1 < basis.size() && !(basis[i] < basis[i + 1])) sorted_valid = false;
                    if (basis[i].degree() != q - l) degrees = false;
                }
            }
        }
    c.check("dimension_matches_wheel_count_formula", formula1);
    c.check("dimension_matches_splitting_formula", formula2);
    c.check("basis_is_sorted_and_valid", sorted_valid);
    c.check("basis_degrees_are_uniform", degrees);

    c.check("spot_dimensions",
            dimension(0, 0) == 1 && dimension(1, 1) == 1 && dimension(1, 0) == 1 &&
                dimension(2, 1) == 3 && dimension(2, 0) == 2 && dimension(2, 2) == 2 &&
                dimension(3, 1) == 10 && dimension(3, 0) == 5 && dimension(4, 2) == 62 &&
                dimension(1, 2) == 0);
}

void suite_canonical(Checker& c, std::mt19937& rng, int) {
    bool idem = true;
    bool fiber_swap = true;
    bool wheel_swap = true;
    for (int q = 1; q <= 4; ++q)
        for (int l = 0; l <= q; ++l)
            for (const auto& d : enumerate_basis(q, l)) {
                const Canonical cn = canonical_form(d.q, d.l, d.fibers, d.wheels);
                if (!(cn.diagram == d) || cn.sign != 1) idem = false;

                for (size_t t = 0; t < d.fibers.size(); ++t) {
                    if (d.fibers[t].size() < 2) continue;
                    auto fibers = d.fibers;
                    std::swap(fibers[t][0], fibers[t][1]);
                    const Canonical sw = canonical_form(d.q, d.l, fibers, d.wheels);
                    if (!(sw.diagram == d) || sw.sign != -1) fiber_swap = false;
                }
                for (size_t t = 0; t < d.wheels.size(); ++t) {
                    if (d.wheels[t].size() < 2) continue;
                    auto wheels = d.wheels;
                    std::swap(wheels[t][0], wheels[t][1]);
                    const Canonical sw = canonical_form(d.q, d.l, d.fibers, wheels);
                    if (!(sw.diagram == d) || sw.sign != -1) wheel_swap = false;
                }
            }
    c.check("canonical_form_is_idempotent", idem);
    c.check("fiber_entry_swap_flips_sign", fiber_swap);
    c.check("wheel_entry_swap_flips_sign", wheel_swap);

    bool factor_koszul = true;
    for (const auto& d : enumerate_basis(4, 2)) {
        if (!d.wheels.empty()) continue;
        std::vector<Factor> swapped(2);
        swapped[0] = Factor{false, 2, d.fibers[1]};
        swapped[1] = Factor{false, 1, d.fibers[0]};
        const int d1 = static_cast<int>(d.fibers[0].size()) - 1;
        const int d2 = static_cast<int>(d.fibers[1].size()) - 1;
        const Canonical cn = canonicalize_factors(d.q, d.l, swapped);
        const int want = (d1 * d2) % 2 ? -1 : 1;
        if (!(cn.diagram == d) || cn.sign != want) factor_koszul = false;
    }
    c.check("factor_reorder_pays_koszul_sign", factor_koszul);

    bool wheel_order = true;
    for (const auto& d : enumerate_basis(4, 0)) {
        if (d.wheels.size() != 2) continue;
        const Canonical cn = canonical_form(d.q, d.l, d.fibers, {d.wheels[1], d.wheels[0]});
        const int dw1 = static_cast<int>(d.wheels[0].size());
        const int dw2 = static_cast<int>(d.wheels[1].size());
        const int want = (dw1 * dw2) % 2 ? -1 : 1;
        if (!(cn.diagram == d) || cn.sign != want) wheel_order = false;
    }
    c.check("wheel_reorder_pays_koszul_sign", wheel_order);

    bool scramble_ok = true;
    std::uniform_int_distribution<int> qs(1, 4);
    for (int it = 0; it < 100; ++it) {
        const int q = qs(rng);
        std::uniform_int_distribution<int> ls(0, q);
        const int l = ls(rng);
        const auto basis = enumerate_basis(q, l);
        if (basis.empty()) continue;
        const auto& d = basis[static_cast<size_t>(
            std::uniform_int_distribution<int>(0, static_cast<int>(basis.size()) - 1)(rng))];
        auto fibers = d.fibers;
        auto wheels = d.wheels;
        for (auto& f : fibers) std::shuffle(f.begin(), f.end(), rng);
        for (auto& w : wheels) std::shuffle(w.begin(), w.end(), rng);
        std::shuffle(wheels.begin(), wheels.end(), rng);
        const Canonical cn = canonical_form(d.q, d.l, fibers, wheels);
        if (!(cn.diagram == d) || (cn.sign != 1 && cn.sign != -1)) scramble_ok = false;
        const Canonical again = canonical_form(cn.diagram.q, cn.diagram.l, cn.diagram.fibers,
                                               cn.diagram.wheels);
        if (again.sign != 1) scramble_ok = false;
    }
    c.check("scrambled_input_recanonicalizes", scramble_ok);
}

void suite_quadratic(Checker& c, std::mt19937& rng, int) {
    struct Shape {
        int l0, l1, l2, q;
    };
    const std::vector<Shape> shapes = {{1, 1, 2, 3}, {1, 2, 2, 3}, {1, 2, 3, 4},
                                       {2, 2, 3, 4}, {1, 1, 1, 3}, {2, 3, 3, 4}};
    bool assoc = true;
    for (const auto& s : shapes) {
        const auto as = enumerate_basis(s.l1, s.l0);
        const auto bs = enumerate_basis(s.l2, s.l1);
        const auto cs = enumerate_basis(s.q, s.l2);
        const size_t total = as.size() * bs.size() * cs.size();
        const size_t want = std::min<size_t>(total, 400);
        for (size_t it = 0; it < want; ++it) {
            const Element a = Element::basis(as[std::uniform_int_distribution<size_t>(0, as.size() - 1)(rng)]);
            const Element b = Element::basis(bs[std::uniform_int_distribution<size_t>(0, bs.size() - 1)(rng)]);
            const Element f = Element::basis(cs[std::uniform_int_distribution<size_t>(0, cs.size() - 1)(rng)]);
            if (vertical(a, vertical(b, f)) != vertical(vertical(a, b), f)) assoc = false;
        }
    }
    c.check("vertical_is_associative", assoc);

    bool interchange = true;
    const auto g1s = enumerate_basis(2, 1);
    const auto g2s = enumerate_basis(2, 1);
    const auto f1s = enumerate_basis(3, 2);
    const auto f2s = enumerate_basis(2, 2);
    for (int it = 0; it < 300; ++it) {
        const auto& g1 = g1s[std::uniform_int_distribution<size_t>(0, g1s.size() - 1)(rng)];
        const auto& g2 = g2s[std::uniform_int_distribution<size_t>(0, g2s.size() - 1)(rng)];
        const auto& f1 = f1s[std::uniform_int_distribution<size_t>(0, f1s.size() - 1)(rng)];
        const auto& f2 = f2s[std::uniform_int_distribution<size_t>(0, f2s.size() - 1)(rng)];
        const Element lhs = vertical(horizontal(Element::basis(g1), Element::basis(g2)),
                                     horizontal(Element::basis(f1), Element::basis(f2)));
        Element rhs = horizontal(vertical(Element::basis(g1), Element::basis(f1)),
                                 vertical(Element::basis(g2), Element::basis(f2)));
        if ((g2.degree() * f1.degree()) % 2) rhs *= Rat(-1);
        if (lhs != rhs) interchange = false;
    }
    c.check("interchange_pays_koszul_sign", interchange);

    bool hassoc = true;
    for (int it = 0; it < 200; ++it) {
        const Element a = random_element(rng, 2, 1);
        const Element b = random_element(rng, 2, 0);
        const Element f = random_element(rng, 3, 2);
        if (horizontal(a, horizontal(b, f)) != horizontal(horizontal(a, b), f)) hassoc = false;
    }
    c.check("horizontal_is_associative", hassoc);

    bool sym = true;
    struct Pair {
        int qf, lf, qg, lg;
    };
    const std::vector<Pair> pairs = {{2, 1, 3, 1}, {2, 1, 2, 1}, {3, 2, 2, 1}, {2, 0, 2, 1}, {3, 1, 2, 0}};
    for (const auto& pr : pairs) {
        for (const auto& fd : enumerate_basis(pr.qf, pr.lf))
            for (const auto& gd : enumerate_basis(pr.qg, pr.lg)) {
                const Element f = Element::basis(fd);
                const Element g = Element::basis(gd);
                const Element hgf = horizontal(g, f);
                Element want = horizontal(f, g);
                if ((fd.degree() * gd.degree()) % 2) want *= Rat(-1);
                const Element got = act_outputs(block_swap(pr.lg, pr.lf),
                                                act_inputs(block_swap(pr.qf, pr.qg), hgf));
                if (got != want) sym = false;
            }
    }
    c.check("block_swap_symmetry_pays_koszul_sign", sym);
}

void suite_actions(Checker& c, std::mt19937& rng, int) {
    const auto s3 = all_perms(3);

    bool in_comp = true;
    for (int l = 0; l <= 3; ++l)
        for (const auto& d : enumerate_basis(3, l))
            for (const auto& s : s3)
                for (const auto& t : s3) {
                    const Element e = Element::basis(d);
                    if (act_inputs(t.then(s), e) != act_inputs(t, act_inputs(s, e))) in_comp = false;
                }
    c.check("input_action_composition_law", in_comp);

    bool out_comp = true;
    for (const auto& d : enumerate_basis(4, 3))
        for (const auto& s : s3)
            for (const auto& t : s3) {
                const Element e = Element::basis(d);
                if (act_outputs(s.then(t), e) != act_outputs(t, act_outputs(s, e))) out_comp = false;
            }
    c.check("output_action_composition_law", out_comp);

    bool commute = true;
    const auto s2 = all_perms(2);
    const auto s4 = all_perms(4);
    for (const auto& d : enumerate_basis(4, 2))
        for (const auto& t : s2) {
            const Permutation& s = s4[std::uniform_int_distribution<size_t>(0, s4.size() - 1)(rng)];
            const Element e = Element::basis(d);
            if (act_inputs(s, act_outputs(t, e)) != act_outputs(t, act_inputs(s, e))) commute = false;
        }
    c.check("input_and_output_actions_commute", commute);

    bool ident = true;
    for (const auto& d : enumerate_basis(3, 2)) {
        const Element e = Element::basis(d);
        if (act_inputs(Permutation::identity(3), e) != e) ident = false;
        if (act_outputs(Permutation::identity(2), e) != e) ident = false;
    }
    c.check("identity_acts_trivially", ident);

    bool linear = true;
    for (int it = 0; it < 100; ++it) {
        const Element a = random_element(rng, 3, 1);
        const Element b = random_element(rng, 3, 1);
        const Permutation& s = s3[std::uniform_int_distribution<size_t>(0, 5)(rng)];
        if (act_inputs(s, a + Rat(2) * b) != act_inputs(s, a) + Rat(2) * act_inputs(s, b))
            linear = false;
    }
    c.check("actions_are_linear", linear);

    bool sign_rep = true;
    for (int n = 2; n <= 4; ++n)
        for (const auto& p : all_perms(n)) {
            if (act_inputs(p, mu(n)) != Rat(p.signature()) * mu(n)) sign_rep = false;
            if (act_inputs(p, wheel_generator(n)) != Rat(p.signature()) * wheel_generator(n))
                sign_rep = false;
        }
    c.check("generators_carry_the_sign_representation", sign_rep);

    bool bi = true;
    for (const auto& p : s3)
        for (const auto& gd : enumerate_basis(3, 1))
            for (const auto& fd : enumerate_basis(4, 3)) {
                const Element g = Element::basis(gd);
                const Element f = Element::basis(fd);
                if (vertical(act_inputs(p, g), act_outputs(p.inverse(), f)) != vertical(g, f))
                    bi = false;
            }
    c.check("middle_action_cancels_in_vertical", bi);

    bool outer = true;
    for (const auto& t : s2)
        for (const auto& gd : enumerate_basis(2, 2))
            for (const auto& fd : enumerate_basis(3, 2)) {
                const Element g = Element::basis(gd);
                const Element f = Element::basis(fd);
                if (act_outputs(t, vertical(g, f)) != vertical(act_outputs(t, g), f)) outer = false;
            }
    c.check("output_action_passes_to_the_outer_factor", outer);

    bool inner = true;
    for (const auto& s : s3)
        for (const auto& gd : enumerate_basis(2, 1))
            for (const auto& fd : enumerate_basis(3, 2)) {
                const Element g = Element::basis(gd);
                const Element f = Element::basis(fd);
                if (act_inputs(s, vertical(g, f)) != vertical(g, act_inputs(s, f))) inner = false;
            }
    c.check("input_action_passes_to_the_inner_factor", inner);

    bool block = true;
    for (const auto& s : s3)
        for (const auto& t : s2)
            for (const auto& fd : enumerate_basis(3, 2))
                for (const auto& gd : enumerate_basis(2, 1)) {
                    const Element f = Element::basis(fd);
                    const Element g = Element::basis(gd);
                    if (act_inputs(direct_sum(s, t), horizontal(f, g)) !=
                        horizontal(act_inputs(s, f), act_inputs(t, g)))
                        block = false;
                }
    for (const auto& u : s2)
        for (const auto& fd : enumerate_basis(3, 2))
            for (const auto& gd : enumerate_basis(2, 1)) {
                const Element f = Element::basis(fd);
                const Element g = Element::basis(gd);
                if (act_outputs(direct_sum(u, Permutation::identity(1)), horizontal(f, g)) !=
                    horizontal(act_outputs(u, f), act_outputs(Permutation::identity(1), g)))
                    block = false;
            }
    c.check("block_actions_respect_horizontal", block);
}

void suite_contract(Checker& c, std::mt19937& rng, int) {
    c.equal("first_slot_contraction_of_mu2", contract(1, 1, mu(2)), Rat(-1) * wheel_generator(1));
    c.equal("second_slot_contraction_of_mu2", contract(2, 1, mu(2)), wheel_generator(1));
    c.equal("identity_contraction_vanishes", contract(1, 1, identity_element(1)),
            Element::zero(0, 0));

    bool alternation = true;
    for (int n = 2; n <= 5; ++n) {
        const Element base = contract(1, 1, mu(n));
        for (int i = 2; i <= n; ++i) {
            Element want = base;
            if ((i - 1) % 2) want *= Rat(-1);
            if (contract(i, 1, mu(n)) != want) alternation = false;
        }
    }
    c.check("contraction_slot_alternation", alternation);

    bool in_equiv = true;
    for (const auto& p : all_perms(3))
        for (const auto& d : enumerate_basis(3, 2))
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 2; ++j) {
                    const Element e = Element::basis(d);
                    const Element lhs = contract(i, j, act_inputs(p, e));
                    const Permutation r = p.restrict_and_reindex(complement_of(3, i));
                    if (lhs != act_inputs(r, contract(p(i), j, e))) in_equiv = false;
                }
    c.check("contraction_is_input_equivariant", in_equiv);

    bool out_equiv = true;
    for (const auto& p : all_perms(3))
        for (const auto& d : enumerate_basis(4, 3))
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 3; ++j) {
                    const Element e = Element::basis(d);
                    const Element lhs = contract(i, j, act_outputs(p, e));
                    const int jj = p.inverse()(j);
                    const Permutation r = p.restrict_and_reindex(complement_of(3, jj));
                    if (lhs != act_outputs(r, contract(i, jj, e))) out_equiv = false;
                }
    c.check("contraction_is_output_equivariant", out_equiv);

    bool linear = true;
    for (int it = 0; it < 100; ++it) {
        const Element a = random_element(rng, 3, 2);
        const Element b = random_element(rng, 3, 2);
        if (contract(2, 1, a + Rat(3) * b) != contract(2, 1, a) + Rat(3) * contract(2, 1, b))
            linear = false;
    }
    c.check("contraction_is_linear", linear);

    bool commute = true;
    for (int q = 2; q <= 4; ++q)
        for (int l = 2; l <= 3 && l <= q; ++l)
            for (const auto& d : enumerate_basis(q, l))
                for (int i = 1; i <= q; ++i)
                    for (int j = 1; j <= l; ++j)
                        for (int k = 1; k <= q; ++k)
                            for (int m = 1; m <= l; ++m) {
                                if (i == k || j == m) continue;
                                const Element e = Element::basis(d);
                                const Element lhs = contract(i - (k < i ? 1 : 0),
                                                             j - (m < j ? 1 : 0), contract(k, m, e));
                                const Element rhs = contract(k - (i < k ? 1 : 0),
                                                             m - (j < m ? 1 : 0), contract(i, j, e));
                                if (lhs != rhs) commute = false;
                            }
    c.check("contractions_commute_after_reindexing", commute);
}

void suite_compose(Checker& c, std::mt19937& rng, int) {
    bool units = true;
    for (int q = 1; q <= 4; ++q)
        for (int l = 0; l <= q; ++l)
            for (const auto& d : enumerate_basis(q, l)) {
                const Element e = Element::basis(d);
                if (vertical(identity_element(l), e) != e) units = false;
                if (vertical(e, identity_element(q)) != e) units = false;
            }
    c.check("vertical_units", units);

    bool hunit = true;
    for (int it = 0; it < 50; ++it) {
        const Element e = random_element(rng, 3, 1);
        if (horizontal(e, identity_element(0)) != e) hunit = false;
        if (horizontal(identity_element(0), e) != e) hunit = false;
    }
    c.check("empty_diagram_is_the_horizontal_unit", hunit);

    c.equal("eval_left_comb", eval_expression(parse_expression("mu(2) . (mu(2) * id(1))")),
            class_h(2));
    c.equal("eval_right_comb", eval_expression(parse_expression("mu(2) . (id(1) * mu(2))")),
            Rat(-1) * class_h(2));
    c.equal("eval_contraction", eval_expression(parse_expression("xi(1,1, mu(2))")),
            Rat(-1) * wheel_generator(1));
    c.equal("eval_input_action", eval_expression(parse_expression("(sin[(1 2)] w(2))")),
            Rat(-1) * wheel_generator(2));
    c.equal("eval_linear_combination",
            eval_expression(parse_expression("2 mu(2) * w(1) - 3/2 mu(3)")),
            Rat(2) * horizontal(mu(2), wheel_generator(1)) + Rat(-3) / Rat(2) * mu(3));

    bool mismatch = false;
    try {
        eval_expression(parse_expression("mu(2) . mu(2)"));
    } catch (const std::exception& ex) {
        mismatch = std::string(ex.what()).find("composition arity mismatch") != std::string::npos;
    }
    c.check("composition_mismatch_reports_arities", mismatch);

    bool range = false;
    try {
        eval_expression(parse_expression("xi(3,1, mu(2))"));
    } catch (const std::exception&) {
        range = true;
    }
    c.check("contraction_range_is_validated", range);

    bool parse_pos = false;
    try {
        parse_expression("mu(2) + + w(1)");
    } catch (const ParseError& ex) {
        parse_pos = std::string(ex.what()).find("column") != std::string::npos;
    }
    c.check("parse_errors_carry_positions", parse_pos);
}

void suite_classes(Checker& c, std::mt19937&, int) {
    bool corollas = true;
    for (int p = 1; p <= 6; ++p)
        if (class_h(p) != mu(p + 1)) corollas = false;
    c.check("iterated_products_are_corollas", corollas);

    bool wheels = true;
    for (int p = 1; p <= 6; ++p)
        if (class_hbar(p) != Rat(-1) * wheel_generator(p)) wheels = false;
    c.check("traced_products_are_negative_wheels", wheels);

    bool degrees = true;
    for (int p = 1; p <= 6; ++p) {
        const Element h = class_h(p);
        const Element hb = class_hbar(p);
        if (h.q() != p + 1 || h.l() != 1) degrees = false;
        if (hb.q() != p || hb.l() != 0) degrees = false;
        for (const auto& [d, coeff] : h.terms())
            if (d.degree() != p) degrees = false;
        for (const auto& [d, coeff] : hb.terms())
            if (d.degree() != p) degrees = false;
    }
    c.check("class_degrees", degrees);

    bool combs = true;
    for (int p = 2; p <= 5; ++p) {
        if (vertical(mu(2), horizontal(mu(p), identity_element(1))) != mu(p + 1)) combs = false;
        Element right = vertical(mu(2), horizontal(identity_element(1), mu(p)));
        Element want = mu(p + 1);
        if ((p - 1) % 2) want *= Rat(-1);
        if (right != want) combs = false;
    }
    c.check("comb_builds_agree_up_to_koszul_sign", combs);

    WheeledDiagram two_blocks;
    two_blocks.q = 4;
    two_blocks.l = 2;
    two_blocks.fibers = {{1, 2}, {3, 4}};
    c.equal("square_of_mu2", horizontal(mu(2), mu(2)), Element::basis(two_blocks));
}

void suite_gentable(Checker& c, std::mt19937&, int) {
    bool table = true;
    try {
        table = GeneratorTable::validate_against_suspension(6);
    } catch (const std::exception&) {
        table = false;
    }
    c.check("slot_signs_match_suspension_bookkeeping", table);

    bool corolla = true;
    bool wheel = true;
    bool relation = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (int i = 1; i <= m; ++i) {
                const int cs = GeneratorTable::corolla_slot_sign(m, n, i);
                const int ws = GeneratorTable::wheel_slot_sign(m, n, i);
                if (cs != (((n - 1) * (i - 1)) % 2 ? -1 : 1)) corolla = false;
                if (ws != (((n - 1) * i) % 2 ? -1 : 1)) wheel = false;
                if (ws != cs * ((n - 1) % 2 ? -1 : 1)) relation = false;
            }
    c.check("corolla_slot_sign_closed_form", corolla);
    c.check("wheel_slot_sign_closed_form", wheel);
    c.check("wheel_sign_adds_one_desuspension", relation);
}

void suite_roundtrip(Checker& c, std::mt19937& rng, int) {
    bool ast = true;
    for (int it = 0; it < 500 && ast; ++it) {
        const ExprPtr e = random_expr(rng, 4);
        const std::string text = expression_to_string(e);
        try {
            const ExprPtr back = parse_expression(text);
            if (!(*back == *e)) {
                ast = false;
                c.check("expression_print_parse_identity", false, "mismatch on: " + text);
            }
        } catch (const std::exception& ex) {
            ast = false;
            c.check("expression_print_parse_identity", false,
                    std::string("parse failed: ") + ex.what() + " on: " + text);
        }
    }
    if (ast) c.check("expression_print_parse_identity", true);

    bool json = true;
    bool expr = true;
    std::uniform_int_distribution<int> qs(0, 4);
    for (int it = 0; it < 500; ++it) {
        const int q = qs(rng);
        const int l = std::uniform_int_distribution<int>(0, q)(rng);
        const Element e = random_element(rng, q, l);
        try {
            if (element_from_json(element_to_json(e)) != e) json = false;
        } catch (const std::exception&) {
            json = false;
        }
        try {
            if (eval_expression(parse_expression(element_to_expression(e))) != e) expr = false;
        } catch (const std::exception&) {
            expr = false;
        }
    }
    c.check("element_json_roundtrip", json);
    c.check("element_expression_roundtrip", expr);

    bool errors = true;
    try {
        element_from_json("{");
        errors = false;
    } catch (const std::exception& ex) {
        if (std::string(ex.what()).find("JSON parse error") == std::string::npos) errors = false;
    }
    try {
        element_from_json(R"({"q": 1})");
        errors = false;
    } catch (const std::exception&) {
    }
    try {
        element_from_json(R"({"q": 1, "l": 1, "terms": [{"coeff": "x", "fibers": [[1]], "wheels": []}]})");
        errors = false;
    } catch (const std::exception&) {
    }
    c.check("json_errors_are_reported", errors);

    const Element sample = Rat(2) * class_h(2) - Rat(1) / Rat(3) * horizontal(mu(2), wheel_generator(1));
    c.check("dot_output_is_a_digraph",
            element_to_dot(sample).find("digraph") == 0 &&
                element_to_dot(Element::zero(1, 1)).find("digraph") == 0);
}

void suite_oracle_dims(Checker& c, std::mt19937&, int max_dim) {
    bool spot = true;
    spot = spot && ext_dimensions(1, 1, max_dim) == std::map<int, std::int64_t>{{0, 1}};
    spot = spot && ext_dimensions(1, 2, max_dim) == std::map<int, std::int64_t>{{1, 1}};
    spot = spot && ext_dimensions(2, 1, max_dim).empty();
    spot = spot && ext_dimensions(1, 3, max_dim) == std::map<int, std::int64_t>{{2, 1}};
    spot = spot && ext_dimensions(2, 3, max_dim) == std::map<int, std::int64_t>{{1, 6}};
    spot = spot && ext_dimensions(2, 2, max_dim) == std::map<int, std::int64_t>{{0, 2}};
    spot = spot && ext_lambda_dimensions(2, 3, max_dim) == std::map<int, std::int64_t>{{1, 3}};
    spot = spot && ext_lambda_lambda(2, 4, max_dim) == std::map<int, std::int64_t>{{2, 2}};
    c.check("spot_cohomology_tables", spot);

    bool surj = true;
    for (int q = 0; q <= 5 && surj; ++q)
        for (int l = 0; l <= q && surj; ++l) {
            const auto dims = ext_dimensions(l, q, max_dim);
            std::map<int, std::int64_t> want;
            if (l == 0) {
                if (q == 0) want[0] = 1;
            } else {
                want[q - l] = surjection_count(q, l);
            }
            if (dims != want)
                c.check("cohomology_counts_surjections", surj = false,
                        "l=" + std::to_string(l) + " q=" + std::to_string(q) + " got " +
                            dims_to_string(dims) + " want " + dims_to_string(want));
        }
    if (surj) c.check("cohomology_counts_surjections", true);

    bool stir = true;
    for (int q = 1; q <= 5 && stir; ++q)
        for (int j = 1; j <= q && stir; ++j) {
            const auto dims = ext_lambda_dimensions(j, q, max_dim);
            const std::map<int, std::int64_t> want{{q - j, stirling2(q, j)}};
            if (dims != want)
                c.check("exterior_source_counts_set_partitions", stir = false,
                        "j=" + std::to_string(j) + " q=" + std::to_string(q) + " got " +
                            dims_to_string(dims) + " want " + dims_to_string(want));
        }
    if (stir) c.check("exterior_source_counts_set_partitions", true);

    bool part = true;
    for (int m = 1; m <= 5 && part; ++m)
        for (int n = 1; n <= m && part; ++n) {
            const auto dims = ext_lambda_lambda(n, m, max_dim);
            const std::map<int, std::int64_t> want{{m - n, partitions_into_parts(m, n)}};
            if (dims != want)
                c.check("double_exterior_counts_partitions", part = false,
                        "n=" + std::to_string(n) + " m=" + std::to_string(m) + " got " +
                            dims_to_string(dims) + " want " + dims_to_string(want));
        }
    if (part) c.check("double_exterior_counts_partitions", true);

    bool mixed = true;
    for (int q = 2; q <= 5 && mixed; ++q)
        for (int l = 1; l < q && mixed; ++l)
            for (int j = 1; l + j <= q && mixed; ++j) {
                const OracleReport rep = oracle_report(ComplexSpec{q, l, j, false}, max_dim);
                if (!rep.ok()) {
                    std::string names;
                    for (const auto& [nm, ok] : rep.checks)
                        if (!ok) names += nm + " ";
                    c.check("mixed_sectors_count_blocks", mixed = false,
                            "q=" + std::to_string(q) + " l=" + std::to_string(l) + " j=" +
                                std::to_string(j) + " failing: " + names);
                }
            }
    if (mixed) c.check("mixed_sectors_count_blocks", true);

    bool reports = true;
    for (const ComplexSpec spec :
         {ComplexSpec{3, 1, 0, false}, ComplexSpec{4, 2, 0, false}, ComplexSpec{4, 0, 2, false},
          ComplexSpec{4, 0, 2, true}, ComplexSpec{5, 1, 0, false}}) {
        const OracleReport rep = oracle_report(spec, max_dim);
        if (!rep.ok()) reports = false;
    }
    c.check("structure_reports_pass", reports);

    bool guard = false;
    try {
        ext_dimensions(1, 9, max_dim);
    } catch (const std::runtime_error& ex) {
        guard = std::string(ex.what()).find("resource guard") != std::string::npos;
    }
    c.check("arity_guard_trips", guard);

    bool guard2 = false;
    try {
        ext_dimensions(3, 7, 10);
    } catch (const std::runtime_error& ex) {
        guard2 = std::string(ex.what()).find("resource guard") != std::string::npos;
    }
    c.check("level_size_guard_trips", guard2);
}

void suite_oracle_actions(Checker& c, std::mt19937&, int) {
    bool slot_formula = true;
    bool engine_formula = true;
    bool outputs_agree = true;
    bool adjacent = true;
    for (int q = 1; q <= 4; ++q)
        for (int l = 1; l <= q; ++l) {
            for (const auto& s : all_perms(q)) {
                bool wheel_free = true;
                const QMatrix oracle = action_on_cohomology(s, ActionSide::inputs, l, q);
                const QMatrix formula = formula_input_matrix(s, l, q);
                if (!(oracle == formula)) slot_formula = false;
                const QMatrix engine =
                    engine_action_matrix(s, ActionSide::inputs, l, q, &wheel_free);
                if (!wheel_free || !(engine == formula_input_matrix(s.inverse(), l, q)))
                    engine_formula = false;
            }
            for (const auto& t : all_perms(l)) {
                bool wheel_free = true;
                const QMatrix oracle = action_on_cohomology(t, ActionSide::outputs, l, q);
                const QMatrix engine =
                    engine_action_matrix(t, ActionSide::outputs, l, q, &wheel_free);
                if (!wheel_free || !(oracle == engine)) outputs_agree = false;
            }
            for (int a = 1; a < l; ++a) {
                const Permutation t = Permutation::transposition(l, a, a + 1);
                const QMatrix want = formula_output_adjacent(a, l, q);
                if (!(action_on_cohomology(t, ActionSide::outputs, l, q) == want)) adjacent = false;
                bool wheel_free = true;
                if (!(engine_action_matrix(t, ActionSide::outputs, l, q, &wheel_free) == want) ||
                    !wheel_free)
                    adjacent = false;
            }
        }
    c.check("resolution_slot_action_matches_closed_formula", slot_formula);
    c.check("engine_input_action_matches_closed_formula", engine_formula);
    c.check("output_actions_agree_between_routes", outputs_agree);
    c.check("adjacent_output_swap_pays_degree_sign", adjacent);

    bool law = true;
    for (const auto& p : all_perms(3))
        for (const auto& s : all_perms(3)) {
            const QMatrix mp = action_on_cohomology(p, ActionSide::inputs, 2, 3);
            const QMatrix ms = action_on_cohomology(s, ActionSide::inputs, 2, 3);
            const QMatrix mps = action_on_cohomology(p.then(s), ActionSide::inputs, 2, 3);
            if (!(mps == ms.multiply(mp))) law = false;
        }
    c.check("cohomology_action_is_a_left_group_action", law);
}

void suite_oracle_characters(Checker& c, std::mt19937&, int) {
    bool sectors = true;
    bool dims_sum = true;
    for (int q = 0; q <= 4; ++q)
        for (int l = 0; l <= q; ++l) {
            std::int64_t total = 0;
            for (int j = 0; l + j <= q; ++j) {
                const ExtSector sector(l, j, q);
                total += sector.dim();
                std::int64_t engine_dim = 0;
                for (const auto& d : enumerate_basis(q, l))
                    if (static_cast<int>(d.wheels.size()) == j) ++engine_dim;
                if (sector.dim() != engine_dim) dims_sum = false;
                for (const auto& stype : partitions_of(q))
                    for (const auto& ttype : partitions_of(l)) {
                        const Permutation s = cycle_type_representative(stype);
                        const Permutation t = cycle_type_representative(ttype);
                        const Rat oracle = sector.character(s, t);
                        const Rat engine = engine_sector_trace(s, t, l, j, q);
                        if (oracle != engine) {
                            sectors = false;
                            c.check("sector_characters_match_engine_traces", false,
                                    "q=" + std::to_string(q) + " l=" + std::to_string(l) +
                                        " j=" + std::to_string(j) + " oracle " +
                                        rat_to_string(oracle) + " engine " +
                                        rat_to_string(engine));
                        }
                    }
            }
            if (total != dimension(q, l)) dims_sum = false;
        }
    if (sectors) c.check("sector_characters_match_engine_traces", true);
    c.check("sector_dimensions_add_up", dims_sum);

    bool table = true;
    for (int q = 1; q <= 4; ++q) {
        const CharacterTable t = character_table(q, q);
        if (t.classes.empty() || t.classes.back() != std::vector<int>(static_cast<size_t>(q), 1))
            table = false;
        else if (t.totals.back() != Rat(static_cast<long>(bell(q))))
            table = false;
        for (size_t ci = 0; ci < t.classes.size(); ++ci) {
            const Permutation s = cycle_type_representative(t.classes[ci]);
            for (int j = 1; j <= t.max_j; ++j)
                if (t.values[ci][static_cast<size_t>(j - 1)] !=
                    engine_sector_trace(s, Permutation::identity(0), 0, j, q))
                    table = false;
        }
    }
    c.check("character_table_matches_engine_and_bell_numbers", table);

    bool conj = true;
    const Rat a = ext_sector_character(Permutation::from_cycles("(1 2 3)", 3),
                                       Permutation::identity(1), 1, 1, 3);
    const Rat b = ext_sector_character(Permutation::from_cycles("(1 3 2)", 3),
                                       Permutation::identity(1), 1, 1, 3);
    if (a != b) conj = false;
    c.check("characters_are_class_functions", conj);
}

void suite_yoneda(Checker& c, std::mt19937& rng, int) {
    const ExtClass pi2 = power_class(2);
    {
        const QMatrix co = yoneda_coordinates(yoneda_compose(surjection_class(2, 3, {1, 1, 2}), pi2));
        c.check("left_comb_composition_is_positive", co.rows() == 1 && co.at(0, 0) == 1,
                coords_to_string(co));
        const QMatrix co2 =
            yoneda_coordinates(yoneda_compose(surjection_class(2, 3, {1, 2, 2}), pi2));
        c.check("right_comb_composition_is_negative", co2.rows() == 1 && co2.at(0, 0) == -1,
                coords_to_string(co2));
    }

    bool units = true;
    const ExtClass x = surjection_class(2, 3, {1, 2, 1});
    if (yoneda_coordinates(yoneda_compose(identity_class(3), x)) != yoneda_coordinates(x))
        units = false;
    if (yoneda_coordinates(yoneda_compose(x, identity_class(2))) != yoneda_coordinates(x))
        units = false;
    c.check("identity_classes_are_units", units);

    bool engine_match = true;
    struct Triple {
        int l0, l1, q;
    };
    const std::vector<Triple> cases = {{1, 1, 2}, {1, 2, 3}, {2, 2, 3}, {1, 2, 4},
                                       {2, 3, 4}, {1, 3, 4}, {3, 3, 4}};
    for (const auto& t : cases) {
        const auto fxs = surjections(t.l1, t.l0);
        const auto fys = surjections(t.q, t.l1);
        for (int it = 0; it < 3; ++it) {
            const auto& fx = fxs[std::uniform_int_distribution<size_t>(0, fxs.size() - 1)(rng)];
            const auto& fy = fys[std::uniform_int_distribution<size_t>(0, fys.size() - 1)(rng)];
            const ExtClass composed =
                yoneda_compose(surjection_class(t.l1, t.q, fy), surjection_class(t.l0, t.l1, fx));
            const QMatrix co = yoneda_coordinates(composed);

            const Element ev = vertical(Element::basis(diagram_of_surjection(t.l1, t.l0, fx)),
                                        Element::basis(diagram_of_surjection(t.q, t.l1, fy)));
            const auto fs = surjections(t.q, t.l0);
            QMatrix want(static_cast<int>(fs.size()), 1);
            std::map<std::vector<int>, int> index;
            for (size_t i = 0; i < fs.size(); ++i) index[fs[i]] = static_cast<int>(i);
            bool wheel_free = true;
            for (const auto& [d, coeff] : ev.terms()) {
                if (!d.wheels.empty()) wheel_free = false;
                else want.at(index.at(image_vector(d)), 0) = coeff;
            }
            if (!wheel_free || !same_coordinates(co, want)) {
                engine_match = false;
                c.check("resolution_products_match_engine_composition", false,
                        "l0=" + std::to_string(t.l0) + " l1=" + std::to_string(t.l1) + " q=" +
                            std::to_string(t.q) + " got " + coords_to_string(co) + " want " +
                            coords_to_string(want));
            }
        }
    }
    if (engine_match) c.check("resolution_products_match_engine_composition", true);

    bool assoc = true;
    {
        const ExtClass y = surjection_class(2, 3, {1, 1, 2});
        const ExtClass z = surjection_class(3, 4, {1, 2, 3, 3});
        const QMatrix left = yoneda_coordinates(yoneda_compose(z, yoneda_compose(y, pi2)));
        const QMatrix right = yoneda_coordinates(yoneda_compose(yoneda_compose(z, y), pi2));
        if (!(left == right)) assoc = false;
    }
    c.check("composition_is_associative", assoc);

    bool linear = true;
    {
        const ExtClass x1 = surjection_class(2, 3, {1, 1, 2});
        const ExtClass x2 = surjection_class(2, 3, {1, 2, 2});
        const ExtClass y = surjection_class(3, 4, {1, 2, 3, 1});
        const ExtClass sum = ext_add(x1, ext_scale(Rat(2), x2));
        const QMatrix lhs = yoneda_coordinates(yoneda_compose(y, sum));
        QMatrix rhs = yoneda_coordinates(yoneda_compose(y, x1));
        const QMatrix second = yoneda_coordinates(yoneda_compose(y, x2));
        for (int i = 0; i < rhs.rows(); ++i) rhs.at(i, 0) += Rat(2) * second.at(i, 0);
        if (!(lhs == rhs)) linear = false;
    }
    c.check("composition_is_linear_in_the_lifted_class", linear);

    bool seeds = true;
    {
        const ExtClass y = surjection_class(2, 4, {1, 1, 2, 1});
        const QMatrix base = yoneda_coordinates(yoneda_compose(y, pi2, 0));
        for (unsigned seed : {17u, 255u})
            if (!(yoneda_coordinates(yoneda_compose(y, pi2, seed)) == base)) seeds = false;
    }
    c.check("lift_choice_does_not_change_the_class", seeds);

    bool throws = false;
    try {
        yoneda_compose(pi2, surjection_class(2, 3, {1, 1, 2}));
    } catch (const std::exception&) {
        throws = true;
    }
    c.check("degree_mismatch_is_rejected", throws);
}

void suite_matrix(Checker& c, std::mt19937& rng, int) {
    bool serial_parallel = true;
    bool rank_nullity = true;
    bool kernel = true;
    bool idem = true;
    for (int it = 0; it < 20; ++it) {
        const int rows = std::uniform_int_distribution<int>(1, 40)(rng);
        const int cols = std::uniform_int_distribution<int>(1, 40)(rng);
        QMatrix a = random_matrix(rng, rows, cols, 30);
        QMatrix s = a;
        QMatrix p = a;
        s.rref_serial();
        p.rref_parallel();
        if (!(s == p)) serial_parallel = false;
        QMatrix s2 = s;
        s2.rref_serial();
        if (!(s2 == s)) idem = false;
        const QMatrix k = a.kernel_basis();
        if (a.rank() + k.cols() != cols) rank_nullity = false;
        const QMatrix prod = a.multiply(k);
        if (!is_zero_matrix(prod)) kernel = false;
    }
    c.check("parallel_elimination_matches_serial", serial_parallel);
    c.check("rank_plus_nullity_is_width", rank_nullity);
    c.check("kernel_columns_are_annihilated", kernel);
    c.check("elimination_is_idempotent", idem);

    bool solve_ok = true;
    for (int it = 0; it < 10; ++it) {
        const int m = std::uniform_int_distribution<int>(2, 20)(rng);
        const int n = std::uniform_int_distribution<int>(2, 20)(rng);
        const QMatrix a = random_matrix(rng, m, n, 40);
        const QMatrix x = random_matrix(rng, n, 3, 60);
        const QMatrix b = a.multiply(x);
        QMatrix sol(0, 0);
        if (!a.solve(b, &sol)) {
            solve_ok = false;
        } else if (!(a.multiply(sol) == b)) {
            solve_ok = false;
        }
    }
    c.check("solver_reproduces_right_hand_sides", solve_ok);

    bool insolvable_detected = true;
    {
        QMatrix a(2, 1);
        a.at(0, 0) = 1;
        QMatrix b(2, 1);
        b.at(0, 0) = 1;
        b.at(1, 0) = 1;
        QMatrix sol(0, 0);
        if (a.solve(b, &sol)) insolvable_detected = false;
    }
    c.check("inconsistent_systems_are_rejected", insolvable_detected);

    bool indep = true;
    for (int it = 0; it < 10; ++it) {
        const QMatrix a = random_matrix(rng, 15, 25, 25);
        const auto cols = a.independent_columns();
        const QMatrix picked = a.columns(cols);
        if (picked.rank() != static_cast<int>(cols.size()) ||
            static_cast<int>(cols.size()) != a.rank())
            indep = false;
    }
    c.check("independent_columns_span_the_column_space", indep);

    bool assoc = true;
    for (int it = 0; it < 10; ++it) {
        const QMatrix a = random_matrix(rng, 8, 10, 50);
        const QMatrix b = random_matrix(rng, 10, 7, 50);
        const QMatrix d = random_matrix(rng, 7, 9, 50);
        if (!(a.multiply(b).multiply(d) == a.multiply(b.multiply(d)))) assoc = false;
    }
    c.check("multiplication_is_associative", assoc);
}

using SuiteFn = void (*)(Checker&, std::mt19937&, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"koszul", suite_koszul},
        {"dimensions", suite_dimensions},
        {"canonical", suite_canonical},
        {"quadratic", suite_quadratic},
        {"actions", suite_actions},
        {"contract", suite_contract},
        {"compose", suite_compose},
        {"classes", suite_classes},
        {"gentable", suite_gentable},
        {"roundtrip", suite_roundtrip},
        {"oracle-dims", suite_oracle_dims},
        {"oracle-actions", suite_oracle_actions},
        {"oracle-characters", suite_oracle_characters},
        {"yoneda", suite_yoneda},
        {"matrix", suite_matrix},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, unsigned seed, int max_dim) {
    for (const auto& [nm, fn] : registry()) {
        if (nm != name) continue;
        Checker c;
        std::mt19937 rng(seed);
        fn(c, rng, max_dim);
        for (auto& r : c.out) r.name = nm + "." + r.name;
        return c.out;
    }
    throw std::invalid_argument("unknown check suite: " + name);
}

std::vector<CheckResult> run_all(unsigned seed, int max_dim) {
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : registry()) {
        auto part = run_suite(name, seed, max_dim);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace propwheel
