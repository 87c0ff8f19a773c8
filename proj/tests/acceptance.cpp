#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "propwheel/bar_complex.hpp"
#include "propwheel/checks.hpp"
#include "propwheel/combinatorics.hpp"
#include "propwheel/diagram.hpp"
#include "propwheel/expr.hpp"
#include "propwheel/ext_oracle.hpp"
#include "propwheel/generator_table.hpp"
#include "propwheel/serialize.hpp"
#include "propwheel/wheeled_prop.hpp"
#include "propwheel/yoneda.hpp"

using namespace propwheel;

namespace {

std::string g_detail;

bool suites_pass(const std::vector<std::string>& names) {
    bool ok = true;
    for (const std::string& name : names)
        for (const CheckResult& r : run_suite(name))
            if (!r.pass) {
                ok = false;
                g_detail += " [" + r.name + (r.detail.empty() ? "" : ": " + r.detail) + "]";
            }
    return ok;
}

Element random_element(std::mt19937& rng, int q, int l) {
    const auto basis = enumerate_basis(q, l);
    Element e = Element::zero(q, l);
    if (basis.empty()) return e;
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> count(1, 6);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        int n = num(rng);
        if (n == 0) n = 1;
        e.add(basis[pick(rng)], rat(n, den(rng)));
    }
    return e;
}

bool criterion_dimensions() {
    std::int64_t fact = 1;
    for (int q = 0; q <= 7; ++q) {
        if (q > 0) fact *= q;
        for (int l = 0; l <= q; ++l) {
            std::int64_t formula = 0;
            for (int m = l; m <= q; ++m)
                formula += binomial(q, m) * surjection_count(m, l) * bell(q - m);
            const std::int64_t dim = dimension(q, l);
            if (dim != formula) return false;
            if (dim != static_cast<std::int64_t>(enumerate_basis(q, l).size())) return false;
        }
        if (dimension(q, q) != fact) return false;
        if (dimension(q, 0) != bell(q)) return false;
    }
    return true;
}

bool criterion_oracle_dimensions() { return suites_pass({"oracle-dims"}); }

bool criterion_sign_actions() { return suites_pass({"oracle-actions", "oracle-characters"}); }

bool criterion_relation_and_classes() {
    if (!eval_expression(parse_expression("mu(2) . (mu(2)*id(1)) + mu(2) . (id(1)*mu(2))"))
             .is_zero())
        return false;
    for (int p = 1; p <= 6; ++p) {
        if (class_h(p) != mu(p + 1)) return false;
        for (int a = 1; a <= p; ++a) {
            const Permutation t = Permutation::transposition(p + 1, a, a + 1);
            if (act_inputs(t, class_h(p)) != Rat(-1) * class_h(p)) return false;
        }
        if (class_hbar(p) != contract(1, 1, class_h(p))) return false;
    }
    if (contract(2, 1, class_h(1)) != Rat(-1) * class_hbar(1)) return false;
    return suites_pass({"quadratic", "classes"});
}

bool criterion_axioms() {
    std::mt19937 rng(7);

    for (int it = 0; it < 200; ++it) {
        std::uniform_int_distribution<int> d2(0, 2);
        const int l0 = d2(rng);
        const int l1 = l0 + std::uniform_int_distribution<int>(0, 3 - l0)(rng);
        const int l2 = l1 + std::uniform_int_distribution<int>(0, std::min(2, 4 - l1))(rng);
        const int q = l2 + std::uniform_int_distribution<int>(0, std::min(2, 5 - l2))(rng);
        const Element a = random_element(rng, l1, l0);
        const Element b = random_element(rng, l2, l1);
        const Element f = random_element(rng, q, l2);
        if (vertical(a, vertical(b, f)) != vertical(vertical(a, b), f)) return false;
    }

    for (int it = 0; it < 200; ++it) {
        std::uniform_int_distribution<int> small(1, 2);
        const int qa = small(rng), qb = small(rng);
        const int la = std::uniform_int_distribution<int>(0, qa)(rng);
        const int lb = std::uniform_int_distribution<int>(0, qb)(rng);
        const int qc = qa + std::uniform_int_distribution<int>(0, 2)(rng);
        const int qd = qb + std::uniform_int_distribution<int>(0, 2)(rng);
        const Element a = random_element(rng, qa, la);
        const Element b = random_element(rng, qb, lb);
        const Element cc = random_element(rng, qc, qa);
        const Element dd = random_element(rng, qd, qb);
        const Element lhs = vertical(horizontal(a, b), horizontal(cc, dd));
        Element rhs = horizontal(vertical(a, cc), vertical(b, dd));
        if (((qb - lb) * (qc - qa)) % 2) rhs *= Rat(-1);
        if (lhs != rhs) return false;
    }

    for (int it = 0; it < 200; ++it) {
        const int l = std::uniform_int_distribution<int>(0, 4)(rng);
        const int q = l + std::uniform_int_distribution<int>(0, 5 - l)(rng);
        const Element e = random_element(rng, q, l);
        if (vertical(identity_element(l), e) != e) return false;
        if (vertical(e, identity_element(q)) != e) return false;
        if (horizontal(e, identity_element(0)) != e) return false;
        if (horizontal(identity_element(0), e) != e) return false;
    }

    for (int it = 0; it < 200; ++it) {
        const int q = std::uniform_int_distribution<int>(2, 5)(rng);
        const int l = std::uniform_int_distribution<int>(2, std::min(4, q))(rng);
        const Element e = random_element(rng, q, l);
        std::uniform_int_distribution<int> qi(1, q);
        std::uniform_int_distribution<int> li(1, l);
        const int i = qi(rng);
        const int j = li(rng);
        int k = qi(rng), m = li(rng);
        while (k == i) k = qi(rng);
        while (m == j) m = li(rng);
        const Element lhs =
            contract(i - (k < i ? 1 : 0), j - (m < j ? 1 : 0), contract(k, m, e));
        const Element rhs =
            contract(k - (i < k ? 1 : 0), m - (j < m ? 1 : 0), contract(i, j, e));
        if (lhs != rhs) return false;
    }

    return suites_pass({"quadratic", "compose", "contract", "actions"});
}

bool criterion_yoneda() {
    const ExtClass pi2 = power_class(2);
    const QMatrix left =
        yoneda_coordinates(yoneda_compose(surjection_class(2, 3, {1, 1, 2}), pi2));
    if (left.rows() != 1 || left.at(0, 0) != GeneratorTable::corolla_slot_sign(2, 2, 1))
        return false;
    const QMatrix right =
        yoneda_coordinates(yoneda_compose(surjection_class(2, 3, {1, 2, 2}), pi2));
    if (right.rows() != 1 || right.at(0, 0) != GeneratorTable::corolla_slot_sign(2, 2, 2))
        return false;
    const QMatrix up =
        yoneda_coordinates(yoneda_compose(surjection_class(3, 4, {1, 1, 2, 3}), power_class(3)));
    if (up.rows() != 1 || up.at(0, 0) != 1) return false;
    return suites_pass({"yoneda"});
}

bool criterion_bar_structure() {
    for (int l = 1; l <= 3; ++l) {
        for (int q = l; q <= 5; ++q) {
            const BarComplex b(ComplexSpec{q, l, 0, false});
            // The multilinear cochains stop exactly at level q - l: beyond it
            // no slot assignment is onto.
            if (b.top() != q - l) return false;
            if (b.levels() != q - l + 1) return false;
            for (int k = 0; k < b.levels(); ++k)
                if (b.level(k).dim() <= 0) return false;
            for (int k = 0; k + 2 < b.levels(); ++k)
                if (!is_zero_matrix(b.differential(k + 1).multiply(b.differential(k))))
                    return false;
        }
    }
    return true;
}

bool criterion_cli_roundtrips(const std::string& golden_path) {
    std::ifstream in(golden_path);
    if (!in) {
        g_detail += " [cannot open " + golden_path + "]";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != dims_table_text(5)) {
        g_detail += " [golden dimension table mismatch]";
        return false;
    }
    return suites_pass({"roundtrip"});
}

}  // namespace

int main(int argc, char** argv) {
    const std::string golden =
        argc > 1 ? argv[1] : std::string("tests/golden/dims_q5.txt");

    struct Criterion {
        std::string label;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria = {
        {"dimension formulas and basis counts up to arity 7", criterion_dimensions},
        {"bar oracle dimension sweeps up to arity 5", criterion_oracle_dimensions},
        {"symmetric group actions agree between engine and oracle", criterion_sign_actions},
        {"quadratic relation and distinguished classes", criterion_relation_and_classes},
        {"wheeled prop axioms on random and exhaustive inputs", criterion_axioms},
        {"resolution products match engine composition", criterion_yoneda},
        {"bar differentials square to zero and cochains vanish above the arity",
         criterion_bar_structure},
        {"expression, json, and golden table round trips",
         [&golden] { return criterion_cli_roundtrips(golden); }},
    };

    int passed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        g_detail.clear();
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].run();
        } catch (const std::exception& ex) {
            g_detail += std::string(" [exception: ") + ex.what() + "]";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << "criterion " << (i + 1) << " " << (ok ? "PASS" : "FAIL") << " ("
             << std::fixed << secs << " s): " << criteria[i].label << g_detail;
        std::cout << line.str() << std::endl;
        if (ok) ++passed;
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass" << std::endl;
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
