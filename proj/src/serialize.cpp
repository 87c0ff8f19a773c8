#include "propwheel/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "propwheel/combinatorics.hpp"
#include "propwheel/permutation.hpp"
#include "propwheel/wheeled_prop.hpp"

namespace propwheel {

namespace {

using nlohmann::json;

json blocks_to_json(const std::vector<std::vector<int>>& blocks) {
    json out = json::array();
    for (const auto& b : blocks) out.push_back(b);
    return out;
}

std::vector<std::vector<int>> blocks_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw std::runtime_error(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& b : j) {
        if (!b.is_array()) throw std::runtime_error(std::string(what) + " must be an array of arrays");
        std::vector<int> block;
        for (const auto& x : b) {
            if (!x.is_number_integer()) throw std::runtime_error(std::string(what) + " entries must be integers");
            block.push_back(x.get<int>());
        }
        out.push_back(std::move(block));
    }
    return out;
}

}  // namespace

std::string element_to_json(const Element& e) {
    json out;
    out["q"] = e.q();
    out["l"] = e.l();
    json terms = json::array();
    for (const auto& [d, c] : e.terms()) {
        json t;
        t["coeff"] = rat_to_string(c);
        t["fibers"] = blocks_to_json(d.fibers);
        t["wheels"] = blocks_to_json(d.wheels);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out.dump();
}

Element element_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw std::runtime_error(std::string("JSON parse error: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("q") || !j.contains("l") || !j.contains("terms"))
        throw std::runtime_error("element JSON needs keys q, l, terms");
    if (!j["q"].is_number_integer() || !j["l"].is_number_integer())
        throw std::runtime_error("q and l must be integers");
    const int q = j["q"].get<int>();
    const int l = j["l"].get<int>();
    Element e(q, l);
    if (!j["terms"].is_array()) throw std::runtime_error("terms must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("fibers") || !t.contains("wheels"))
            throw std::runtime_error("term needs keys coeff, fibers, wheels");
        if (!t["coeff"].is_string()) throw std::runtime_error("coeff must be a string");
        const Rat c = rat_from_string(t["coeff"].get<std::string>());
        const auto fibers = blocks_from_json(t["fibers"], "fibers");
        const auto wheels = blocks_from_json(t["wheels"], "wheels");
        const Canonical canon = canonical_form(q, l, fibers, wheels);
        if (canon.sign != 0) e.add(canon.diagram, c * canon.sign);
    }
    return e;
}

std::string element_to_dot(const Element& e) {
    std::ostringstream os;
    os << "digraph element {\n";
    os << "  rankdir=BT;\n";
    if (e.is_zero()) {
        os << "  zero [shape=plaintext, label=\"0\"];\n";
    }
    int term = 0;
    for (const auto& [d, c] : e.terms()) {
        const std::string p = "t" + std::to_string(term);
        os << "  subgraph cluster_" << term << " {\n";
        os << "    label=\"" << rat_to_string(c) << "\";\n";
        for (int x = 1; x <= d.q; ++x)
            os << "    " << p << "_in" << x << " [shape=plaintext, label=\"" << x << "\"];\n";
        for (size_t t = 0; t < d.fibers.size(); ++t) {
            const std::string v = p + "_c" + std::to_string(t + 1);
            os << "    " << v << " [shape=circle, label=\"\"];\n";
            os << "    " << p << "_out" << (t + 1) << " [shape=plaintext, label=\"out " << (t + 1)
               << "\"];\n";
            for (int x : d.fibers[t]) os << "    " << p << "_in" << x << " -> " << v << ";\n";
            os << "    " << v << " -> " << p << "_out" << (t + 1) << ";\n";
        }
        for (size_t w = 0; w < d.wheels.size(); ++w) {
            const std::string v = p + "_w" + std::to_string(w + 1);
            os << "    " << v << " [shape=doublecircle, label=\"\"];\n";
            for (int x : d.wheels[w]) os << "    " << p << "_in" << x << " -> " << v << ";\n";
            os << "    " << v << " -> " << v << ";\n";
        }
        os << "  }\n";
        ++term;
    }
    os << "}\n";
    return os.str();
}

std::string diagram_to_string(const WheeledDiagram& d) {
    std::ostringstream os;
    for (const auto& f : d.fibers) {
        os << "(";
        for (size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << ")";
    }
    for (const auto& w : d.wheels) {
        os << "[";
        for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
        os << "]";
    }
    if (d.fibers.empty() && d.wheels.empty()) os << "()";
    return os.str();
}

std::string element_to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : e.terms()) {
        Rat mag = c;
        if (first) {
            if (c < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            if (c < 0) {
                os << " - ";
                mag = -c;
            } else {
                os << " + ";
            }
        }
        if (mag != 1) os << rat_to_string(mag) << " ";
        os << diagram_to_string(d);
        first = false;
    }
    return os.str();
}

std::string element_to_expression(const Element& e) {
    const int q = e.q();
    const int l = e.l();
    if (e.is_zero()) {
        const auto basis = enumerate_basis(q, l);
        if (basis.empty())
            throw std::invalid_argument("no expression denotes the zero of an empty biarity");
        Element unit = Element::basis(basis.front());
        return "0 " + element_to_expression(unit);
    }

    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : e.terms()) {
        Rat mag = c;
        if (first) {
            if (c < 0) mag = -c;
        } else {
            mag = (c < 0) ? -c : c;
        }

        std::ostringstream base;
        std::vector<int> images(static_cast<size_t>(q), 0);
        int pos = 0;
        bool first_factor = true;
        for (const auto& f : d.fibers) {
            if (!first_factor) base << " * ";
            base << "mu(" << f.size() << ")";
            for (int x : f) images[static_cast<size_t>(x) - 1] = ++pos;
            first_factor = false;
        }
        for (const auto& w : d.wheels) {
            if (!first_factor) base << " * ";
            base << "w(" << w.size() << ")";
            for (int x : w) images[static_cast<size_t>(x) - 1] = ++pos;
            first_factor = false;
        }
        if (first_factor) base << "id(0)";

        std::string body = base.str();
        if (q > 0) {
            const Permutation sigma(images);
            if (!(sigma == Permutation::identity(q)))
                body = "(sin[" + sigma.to_cycles() + "] " + body + ")";
        }

        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) {
            os << rat_to_string(mag) << " " << body;
        } else if ((first && c < 0)) {
            os << "1 " << body;
        } else {
            os << body;
        }
        first = false;
    }
    return os.str();
}

std::string report_to_json(const OracleReport& r) {
    json out;
    out["l"] = r.spec.l;
    out["q"] = r.spec.q;
    out["j"] = r.spec.j;
    out["lambda_target"] = r.spec.lambda_target;
    json dims = json::object();
    for (const auto& [deg, dim] : r.dims) dims[std::to_string(deg)] = dim;
    out["dims"] = std::move(dims);
    json checks = json::array();
    for (const auto& [name, pass] : r.checks) {
        json c;
        c["name"] = name;
        c["pass"] = pass;
        checks.push_back(std::move(c));
    }
    out["checks"] = std::move(checks);
    return out.dump();
}

std::string dims_table_text(int max_q) {
    std::ostringstream os;
    os << "# dim E(q,l) for 0 <= l <= q <= " << max_q << "\n";
    for (int q = 0; q <= max_q; ++q) {
        os << "q=" << q << ":";
        for (int l = 0; l <= q; ++l) os << " " << dimension(q, l);
        os << "\n";
    }
    return os.str();
}

std::string dims_table_json(int max_q) {
    json out;
    out["max_q"] = max_q;
    json rows = json::array();
    for (int q = 0; q <= max_q; ++q) {
        json row;
        row["q"] = q;
        json ds = json::array();
        for (int l = 0; l <= q; ++l) ds.push_back(dimension(q, l));
        row["dims"] = std::move(ds);
        rows.push_back(std::move(row));
    }
    out["table"] = std::move(rows);
    return out.dump();
}

}  // namespace propwheel
