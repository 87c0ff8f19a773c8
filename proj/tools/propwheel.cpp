#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "propwheel/checks.hpp"
#include "propwheel/diagram.hpp"
#include "propwheel/expr.hpp"
#include "propwheel/ext_oracle.hpp"
#include "propwheel/serialize.hpp"

namespace {

using namespace propwheel;

std::string dims_map_text(const std::map<int, std::int64_t>& dims) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [deg, dim] : dims) {
        if (!first) os << ", ";
        first = false;
        os << deg << ": " << dim;
    }
    os << "}";
    return os.str();
}

std::string dims_map_json(const std::map<int, std::int64_t>& dims) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [deg, dim] : dims) out[std::to_string(deg)] = dim;
    return out.dump();
}

int cmd_dims(int max_q, int max_l, const std::string& format) {
    if (max_l < 0 || max_l >= max_q) {
        if (format == "json")
            std::cout << dims_table_json(max_q) << "\n";
        else
            std::cout << dims_table_text(max_q);
        return 0;
    }
    if (format == "json") {
        nlohmann::json out;
        out["max_q"] = max_q;
        out["max_l"] = max_l;
        nlohmann::json rows = nlohmann::json::array();
        for (int q = 0; q <= max_q; ++q) {
            nlohmann::json row;
            row["q"] = q;
            nlohmann::json ds = nlohmann::json::array();
            for (int l = 0; l <= std::min(q, max_l); ++l) ds.push_back(dimension(q, l));
            row["dims"] = std::move(ds);
            rows.push_back(std::move(row));
        }
        out["table"] = std::move(rows);
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "# dim E(q,l) for 0 <= l <= min(q, " << max_l << "), 0 <= q <= " << max_q << "\n";
    for (int q = 0; q <= max_q; ++q) {
        std::cout << "q=" << q << ":";
        for (int l = 0; l <= std::min(q, max_l); ++l) std::cout << " " << dimension(q, l);
        std::cout << "\n";
    }
    return 0;
}

int cmd_basis(int q, int l, const std::string& format) {
    const std::vector<WheeledDiagram> basis = enumerate_basis(q, l);
    if (format == "dot" || format == "json") {
        Element all = Element::zero(q, l);
        for (const WheeledDiagram& d : basis) all += Element::basis(d);
        if (format == "dot") {
            std::cout << element_to_dot(all);
        } else {
            nlohmann::json out;
            out["q"] = q;
            out["l"] = l;
            out["dim"] = basis.size();
            nlohmann::json ds = nlohmann::json::array();
            for (const WheeledDiagram& d : basis) ds.push_back(diagram_to_string(d));
            out["diagrams"] = std::move(ds);
            std::cout << out.dump() << "\n";
        }
        return 0;
    }
    std::cout << "# basis of E(" << q << "," << l << "), dim " << basis.size() << "\n";
    for (const WheeledDiagram& d : basis) std::cout << diagram_to_string(d) << "\n";
    return 0;
}

int cmd_eval(const std::string& text, const std::string& format) {
    const ExprPtr ast = parse_expression(text);
    const Element value = eval_expression(ast);
    if (format == "json")
        std::cout << element_to_json(value) << "\n";
    else if (format == "dot")
        std::cout << element_to_dot(value);
    else
        std::cout << element_to_string(value) << " : (" << value.q() << "," << value.l() << ")\n";
    return 0;
}

int cmd_check(const std::vector<std::string>& suites, int seed, int max_dim) {
    std::vector<CheckResult> results;
    if (suites.empty()) {
        results = run_all(seed, max_dim);
    } else {
        for (const std::string& s : suites) {
            std::vector<CheckResult> part = run_suite(s, seed, max_dim);
            results.insert(results.end(), part.begin(), part.end());
        }
    }
    int passed = 0;
    for (const CheckResult& r : results) {
        if (r.pass) {
            ++passed;
            std::cout << "PASS " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        }
    }
    std::cout << passed << "/" << results.size() << " checks passed (seed " << seed << ")\n";
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

std::string report_text(const OracleReport& r) {
    std::ostringstream os;
    os << "complex q=" << r.spec.q << " l=" << r.spec.l << " j=" << r.spec.j
       << (r.spec.lambda_target ? " lambda_target" : "") << "\n";
    os << "level dims:";
    for (int d : r.level_dims) os << " " << d;
    os << "\n";
    os << "cohomology: " << dims_map_text(r.dims) << "\n";
    for (const auto& [name, pass] : r.checks) os << (pass ? "PASS " : "FAIL ") << name << "\n";
    return os.str();
}

std::string character_table_text(const CharacterTable& t) {
    std::ostringstream os;
    os << "# traces of the slot action on the wheel sectors, q = " << t.q << "\n";
    os << "class";
    for (int j = 1; j <= t.max_j; ++j) os << "\tj=" << j;
    os << "\ttotal\n";
    for (size_t c = 0; c < t.classes.size(); ++c) {
        os << "[";
        for (size_t i = 0; i < t.classes[c].size(); ++i)
            os << (i ? " " : "") << t.classes[c][i];
        os << "]";
        for (const Rat& v : t.values[c]) os << "\t" << rat_to_string(v);
        os << "\t" << rat_to_string(t.totals[c]) << "\n";
    }
    return os.str();
}

std::string character_table_json(const CharacterTable& t) {
    nlohmann::json out;
    out["q"] = t.q;
    out["max_j"] = t.max_j;
    out["classes"] = t.classes;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& row : t.values) {
        nlohmann::json jr = nlohmann::json::array();
        for (const Rat& v : row) jr.push_back(rat_to_string(v));
        vals.push_back(std::move(jr));
    }
    out["values"] = std::move(vals);
    nlohmann::json tot = nlohmann::json::array();
    for (const Rat& v : t.totals) tot.push_back(rat_to_string(v));
    out["totals"] = std::move(tot);
    return out.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus in the wheeled PROP of diagram classes, with a bar-resolution cross-check"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
    int seed = 1;
    app.add_option("--seed", seed, "seed for randomized check suites")->capture_default_str();
    int max_dim = 10000;
    app.add_option("--max-dim", max_dim, "cap on a single cochain level dimension")
        ->capture_default_str();

    int dims_q = 0;
    int dims_l = -1;
    CLI::App* dims = app.add_subcommand("dims", "dimension table of E(q,l)");
    dims->fallthrough();
    dims->add_option("qmax", dims_q, "largest q")->required()->check(CLI::Range(0, 8));
    dims->add_option("lmax", dims_l, "largest l (default: qmax)")->check(CLI::Range(0, 8));

    int basis_q = 0;
    int basis_l = 0;
    CLI::App* basis = app.add_subcommand("basis", "canonical basis diagrams of E(q,l)");
    basis->fallthrough();
    basis->add_option("q", basis_q, "inputs")->required()->check(CLI::Range(0, 8));
    basis->add_option("l", basis_l, "outputs")->required()->check(CLI::Range(0, 8));

    std::vector<std::string> eval_args;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a morphism expression ('-' reads stdin)");
    eval->fallthrough();
    eval->add_option("expr", eval_args, "expression")->required();

    std::vector<std::string> check_suites;
    bool check_list = false;
    CLI::App* check = app.add_subcommand("check", "run invariant suites (default: all)");
    check->fallthrough();
    check->add_option("suite", check_suites, "suite names");
    check->add_flag("--list", check_list, "list suite names and exit");

    CLI::App* oracle = app.add_subcommand("oracle", "bar-resolution Ext computations");
    oracle->fallthrough();
    oracle->require_subcommand(1);
    int o_l = 0, o_j = 0, o_q = 0, o_n = 0, o_m = 0, o_maxj = 0;
    bool o_lambda_target = false;
    CLI::App* o_ext = oracle->add_subcommand("ext", "Ext dims, l-fold to q-fold tensor power");
    o_ext->fallthrough();
    o_ext->add_option("--l", o_l, "source tensor factors")->required();
    o_ext->add_option("--q", o_q, "target tensor factors")->required();
    CLI::App* o_lam = oracle->add_subcommand("lambda", "Ext dims, j-th exterior power source");
    o_lam->fallthrough();
    o_lam->add_option("--j", o_j, "source exterior power")->required();
    o_lam->add_option("--q", o_q, "target tensor factors")->required();
    CLI::App* o_ll = oracle->add_subcommand("lambda-lambda", "Ext dims, exterior powers both sides");
    o_ll->fallthrough();
    o_ll->add_option("--n", o_n, "source exterior power")->required();
    o_ll->add_option("--m", o_m, "target exterior power")->required();
    CLI::App* o_rep = oracle->add_subcommand("report", "structural report for one complex");
    o_rep->fallthrough();
    o_rep->add_option("--q", o_q, "target tensor factors")->required();
    o_rep->add_option("--l", o_l, "plain source factors");
    o_rep->add_option("--j", o_j, "antisymmetrized source factors");
    o_rep->add_flag("--lambda-target", o_lambda_target, "antisymmetrize the target");
    CLI::App* o_chars = oracle->add_subcommand("characters", "slot-action traces on the wheel sectors");
    o_chars->fallthrough();
    o_chars->add_option("--q", o_q, "target tensor factors")->required();
    o_chars->add_option("--max-j", o_maxj, "largest wheel count (default: q)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dims) {
            if (format == "dot") throw std::runtime_error("dot output applies to basis and eval");
            return cmd_dims(dims_q, dims_l, format);
        }
        if (*basis) return cmd_basis(basis_q, basis_l, format);
        if (*eval) {
            std::string text;
            if (eval_args.size() == 1 && eval_args[0] == "-") {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else {
                for (size_t i = 0; i < eval_args.size(); ++i)
                    text += (i ? " " : "") + eval_args[i];
            }
            return cmd_eval(text, format);
        }
        if (*check) {
            if (check_list) {
                for (const std::string& s : suite_names()) std::cout << s << "\n";
                return 0;
            }
            return cmd_check(check_suites, seed, max_dim);
        }
        if (*o_ext) {
            const auto d = ext_dimensions(o_l, o_q, max_dim);
            std::cout << (format == "json" ? dims_map_json(d) : dims_map_text(d)) << "\n";
            return 0;
        }
        if (*o_lam) {
            const auto d = ext_lambda_dimensions(o_j, o_q, max_dim);
            std::cout << (format == "json" ? dims_map_json(d) : dims_map_text(d)) << "\n";
            return 0;
        }
        if (*o_ll) {
            const auto d = ext_lambda_lambda(o_n, o_m, max_dim);
            std::cout << (format == "json" ? dims_map_json(d) : dims_map_text(d)) << "\n";
            return 0;
        }
        if (*o_rep) {
            const OracleReport r = oracle_report(ComplexSpec{o_q, o_l, o_j, o_lambda_target}, max_dim);
            std::cout << (format == "json" ? report_to_json(r) + "\n" : report_text(r));
            return r.ok() ? 0 : 1;
        }
        if (*o_chars) {
            const CharacterTable t = character_table(o_q, o_maxj > 0 ? o_maxj : o_q);
            std::cout << (format == "json" ? character_table_json(t) + "\n" : character_table_text(t));
            return 0;
        }
    } catch (const ParseError& ex) {
        std::cerr << "parse error at line " << ex.line << ", column " << ex.column << ": "
                  << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
