#include "propwheel/expr.hpp"

#include <cctype>
#include <sstream>

#include "propwheel/permutation.hpp"
#include "propwheel/wheeled_prop.hpp"

namespace propwheel {

namespace {

ExprPtr node(MorphismExpr e) { return std::make_shared<const MorphismExpr>(std::move(e)); }

}  // namespace

bool MorphismExpr::operator==(const MorphismExpr& o) const {
    if (kind != o.kind || n != o.n || i != o.i || j != o.j || perm != o.perm || coeff != o.coeff ||
        args.size() != o.args.size())
        return false;
    for (size_t k = 0; k < args.size(); ++k)
        if (!(*args[k] == *o.args[k])) return false;
    return true;
}

ExprPtr make_mu(int n) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::mu;
    e.n = n;
    return node(std::move(e));
}

ExprPtr make_id(int n) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::id;
    e.n = n;
    return node(std::move(e));
}

ExprPtr make_wheel(int n) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::wheel;
    e.n = n;
    return node(std::move(e));
}

ExprPtr make_tensor(ExprPtr left, ExprPtr right) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::tensor;
    e.args = {std::move(left), std::move(right)};
    return node(std::move(e));
}

ExprPtr make_compose(ExprPtr upper, ExprPtr lower) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::compose;
    e.args = {std::move(upper), std::move(lower)};
    return node(std::move(e));
}

ExprPtr make_contract(int i, int j, ExprPtr inner) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::contract;
    e.i = i;
    e.j = j;
    e.args = {std::move(inner)};
    return node(std::move(e));
}

ExprPtr make_act_in(std::string perm, ExprPtr inner) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::act_in;
    e.perm = std::move(perm);
    e.args = {std::move(inner)};
    return node(std::move(e));
}

ExprPtr make_act_out(std::string perm, ExprPtr inner) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::act_out;
    e.perm = std::move(perm);
    e.args = {std::move(inner)};
    return node(std::move(e));
}

ExprPtr make_scale(Rat coeff, ExprPtr inner) {
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::scale;
    e.coeff = std::move(coeff);
    e.args = {std::move(inner)};
    return node(std::move(e));
}

ExprPtr make_sum(std::vector<ExprPtr> summands) {
    if (summands.empty()) throw std::invalid_argument("empty sum");
    if (summands.size() == 1) return summands.front();
    MorphismExpr e;
    e.kind = MorphismExpr::Kind::sum;
    e.args = std::move(summands);
    return node(std::move(e));
}

Biarity infer_biarity(const ExprPtr& e) {
    using K = MorphismExpr::Kind;
    switch (e->kind) {
        case K::mu:
            if (e->n < 1) throw std::runtime_error("mu needs at least one input");
            return {e->n, 1};
        case K::id:
            if (e->n < 0) throw std::runtime_error("id needs a non-negative arity");
            return {e->n, e->n};
        case K::wheel:
            if (e->n < 1) throw std::runtime_error("w needs at least one input");
            return {e->n, 0};
        case K::tensor: {
            const Biarity a = infer_biarity(e->args[0]);
            const Biarity b = infer_biarity(e->args[1]);
            return {a.q + b.q, a.l + b.l};
        }
        case K::compose: {
            const Biarity upper = infer_biarity(e->args[0]);
            const Biarity lower = infer_biarity(e->args[1]);
            if (upper.q != lower.l) {
                std::ostringstream msg;
                msg << "composition arity mismatch: left factor takes " << upper.q
                    << " inputs but right factor yields " << lower.l << " outputs";
                throw std::runtime_error(msg.str());
            }
            return {lower.q, upper.l};
        }
        case K::contract: {
            const Biarity a = infer_biarity(e->args[0]);
            if (e->i < 1 || e->i > a.q || e->j < 1 || e->j > a.l) {
                std::ostringstream msg;
                msg << "contraction xi(" << e->i << "," << e->j << ") out of range for biarity ("
                    << a.q << "," << a.l << ")";
                throw std::runtime_error(msg.str());
            }
            return {a.q - 1, a.l - 1};
        }
        case K::act_in: {
            const Biarity a = infer_biarity(e->args[0]);
            try {
                Permutation::from_cycles(e->perm, a.q);
            } catch (const std::invalid_argument& ex) {
                throw std::runtime_error(std::string("sin[") + e->perm + "]: " + ex.what());
            }
            return a;
        }
        case K::act_out: {
            const Biarity a = infer_biarity(e->args[0]);
            try {
                Permutation::from_cycles(e->perm, a.l);
            } catch (const std::invalid_argument& ex) {
                throw std::runtime_error(std::string("sout[") + e->perm + "]: " + ex.what());
            }
            return a;
        }
        case K::scale:
            return infer_biarity(e->args[0]);
        case K::sum: {
            const Biarity first = infer_biarity(e->args[0]);
            for (size_t k = 1; k < e->args.size(); ++k) {
                const Biarity other = infer_biarity(e->args[k]);
                if (!(other == first)) {
                    std::ostringstream msg;
                    msg << "sum of incompatible biarities (" << first.q << "," << first.l
                        << ") and (" << other.q << "," << other.l << ")";
                    throw std::runtime_error(msg.str());
                }
            }
            return first;
        }
    }
    throw std::runtime_error("corrupt expression node");
}

// ---------------------------------------------------------------------------
// Parsing.

ParseError::ParseError(const std::string& message, int line_, int column_)
    : std::runtime_error(message + " at line " + std::to_string(line_) + ", column " +
                         std::to_string(column_)),
      line(line_),
      column(column_) {}

namespace {

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    bool eof() {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // True when an identifier starts here.
    bool at_ident() { return std::isalpha(static_cast<unsigned char>(peek())); }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

    std::string ident() {
        skip_space();
        std::string s;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            s += text_[pos_];
            advance();
        }
        if (s.empty()) fail("expected a name");
        return s;
    }

    long long integer() {
        skip_space();
        if (!at_digit()) fail("expected a number");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1000000000LL) fail("number too large");
            advance();
        }
        return v;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    // Raw slice up to (not including) the stop character, consumed with it.
    std::string raw_until(char stop) {
        std::string s;
        while (pos_ < text_.size() && text_[pos_] != stop) {
            s += text_[pos_];
            advance();
        }
        if (pos_ >= text_.size()) fail(std::string("missing '") + stop + "'");
        advance();
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        size_t lead = 0;
        while (lead < s.size() && std::isspace(static_cast<unsigned char>(s[lead]))) ++lead;
        return s.substr(lead);
    }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(message, line_, col_); }

  private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (!lex_.eof()) lex_.fail("unexpected trailing input");
        return e;
    }

  private:
    Rat rational(bool negative) {
        Rat v(static_cast<long>(lex_.integer()));
        if (lex_.accept('/')) {
            const long den = static_cast<long>(lex_.integer());
            if (den == 0) lex_.fail("zero denominator");
            v /= Rat(den);
        }
        return negative ? -v : v;
    }

    ExprPtr expr() {
        std::vector<ExprPtr> summands{term()};
        for (;;) {
            if (lex_.accept('+')) {
                summands.push_back(term());
            } else if (lex_.peek() == '-') {
                lex_.expect('-');
                summands.push_back(negate(term()));
            } else {
                break;
            }
        }
        return make_sum(std::move(summands));
    }

    static ExprPtr negate(const ExprPtr& e) {
        if (e->kind == MorphismExpr::Kind::scale) return make_scale(-e->coeff, e->args[0]);
        return make_scale(Rat(-1), e);
    }

    ExprPtr term() {
        bool neg = false;
        if (lex_.peek() == '-') {
            lex_.expect('-');
            neg = true;
        }
        if (neg || lex_.at_digit()) {
            const Rat r = rational(neg);
            return make_scale(r, composition());
        }
        return composition();
    }

    ExprPtr composition() {
        std::vector<ExprPtr> parts{tensor_chain()};
        while (lex_.accept('.')) parts.push_back(tensor_chain());
        ExprPtr e = parts.back();
        for (size_t k = parts.size() - 1; k-- > 0;) e = make_compose(parts[k], e);
        return e;
    }

    ExprPtr tensor_chain() {
        ExprPtr e = factor();
        while (lex_.accept('*')) e = make_tensor(e, factor());
        return e;
    }

    ExprPtr factor() {
        if (lex_.accept('(')) {
            ExprPtr e = expr();
            lex_.expect(')');
            return e;
        }
        if (!lex_.at_ident()) lex_.fail("expected a generator, 'xi', 'sin', 'sout' or '('");
        const std::string name = lex_.ident();
        if (name == "mu" || name == "id" || name == "w") {
            lex_.expect('(');
            const int n = static_cast<int>(lex_.integer());
            lex_.expect(')');
            if (name == "mu") return make_mu(n);
            if (name == "id") return make_id(n);
            return make_wheel(n);
        }
        if (name == "xi") {
            lex_.expect('(');
            const int i = static_cast<int>(lex_.integer());
            lex_.expect(',');
            const int j = static_cast<int>(lex_.integer());
            lex_.expect(',');
            ExprPtr inner = expr();
            lex_.expect(')');
            return make_contract(i, j, std::move(inner));
        }
        if (name == "sin" || name == "sout") {
            lex_.expect('[');
            std::string perm = lex_.raw_until(']');
            ExprPtr inner = expr();
            if (name == "sin") return make_act_in(std::move(perm), std::move(inner));
            return make_act_out(std::move(perm), std::move(inner));
        }
        lex_.fail("unknown name '" + name + "'");
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing. Each helper emits at one grammar level and parenthesizes
// whatever does not fit there, so parsing the result restores the tree.

namespace {

void print_expr(std::ostream& os, const ExprPtr& e);
void print_factor(std::ostream& os, const ExprPtr& e);

bool is_kind(const ExprPtr& e, MorphismExpr::Kind k) { return e->kind == k; }

void print_tensor(std::ostream& os, const ExprPtr& e) {
    using K = MorphismExpr::Kind;
    if (is_kind(e, K::tensor)) {
        print_tensor(os, e->args[0]);
        os << " * ";
        print_factor(os, e->args[1]);
        return;
    }
    print_factor(os, e);
}

void print_comp(std::ostream& os, const ExprPtr& e) {
    using K = MorphismExpr::Kind;
    if (is_kind(e, K::compose)) {
        print_tensor(os, e->args[0]);
        os << " . ";
        print_comp(os, e->args[1]);
        return;
    }
    print_tensor(os, e);
}

void print_term(std::ostream& os, const ExprPtr& e) {
    using K = MorphismExpr::Kind;
    if (is_kind(e, K::scale)) {
        os << rat_to_string(e->coeff) << " ";
        const ExprPtr& inner = e->args[0];
        if (is_kind(inner, K::scale) || is_kind(inner, K::sum)) {
            os << "(";
            print_expr(os, inner);
            os << ")";
        } else {
            print_comp(os, inner);
        }
        return;
    }
    print_comp(os, e);
}

void print_summand(std::ostream& os, const ExprPtr& e, bool first) {
    using K = MorphismExpr::Kind;
    if (!first && is_kind(e, K::scale) && e->coeff < 0) {
        os << " - ";
        const Rat mag = -e->coeff;
        if (mag == 1) {
            const ExprPtr& inner = e->args[0];
            if (is_kind(inner, K::scale) || is_kind(inner, K::sum)) {
                os << "(";
                print_expr(os, inner);
                os << ")";
            } else {
                print_comp(os, inner);
            }
        } else {
            print_term(os, make_scale(mag, e->args[0]));
        }
        return;
    }
    if (!first) os << " + ";
    if (is_kind(e, K::sum)) {
        os << "(";
        print_expr(os, e);
        os << ")";
        return;
    }
    print_term(os, e);
}

void print_expr(std::ostream& os, const ExprPtr& e) {
    using K = MorphismExpr::Kind;
    if (is_kind(e, K::sum)) {
        for (size_t k = 0; k < e->args.size(); ++k) print_summand(os, e->args[k], k == 0);
        return;
    }
    print_summand(os, e, true);
}

void print_factor(std::ostream& os, const ExprPtr& e) {
    using K = MorphismExpr::Kind;
    switch (e->kind) {
        case K::mu:
            os << "mu(" << e->n << ")";
            return;
        case K::id:
            os << "id(" << e->n << ")";
            return;
        case K::wheel:
            os << "w(" << e->n << ")";
            return;
        case K::contract:
            os << "xi(" << e->i << "," << e->j << ", ";
            print_expr(os, e->args[0]);
            os << ")";
            return;
        case K::act_in:
            os << "(sin[" << e->perm << "] ";
            print_expr(os, e->args[0]);
            os << ")";
            return;
        case K::act_out:
            os << "(sout[" << e->perm << "] ";
            print_expr(os, e->args[0]);
            os << ")";
            return;
        default:
            os << "(";
            print_expr(os, e);
            os << ")";
            return;
    }
}

}  // namespace

std::string expression_to_string(const ExprPtr& e) {
    std::ostringstream os;
    print_expr(os, e);
    return os.str();
}

Element eval_expression(const ExprPtr& e) {
    infer_biarity(e);  // surface arity problems with readable messages first
    using K = MorphismExpr::Kind;
    switch (e->kind) {
        case K::mu:
            return mu(e->n);
        case K::id:
            return identity_element(e->n);
        case K::wheel:
            return wheel_generator(e->n);
        case K::tensor:
            return horizontal(eval_expression(e->args[0]), eval_expression(e->args[1]));
        case K::compose:
            return vertical(eval_expression(e->args[0]), eval_expression(e->args[1]));
        case K::contract:
            return contract(e->i, e->j, eval_expression(e->args[0]));
        case K::act_in: {
            Element inner = eval_expression(e->args[0]);
            return act_inputs(Permutation::from_cycles(e->perm, inner.q()), inner);
        }
        case K::act_out: {
            Element inner = eval_expression(e->args[0]);
            return act_outputs(Permutation::from_cycles(e->perm, inner.l()), inner);
        }
        case K::scale: {
            Element inner = eval_expression(e->args[0]);
            inner *= e->coeff;
            return inner;
        }
        case K::sum: {
            Element acc = eval_expression(e->args[0]);
            for (size_t k = 1; k < e->args.size(); ++k) acc += eval_expression(e->args[k]);
            return acc;
        }
    }
    throw std::runtime_error("corrupt expression node");
}

}  // namespace propwheel
