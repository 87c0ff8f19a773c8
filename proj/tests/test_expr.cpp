#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "propwheel/checks.hpp"
#include "propwheel/expr.hpp"
#include "propwheel/serialize.hpp"
#include "propwheel/wheeled_prop.hpp"

using namespace propwheel;

TEST_CASE("evaluation of the worked examples") {
    CHECK(eval_expression(parse_expression("mu(2) . (mu(2)*id(1)) + mu(2) . (id(1)*mu(2))"))
              .is_zero());
    CHECK(eval_expression(parse_expression("xi(1,1, mu(2))")) ==
          Rat(-1) * wheel_generator(1));
    CHECK(eval_expression(parse_expression("sin[(1 2)] mu(2)")) == Rat(-1) * mu(2));
    CHECK(eval_expression(parse_expression("2 mu(2) - mu(2) - mu(2)")).is_zero());
    CHECK(eval_expression(parse_expression("-3/2 w(2)")) == rat(-3, 2) * wheel_generator(2));
}

TEST_CASE("tensor binds tighter than composition") {
    const Element grouped = eval_expression(parse_expression("mu(2) . (mu(2)*id(1))"));
    const Element flat = eval_expression(parse_expression("mu(2) . mu(2)*id(1)"));
    CHECK(flat == grouped);
}

TEST_CASE("print and reparse is the identity") {
    for (const char* text : {
             "mu(3)",
             "2/3 mu(2) - w(1) * id(1)",
             "xi(2,1, mu(2) * mu(3))",
             "sin[(1 3)(2 4)] (mu(2) * mu(2))",
             "sout[(1 2)] (id(2) . id(2))",
             "mu(2) . (mu(2)*id(1)) + mu(2) . (id(1)*mu(2))",
         }) {
        const ExprPtr ast = parse_expression(text);
        const std::string printed = expression_to_string(ast);
        const ExprPtr back = parse_expression(printed);
        INFO(text, " -> ", printed);
        CHECK(*back == *ast);
        CHECK(eval_expression(back) == eval_expression(ast));
    }
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_expression("mu(2) +");
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.line == 1);
        CHECK(ex.column >= 7);
    }
    try {
        parse_expression("mu(2)\n + mu[2]");
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.line == 2);
    }
}

TEST_CASE("arity inference rejects broken wiring") {
    CHECK_THROWS_AS(infer_biarity(parse_expression("mu(2) . mu(2)")), std::runtime_error);
    CHECK_THROWS_AS(infer_biarity(parse_expression("mu(2) + mu(3)")), std::runtime_error);
    CHECK_THROWS_AS(infer_biarity(parse_expression("xi(3,1, mu(2))")), std::runtime_error);
    CHECK_THROWS_AS(infer_biarity(parse_expression("sin[(1 3)] mu(2)")), std::runtime_error);
    CHECK(infer_biarity(parse_expression("w(2) * mu(2)")) == Biarity{4, 1});
}

TEST_CASE("json and expression round trips") {
    Element e = rat(5, 3) * vertical(mu(2), horizontal(mu(2), identity_element(1)));
    e -= horizontal(contract(1, 1, mu(2)), mu(2));
    const Element back = element_from_json(element_to_json(e));
    CHECK(back == e);
    CHECK(element_to_json(back) == element_to_json(e));

    const Element reval = eval_expression(parse_expression(element_to_expression(e)));
    CHECK(reval == e);
}

TEST_CASE("roundtrip suite") {
    for (const CheckResult& r : run_suite("roundtrip")) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
