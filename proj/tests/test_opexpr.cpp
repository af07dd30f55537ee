#include <doctest.h>

#include "segre/opexpr.hpp"
#include "support/generators.hpp"

using namespace segre;

namespace {
const OpConfig kRaw{DPoly::var(), NormalizeOptions::raw(), 1};
}

TEST_SUITE_BEGIN("opexpr");

TEST_CASE("composition applies right to left") {
    const Element e = Element::s_class(4, 2);
    const OpExpr expr = OpExpr::compose({OpExpr::base(0), OpExpr::base(0)});
    CHECK(apply_op(expr, e, kRaw) == delta0(delta0(e, kRaw), kRaw));

    const OpExpr mixed = OpExpr::compose({OpExpr::base(2), OpExpr::base(0)});
    CHECK(apply_op(mixed, e, kRaw) == delta2(delta0(e, kRaw), kRaw));
}

TEST_CASE("empty sum and identity composition") {
    const Element e = Element::s_class(3, 2);
    CHECK(apply_op(OpExpr::sum({}), e, kRaw).empty());
    CHECK(apply_op(OpExpr::compose({}), e, kRaw) == e);
}

TEST_CASE("Ad is the commutator") {
    testing::MonomialGen gen;
    for (int trial = 0; trial < 50; ++trial) {
        Element b(gen.uniform(2, 5));
        b.add_term(gen.random_monomial(3, 5, 4, 1), gen.random_dpoly(2, 5));
        const Element via_expr = apply_op(OpExpr::ad(0, OpExpr::base(2)), b, kRaw);
        Element manual = delta0(delta2(b, kRaw), kRaw);
        manual.accumulate(-delta2(delta0(b, kRaw), kRaw));
        CHECK(via_expr == manual);
    }
}

TEST_CASE("chain sums enumerate index tuples") {
    CHECK(sum_over_chains(1, 2).render() == "d2");
    CHECK(sum_over_chains(2, 1, {0, 1}).render() == "d0∘d1 + d1∘d0");
    CHECK(sum_over_chains(2, 5).render() == "d2∘d3 + d3∘d2");
    CHECK(sum_over_chains(2, 7).parts().empty());  // above the largest index sum
    CHECK(sum_over_chains(0, 0).render() == "id");
    CHECK(sum_over_chains(0, 1).render() == "0");
    // weight-k sum over the full alphabet: compositions of 3 into 3 parts
    CHECK(sum_over_chains(3, 3).parts().size() == 10);
}

TEST_CASE("chain sums apply like hand-built chains") {
    const Element e = Element::s_class(5, 3);
    const Element lhs = apply_op(sum_over_chains(2, 1, {0, 1}), e, kRaw);
    Element rhs = delta0(delta1(e, kRaw), kRaw);
    rhs.accumulate(delta1(delta0(e, kRaw), kRaw));
    CHECK(lhs == rhs);
}

TEST_CASE("rendering") {
    CHECK(OpExpr::base(3).render() == "d3");
    CHECK(OpExpr::ad(0, OpExpr::ad(1, OpExpr::base(2))).render() ==
          "Ad(d0, Ad(d1, d2))");
    CHECK(OpExpr::compose({OpExpr::base(3), OpExpr::base(1)}).render() == "d3∘d1");
    const OpExpr sum = OpExpr::sum({OpExpr::ad(0, OpExpr::ad(1, OpExpr::base(2))),
                                    OpExpr::compose({OpExpr::base(3), OpExpr::base(1)})});
    CHECK(sum.render() == "Ad(d0, Ad(d1, d2)) + d3∘d1");
    // sums nested in compositions get parentheses
    CHECK(OpExpr::compose({OpExpr::base(2), sum_over_chains(2, 7)}).render() == "d2∘(0)");
}

TEST_CASE("ad helpers") {
    CHECK(ad_power(1, 2, OpExpr::base(2)).render() == "Ad(d1, Ad(d1, d2))");
    CHECK(ad_wrap({0, 1}, OpExpr::base(3)).render() == "Ad(d0, Ad(d1, d3))");
    CHECK(xi_operator(0).render() == "Ad(d0, d2)");
    CHECK(xi_operator(1).render() == "Ad(d0, Ad(d1, d2)) + Ad(d0, Ad(d0, d3))");
}

TEST_CASE("base index validation") {
    CHECK_THROWS_AS(OpExpr::base(4), std::invalid_argument);
    CHECK_THROWS_AS(OpExpr::ad(-1, OpExpr::base(0)), std::invalid_argument);
}

TEST_SUITE_END();
