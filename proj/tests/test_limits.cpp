#include <catch2/catch_amalgamated.hpp>

#include "ybnet/limits.hpp"

using namespace ybnet;

TEST_CASE("richardson extrapolation") {
    double order = 0.0;
    // exact geometric decay: order ~ 1, extrapolates to ~0
    auto [L1, d1] = richardson_extrapolate({{1e-1, 1e-1}, {1e-2, 1e-2}, {1e-3, 1e-3}}, &order);
    CHECK_FALSE(d1);
    CHECK(std::abs(order - 1.0) < 1e-12);
    CHECK(L1 < 1e-15);
    // constant errors: flagged, last value returned
    auto [L2, d2] = richardson_extrapolate({{1e-1, 0.5}, {1e-2, 0.5}, {1e-3, 0.5}}, &order);
    CHECK(d2);
    CHECK(L2 == 0.5);
    // synthetic quadratic decay
    auto [L3, d3] = richardson_extrapolate({{1e-1, 3e-2}, {1e-2, 3e-4}, {1e-3, 3e-6}}, &order);
    CHECK_FALSE(d3);
    CHECK(std::abs(order - 2.0) < 1e-10);
    CHECK(L3 < 1e-12);
}

TEST_CASE("self edge with a constant path has zero error") {
    ParamPoint pt;
    pt.beta = 0.4;
    LimitEdge e{"DY=>DY", AlgebraId::DY, AlgebraId::DY, LimitMode::core,
                [pt](double) { return pt; }, pt, "constant path"};
    const auto rep = limit_check(e, {1e-1, 1e-2, 1e-3}, 1e-6);
    for (const auto& [eps, err] : rep.samples) CHECK(err == 0.0);
    CHECK(rep.pass);  // all-zero errors count as converged
}

TEST_CASE("catalog of limit edges") {
    const auto edges = standard_edges();
    CHECK(edges.size() >= 18);
    int ratio_edges = 0;
    for (const auto& e : edges)
        if (e.mode == LimitMode::ratio) ++ratio_edges;
    CHECK(ratio_edges == 1);  // the oscillatory arrow is the only ratio edge
    // scaling paths satisfy the caption substitutions exactly
    for (const auto& e : edges) {
        if (e.name != "Aqp=>DYrV8") continue;
        const ParamPoint pt = e.path(1e-2);
        const cplx q = *pt.q;
        CHECK(std::abs(*pt.z - std::pow(q, cplx(0, 1) * *e.dst_params.beta / std::numbers::pi)) <
              1e-14);
        CHECK(std::abs(*pt.p - std::pow(q, 2.0 * *e.dst_params.r)) < 1e-14);
    }
}

TEST_CASE("representative arrows converge on the acceptance grid") {
    const std::vector<double> eps = {1e-1, 1e-2, 1e-3};
    for (const auto& e : standard_edges()) {
        if (e.name == "DYrV8=>DY" || e.name == "Bqpl=>UqLambda" || e.name == "DYrs=>DYrsMinusInf") {
            INFO(e.name);
            const auto rep = limit_check(e, eps, 1e-6);
            CHECK(rep.monotone);
            CHECK(rep.pass);
            for (std::size_t i = 0; i + 1 < rep.samples.size(); ++i)
                CHECK(rep.samples[i].second > rep.samples[i + 1].second);
        }
    }
}

TEST_CASE("non-monotone growth fails with diagnostics") {
    ParamPoint pt;
    pt.beta = 0.4;
    int calls = 0;
    LimitEdge e{"bad", AlgebraId::DY, AlgebraId::DY, LimitMode::core,
                [pt, &calls](double) {
                    ParamPoint p2 = pt;
                    p2.beta = 0.4 + 0.1 * (++calls);  // error grows along the list
                    return p2;
                },
                pt, "synthetic"};
    const auto rep = limit_check(e, {1e-1, 1e-2, 1e-3}, 1e-6);
    CHECK_FALSE(rep.monotone);
    CHECK_FALSE(rep.pass);
}
