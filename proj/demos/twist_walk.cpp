// Walk one edge of the twist network and print the residual.

#include <cstdio>

#include "ybnet/network.hpp"

int main() {
    using namespace ybnet;
    ParamPoint pt;
    pt.beta = 0.41;
    pt.r = 5.0;
    pt.s = 2.3;
    for (const TwistEdge& e : network()) {
        if (e.name() != "DYs->DYrs/F6") continue;
        const auto rep = check_twist_edge(e, pt, 1e-8);
        std::printf("%s residual = %.3e (%s)\n", e.name().c_str(), rep.residual,
                    rep.pass ? "pass" : "fail");
    }
    return 0;
}
