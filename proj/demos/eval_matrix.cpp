// Evaluate a couple of catalog entries and print them.

#include <cstdio>

#include "ybnet/rmatrix.hpp"

int main() {
    using namespace ybnet;
    ParamPoint pt;
    pt.beta = 0.4;
    pt.r = 5.0;
    pt.s = 2.3;
    const auto val = eval_r(AlgebraId::DYrs, pt);
    std::printf("DYrs at beta=0.4 r=5 s=2.3\nscalar_norm = %g%+gi\n", val.scalar_norm.real(),
                val.scalar_norm.imag());
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j)
            std::printf("  %+.6f%+.6fi", val.core(i, j).real(), val.core(i, j).imag());
        std::printf("\n");
    }
    return 0;
}
