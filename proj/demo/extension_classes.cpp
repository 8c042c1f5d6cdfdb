// Enumerates the H^2 classes of C2 acting trivially on F_2 and rebuilds the
// corresponding extensions: the zero class splits to C2 x C2, the nonzero
// class reassembles C4.

#include <cstdio>

#include "picurve/cohomology.hpp"
#include "picurve/isomorphism.hpp"

using namespace picurve;

int main() {
    GroupPtr c2 = cyclic_group(2);
    FlModule m = trivial_module(c2, 2, 1);

    CohomologyResult h2m = h2(c2, m);
    std::printf("dim H^2(C2, F_2) = %d\n", h2m.dimension);

    for (int bit = 0; bit < 2; ++bit) {
        Cocycle2 f = zero_cocycle(*c2, m.dim);
        if (bit) f[1][1] = {1};
        ExtensionData e = build_extension(c2, m, f);
        bool split = extension_class(e).is_zero();
        bool is_c4 = is_isomorphic(e.total, cyclic_group(4));
        std::printf("class %d: order %d, %s, %s\n", bit, e.total->order,
                    split ? "split" : "non-split", is_c4 ? "C4" : "C2 x C2");
    }
    return 0;
}
