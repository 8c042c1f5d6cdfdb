// Walks the solvable tower of S3 over the twice-punctured projective line
// and prints the per-layer bookkeeping behind the realizability verdict.

#include <cstdio>

#include "picurve/realizability.hpp"

using namespace picurve;

int main() {
    CurveSignature sig{0, 2, 0};
    GroupPtr g = dihedral_group(3);
    TowerCertificate cert = plan_tower(sig, g);

    std::printf("group order %d, n_G = %d, bound 2g+r-1 = %d\n", g->order, cert.n_g, cert.bound);
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const TowerStepRecord& s = cert.steps[i];
        std::printf("step %zu: %s layer, prime %d, dim %d, h1 = %d, h2 = %d\n", i,
                    s.step_type.c_str(), s.layer_prime, s.dim_a, s.h1_dim, s.h2_dim);
    }
    std::printf("verdict: %s\n", cert.verdict ? "realizable" : "not realizable");

    TowerReport check = verify_tower(cert.tower);
    std::printf("tower self-check: %s (%zu entries)\n", check.all_pass ? "pass" : "FAIL",
                check.entries.size());
    return check.all_pass ? 0 : 1;
}
