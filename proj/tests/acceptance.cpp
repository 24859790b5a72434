// Acceptance suite: one line per criterion, each backed by claims from the
// registry and held to a wall-clock limit.

#include <bfall/claims.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> claims;
    double limit_seconds;
};

const std::vector<Criterion> criteria = {
    {1, "K_p.K_q complete for lex/strong/co-normal, p,q <= 6", {"prop-lex-complete"}, 1.0},
    {2, "F(K_p box K_q) = {max(p,q)}, oracle cross-check, cyclic construction", {"prop-cart-fall"}, 60.0},
    {3, "crown(n): S_b = F = {2,n} for n = 3,4,5", {"thm-crown"}, 60.0},
    {4, "K_p x K_q: S_b = F = {p,q}; only row/column b-colorings", {"thm-tensor"}, 300.0},
    {5, "6 in F(K2 x K3 x K4)", {"ternary-fall-6"}, 120.0},
    {6, "lifting preserves hom / b-hom / surjective domatic", {"lem-lift-hom", "lem-lift-bhom", "lem-lift-domatic"},
        300.0},
    {7, "cartesian lift and direct projection give fall-colorings", {"thm-cart-lift", "thm-direct-proj"}, 60.0},
    {8, "61-vertex chordal graph: delta 6, omega 7, chi 7, F empty", {"counterexample"}, 300.0},
    {9, "F(C5) empty, F(C5[K2]) nonempty", {"obs-c5-lex"}, 120.0},
    {10, "solver equals oracle on 50 random graphs, k <= 4", {"oracle-equivalence"}, 300.0},
    {11, "b and fall bounds on random products", {"thm-main-bounds", "cor-direct-union"}, 600.0},
};

} // namespace

int main(int argc, char ** argv)
{
    bfall::claims::Context ctx;
    if (argc > 1)
        ctx.seed = std::strtoull(argv[1], nullptr, 10);

    int failed = 0;
    for (const auto & c : criteria) {
        auto report = bfall::claims::run_claims(c.claims, ctx, 1);
        double elapsed = 0.0;
        for (const auto & e : report.entries)
            elapsed += e.seconds;
        const bool in_time = elapsed <= c.limit_seconds;
        const bool pass = report.ok() && in_time;
        failed += ! pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.number << ". " << c.title << " (" << std::fixed
                  << std::setprecision(2) << elapsed << "s, limit " << c.limit_seconds << "s)\n";
        for (const auto & e : report.entries)
            std::cout << "       " << e.id << ": " << bfall::claims::to_string(e.status) << ", " << e.details << '\n';
        if (! in_time)
            std::cout << "       over the time limit\n";
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria FAILED") << '\n';
    return failed == 0 ? 0 : 1;
}
