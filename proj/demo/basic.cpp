// Walk through P_1 of SO(7) with trivial coefficients: list W^{P_1}, pick the
// self-dual representative at t = 1/2 and ask for the residual verdict.

#include <iostream>

#include "oddortho/render.hpp"
#include "oddortho/spectral.hpp"

int main() {
    using namespace oddortho;
    const RankContext ctx(3, 1);
    const auto lam = HighestWeight::zero(3);

    std::cout << render_reps(table_rows(ctx, lam), OutputFormat::Markdown) << "\n";

    for (const auto& c : family_half(ctx, lam)) {
        std::cout << "t = k/2 representative " << c.rep.pair.to_string() << ", l(w) = " << c.rep.length << "\n";
        const CuspidalDatum d(ctx, true, true, true, false, false);
        const Verdict v = verdict(d, lam, c.rep.pair, false);
        std::cout << "verdict: " << verdict_name(v.kind) << " in degrees " << v.window->to_string() << "\n";
    }
}
