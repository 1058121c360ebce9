// Plans drive-laser settings for a few target output-frequency shifts and
// prints the resulting operating points.

#include <cstdio>

#include "spfc/design.hpp"
#include "spfc/scattering.hpp"

int main() {
    // toy diagram: splittings in units of Gamma2
    spfc::LevelDiagram diagram;
    diagram.omega_b = 0.0;
    diagram.omega_c = 5.0;
    diagram.omega_a = 100.0;
    diagram.omega_d = 102.0;
    diagram.omega_f = 90.0;

    const double gamma1 = 2.0, gamma2 = 1.0, delta_a = 3.0;

    std::printf("%8s %10s %10s %10s %10s %12s\n", "shift", "delta1", "delta2",
                "omega1", "omega2", "|t1| at plan");
    for (double shift : {-3.0, 0.0, 2.0, 5.0, 8.0}) {
        const auto plan =
            spfc::plan_conversion(shift, diagram, gamma1, gamma2, delta_a);
        if (!plan.feasible) {
            std::printf("%8.2f  infeasible in the scanned range\n", shift);
            continue;
        }
        spfc::SystemParams p;
        p.gamma1 = gamma1;
        p.gamma2 = gamma2;
        p.omega1 = plan.solution.omega1();
        p.omega2 = plan.solution.omega2();
        p.delta1 = plan.delta1;
        p.delta2 = plan.delta2;
        const auto pair = spfc::amplitudes(p, spfc::InputPhoton{delta_a});
        std::printf("%8.2f %10.4f %10.4f %10.4f %10.4f %12.3e\n", shift,
                    plan.delta1, plan.delta2, p.omega1, p.omega2,
                    std::abs(pair.t1));
    }
    return 0;
}
