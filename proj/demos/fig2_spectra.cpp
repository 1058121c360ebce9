// Writes the four resonant-drive conversion spectra (fig2a..fig2d) as CSV
// files into the current directory.

#include <fstream>
#include <iostream>

#include "spfc/csv.hpp"
#include "spfc/figures.hpp"

int main() {
    for (const char* name : {"fig2a", "fig2b", "fig2c", "fig2d"}) {
        const auto preset = spfc::figure_preset(name);
        const auto& spec = std::get<spfc::SweepSpec>(preset);
        const std::string path = std::string(name) + ".csv";
        std::ofstream out(path);
        spfc::emit_csv(spfc::run_sweep(spec), out, path);
        std::cout << path << ": |t1|^2 and |t2|^2 over delta_a in ["
                  << spec.start << ", " << spec.stop << "]\n";
    }
    return 0;
}
