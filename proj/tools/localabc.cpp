#include <iostream>

#include <CLI11.hpp>

#include "localabc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Verify local abc-type inequalities for polynomial data"};
    std::string path;
    localabc::RunFlags flags;
    app.add_option("problem", path, "Problem description (JSON)")->required();
    app.add_option("--samples", flags.samples, "Boundary samples (power of two, >= 64)");
    app.add_option("--radial", flags.radial, "Radial Gauss nodes");
    app.add_option("--tol", flags.tol, "Relative tolerance for boundary refinement");
    app.add_option("--alpha", flags.alpha, "D_alpha exponent");
    app.add_option("--seed", flags.seed, "Seed for random families");
    app.add_option("--csv", flags.csv_path, "Write the mode's CSV series to this path");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : localabc::kExitInputError;
    }
    return localabc::run_file(path, flags, std::cout, std::cerr);
}
