#include <ostream>

#include "CLI11.hpp"
#include "qfourier_cli/commands.hpp"
#include "qfourier_cli/io.hpp"

namespace qfourier::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quaternion Fourier transforms on finite abelian groups", "qfourier"};
    app.require_subcommand(1);

    TransformOptions transform;
    auto* t = app.add_subcommand("transform", "Forward transform of a primal QSIG file");
    t->add_option("input", transform.input, "Primal QSIG file")->required();
    t->add_option("output", transform.output, "Spectrum QSIG file to write")->required();
    t->add_option("--kind", transform.kind, "rqft, sqft or lqft")
        ->check(CLI::IsMember({"rqft", "sqft", "lqft"}))
        ->capture_default_str();
    t->add_option("--mode", transform.mode, "fast or direct")
        ->check(CLI::IsMember({"fast", "direct"}))
        ->capture_default_str();
    t->add_option("--axes", transform.axes, "mu1 and mu2 as 8 numbers (w x y z w x y z)")->expected(8);

    TransformOptions inverse;
    auto* inv = app.add_subcommand("inverse", "Inverse transform of a spectrum QSIG file");
    inv->add_option("input", inverse.input, "Spectrum QSIG file")->required();
    inv->add_option("output", inverse.output, "Primal QSIG file to write")->required();
    inv->add_option("--kind", inverse.kind, "rqft or sqft")
        ->check(CLI::IsMember({"rqft", "sqft"}))
        ->capture_default_str();
    inv->add_option("--mode", inverse.mode, "fast or direct")
        ->check(CLI::IsMember({"fast", "direct"}))
        ->capture_default_str();
    inv->add_option("--axes", inverse.axes, "mu1 and mu2 as 8 numbers (w x y z w x y z)")->expected(8);

    SmoothOptions smooth;
    auto* sm = app.add_subcommand("smooth", "Convolve with an approximate-identity kernel");
    sm->add_option("input", smooth.input, "Primal QSIG file")->required();
    sm->add_option("output", smooth.output, "Primal QSIG file to write")->required();
    sm->add_option("--family", smooth.family, "dirichlet, fejer or poisson_geometric")->capture_default_str();
    sm->add_option("--level", smooth.level, "Kernel level (>= 0)")->capture_default_str();

    VerifyOptions verify;
    std::optional<double> tol;
    std::string json_path;
    auto* ver = app.add_subcommand("verify", "Randomized check of the transform identities");
    ver->add_option("--group", verify.group, "Axis group, e.g. 8 or 3x4")->capture_default_str();
    ver->add_option("--trials", verify.trials, "Random inputs per check")->capture_default_str();
    ver->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
    ver->add_option("--tol", tol, "Override every check's tolerance");
    ver->add_option("--json", json_path, "Also write the report as JSON to this path");
    ver->add_flag("--inject-fault", verify.inject_fault)->group("");

    std::string img_in;
    std::string img_out;
    auto* i2q = app.add_subcommand("img2q", "Square P6 PPM to primal QSIG (RGB -> i, j, k)");
    i2q->add_option("ppm", img_in)->required();
    i2q->add_option("qsig", img_out)->required();
    auto* q2i = app.add_subcommand("q2img", "Primal QSIG to P6 PPM (i, j, k -> RGB)");
    q2i->add_option("qsig", img_in)->required();
    q2i->add_option("ppm", img_out)->required();
    auto* spc = app.add_subcommand("spectrum", "Log-magnitude grayscale rendering of a spectrum");
    spc->add_option("qsig", img_in)->required();
    spc->add_option("ppm", img_out)->required();
    auto* dump = app.add_subcommand("dump", "Print a QSIG file as CSV");
    dump->add_option("qsig", img_in)->required();

    BenchOptions bench;
    auto* be = app.add_subcommand("bench", "Time fast and direct transforms on Z_N x Z_N");
    be->add_option("--sizes", bench.sizes, "Comma-separated N values")->delimiter(',');
    be->add_option("--kind", bench.kind, "rqft, sqft or lqft")
        ->check(CLI::IsMember({"rqft", "sqft", "lqft"}))
        ->capture_default_str();
    be->add_option("--repeats", bench.repeats, "Timed runs per entry")->capture_default_str();

    std::vector<char*> argv;
    std::vector<std::string> storage = args.empty() ? std::vector<std::string>{"qfourier"} : args;
    for (auto& a : storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*t) return cmd_transform(transform, out);
        if (*inv) return cmd_inverse(inverse, out);
        if (*sm) return cmd_smooth(smooth, out, err);
        if (*ver) {
            verify.tolerance = tol;
            return cmd_verify(verify, json_path, out);
        }
        if (*i2q) return cmd_img2q(img_in, img_out, out);
        if (*q2i) return cmd_q2img(img_in, img_out, out);
        if (*spc) return cmd_spectrum(img_in, img_out, out);
        if (*dump) return cmd_dump(img_in, out);
        if (*be) return cmd_bench(bench, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace qfourier::cli
