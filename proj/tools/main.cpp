#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mumford2/io.hpp"

namespace {

using namespace mumford2;

void apply_precision(const Instance& inst) {
    // env var wins over the instance file
    if (const char* env = std::getenv("MUMFORD2_PRECISION"))
        set_default_precision(parse_rat(env));
    else if (inst.options.precision)
        set_default_precision(*inst.options.precision);
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

int cmd_classify(const std::string& file) {
    Instance inst = load_instance(file);
    apply_precision(inst);
    Classified c = classify(inst.group);
    std::cout << classify_report(inst, c);
    return 0;
}

int cmd_tropicalize(const std::string& file, int dim, const std::string& svg,
                    const std::string& out) {
    Instance inst = load_instance(file);
    apply_precision(inst);
    TropOptions opts;
    opts.grid_step = inst.options.grid_step;
    opts.join_edges = inst.options.join_edges;
    TropResult r = tropicalize(inst.group, opts);
    write_or_print(out, tropicalize_report(inst, r, dim));
    if (!svg.empty()) {
        const TropicalCurve& tc = dim == 3 ? r.curve3 : r.curve2;
        const FaithfulnessReport& rep = dim == 3 ? r.report3 : r.report2;
        write_or_print(svg, render_svg(tc, rep));
    }
    return 0;
}

int cmd_verify(const std::string& file, int words,
               const std::string& grid_str) {
    Instance inst = load_instance(file);
    apply_precision(inst);
    Rat grid =
        grid_str.empty() ? inst.options.grid_step : parse_rat(grid_str);
    VerifyOutcome v = run_verify(inst, words, grid);
    std::cout << v.report;
    return v.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropicalization of genus-2 Mumford curves"};
    app.require_subcommand(1);

    std::string file, svg, out, grid;
    int dim = 2, words = 3;

    CLI::App* classify = app.add_subcommand("classify", "skeleton type and period matrix");
    classify->add_option("file", file, "instance file")->required();

    CLI::App* trop = app.add_subcommand("tropicalize", "build and check the tropical curve");
    trop->add_option("file", file, "instance file")->required();
    trop->add_option("--dim", dim, "ambient dimension")->check(CLI::IsMember({2, 3}));
    trop->add_option("--svg", svg, "write an SVG rendering");
    trop->add_option("--out", out, "write the report to a file");

    CLI::App* verify = app.add_subcommand("verify", "run the exact property suites");
    verify->add_option("file", file, "instance file")->required();
    verify->add_option("--words", words, "word length for the u-function check");
    verify->add_option("--grid", grid, "grid step, e.g. 1/16");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(file);
        if (trop->parsed()) return cmd_tropicalize(file, dim, svg, out);
        if (verify->parsed()) return cmd_verify(file, words, grid);
    } catch (const mumford2::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const mumford2::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
