#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "topolevel/barcode.hpp"
#include "topolevel/bottleneck.hpp"
#include "topolevel/csv_io.hpp"
#include "topolevel/datagen.hpp"
#include "topolevel/diagram_io.hpp"
#include "topolevel/errors.hpp"
#include "topolevel/estimators.hpp"
#include "topolevel/fields.hpp"
#include "topolevel/kernels.hpp"

namespace tl = topolevel;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw tl::IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw tl::IoError("read failure on " + path);
    return ss.str();
}

// temp file plus rename, so readers never observe a partial file
void write_file_atomic(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::filesystem::path target(path);
    std::filesystem::path tmp(path + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw tl::IoError("cannot open " + tmp.string());
        out.write(content.data(),
                  static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out.good()) throw tl::IoError("write failure on " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        throw tl::IoError("cannot move " + tmp.string() + " to " + path + ": " +
                          ec.message());
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// flat key=value lines; '#' comments; keys mirror the long flags with
// '_' accepted for '-'
std::vector<std::string> config_tokens(const std::string& path) {
    std::string text = read_file(path);
    std::vector<std::string> tokens;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(
            pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw tl::ParseError(line_no, "config line is not key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw tl::ParseError(line_no, "config line has an empty key");
        for (char& c : key)
            if (c == '_') c = '-';
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

// Splice each config file's tokens in right after its --config flag, so
// flags later on the command line override the file.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        out.push_back(tok);
        std::string file;
        bool have = false;
        if (tok.rfind("--config=", 0) == 0) {
            file = tok.substr(9);
            have = true;
        } else if (tok == "--config" && i + 1 < argc) {
            file = argv[++i];
            out.push_back(file);
            have = true;
        }
        if (have)
            for (std::string& t : config_tokens(file))
                out.push_back(std::move(t));
    }
    return out;
}

struct InputOpts {
    std::string in_path;
    std::string family;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::optional<double> sigma;
    std::optional<double> wrap_sigma;
};

struct EstimOpts {
    std::string mode = "density";
    std::string kernel = "truncated_gaussian";
    double kernel_s = 0.3;
    std::optional<double> r;
    std::optional<double> epsilon;
    std::optional<double> p_max;
    std::optional<double> p_min;
    std::optional<double> y_max;
    std::optional<int> k_max;
    int threads = 1;
    std::uint64_t budget = tl::kDefaultSimplexBudget;
    std::string field = "rational";
};

tl::Family parse_family(const std::string& name) {
    if (name == "annulus_classification") return tl::Family::annulus_classification;
    if (name == "mixture_regression") return tl::Family::mixture_regression;
    if (name == "three_rings") return tl::Family::three_rings;
    if (name == "hierarchical_density") return tl::Family::hierarchical_density;
    if (name == "noisy_circle") return tl::Family::noisy_circle;
    if (name == "noisy_torus") return tl::Family::noisy_torus;
    throw tl::OutOfRangeError("unknown family " + name);
}

void add_input_options(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--in", in.in_path, "input CSV path, - for stdin");
    cmd->add_option("--family", in.family,
                    "generate the input instead of reading a file")
        ->check(CLI::IsMember({"annulus_classification", "mixture_regression",
                               "three_rings", "hierarchical_density",
                               "noisy_circle", "noisy_torus"}));
    cmd->add_option("--n", in.n, "sample size for --family");
    cmd->add_option("--seed", in.seed, "generation seed");
    cmd->add_option("--sigma", in.sigma, "noise scale for --family");
    cmd->add_option("--wrap-sigma", in.wrap_sigma,
                    "longitude spread of the torus family");
}

void add_estimator_options(CLI::App* cmd, EstimOpts& e, bool with_mode) {
    if (with_mode)
        cmd->add_option("--mode", e.mode, "estimator mode")
            ->check(CLI::IsMember({"density", "regression"}));
    cmd->add_option("--kernel", e.kernel, "kernel shape")
        ->check(CLI::IsMember({"truncated_gaussian", "bump"}));
    cmd->add_option("--kernel-s", e.kernel_s,
                    "width parameter of the truncated_gaussian kernel");
    cmd->add_option("--r", e.r,
                    "bandwidth; omitted, it follows the recommended rule");
    cmd->add_option("--epsilon", e.epsilon,
                    "tolerance; omitted, a fiftieth of the value range");
    cmd->add_option("--p-max", e.p_max, "density upper bound for the rule");
    cmd->add_option("--p-min", e.p_min, "density lower bound for the rule");
    cmd->add_option("--y-max", e.y_max, "response bound for the rule");
    cmd->add_option("--threads", e.threads, "worker threads");
    cmd->add_option("--budget-simplices", e.budget,
                    "construction cap on total simplexes");
    cmd->add_option("--field", e.field, "coefficient field")
        ->check(CLI::IsMember({"rational", "prime"}));
}

tl::LabeledSample load_input(const InputOpts& in) {
    if (!in.family.empty()) {
        tl::GenSpec spec;
        spec.family = parse_family(in.family);
        spec.n = in.n;
        spec.seed = in.seed;
        spec.sigma = in.sigma;
        spec.wrap_sigma = in.wrap_sigma;
        return tl::generate(spec);
    }
    if (in.in_path.empty())
        throw tl::OutOfRangeError("provide --in or --family");
    return tl::sample_from_csv(read_file(in.in_path));
}

tl::KernelSpec make_kernel(const EstimOpts& e, int d) {
    if (e.kernel == "bump") return tl::KernelSpec::bump(d);
    return tl::KernelSpec::truncated_gaussian(d, e.kernel_s);
}

tl::EstimatorMode parse_mode(const std::string& mode) {
    return mode == "regression" ? tl::EstimatorMode::regression
                                : tl::EstimatorMode::density;
}

tl::Field parse_field(const std::string& field) {
    return field == "prime" ? tl::Field::prime_field
                            : tl::Field::exact_rationals;
}

tl::EstimatorBounds make_bounds(const EstimOpts& e) {
    tl::EstimatorBounds b;
    b.p_max = e.p_max;
    b.p_min = e.p_min;
    b.y_max = e.y_max;
    return b;
}

// bandwidth: explicit --r wins; with --epsilon the bound-aware rule
// applies; with neither tolerance nor bounds the bounds-free rule
double resolve_r(const EstimOpts& e, const tl::LabeledSample& sample,
                 const tl::KernelSpec& kernel, tl::EstimatorMode mode) {
    if (e.r) {
        if (!(*e.r > 0.0))
            throw tl::OutOfRangeError("bandwidth must be positive");
        return *e.r;
    }
    if (e.epsilon)
        return tl::recommended_bandwidth(sample.size(), kernel, *e.epsilon,
                                         mode, make_bounds(e));
    return tl::recommended_bandwidth(sample.size(), kernel, 1.0, mode,
                                     tl::EstimatorBounds{});
}

double resolve_epsilon(const EstimOpts& e, const tl::LabeledSample& sample,
                       const tl::KernelSpec& kernel, tl::EstimatorMode mode,
                       double r) {
    if (e.epsilon) return *e.epsilon;
    return tl::default_epsilon(
        tl::estimator_values(sample, mode, kernel, r, e.threads));
}

ordered_json kernel_json(const tl::KernelSpec& k) {
    ordered_json j;
    j["shape"] = k.shape == tl::KernelShape::bump ? "bump" : "truncated_gaussian";
    if (k.shape == tl::KernelShape::truncated_gaussian) j["s"] = k.s;
    j["c_k"] = k.c_k;
    return j;
}

int run_generate(const InputOpts& in, const std::string& out_path) {
    if (in.family.empty())
        throw tl::OutOfRangeError("generate requires --family");
    write_file_atomic(out_path, tl::sample_to_csv(load_input(in)));
    return 0;
}

int run_estimate(const InputOpts& in, const EstimOpts& e, double L,
                 const std::string& out_path) {
    tl::LabeledSample sample = load_input(in);
    tl::KernelSpec kernel = make_kernel(e, sample.dimension());
    tl::EstimatorMode mode = parse_mode(e.mode);
    double r = resolve_r(e, sample, kernel, mode);
    double epsilon = resolve_epsilon(e, sample, kernel, mode, r);
    // --k-max names the highest reported degree
    int lib_k_max = e.k_max ? *e.k_max + 1 : sample.dimension();
    tl::LevelEstimate le = tl::estimate_level_homology(
        sample, L, epsilon, r, lib_k_max, mode, kernel, parse_field(e.field),
        e.threads, e.budget);

    ordered_json rep;
    rep["command"] = "estimate";
    rep["n"] = sample.size();
    rep["mode"] = e.mode;
    rep["kernel"] = kernel_json(kernel);
    rep["field"] = e.field;
    rep["level"] = le.level;
    rep["epsilon"] = le.epsilon;
    rep["r"] = le.r;
    rep["n_upper"] = le.n_upper;
    rep["n_lower"] = le.n_lower;
    rep["empty_level"] = le.empty_level;
    rep["betti_image"] = le.betti_image;
    rep["betti_upper"] = le.betti_upper;
    rep["betti_lower"] = le.betti_lower;
    rep["assumptions"] = le.assumptions;
    rep["warnings"] = le.warnings;
    write_file_atomic(out_path, rep.dump(2) + "\n");
    return 0;
}

int run_ph(const InputOpts& in, const EstimOpts& e, const std::string& out_path,
           const std::string& svg_path, double min_length) {
    tl::LabeledSample sample = load_input(in);
    tl::KernelSpec kernel = make_kernel(e, sample.dimension());
    tl::EstimatorMode mode = parse_mode(e.mode);
    double r = resolve_r(e, sample, kernel, mode);
    double epsilon = resolve_epsilon(e, sample, kernel, mode, r);
    int lib_k_max = e.k_max ? *e.k_max : 0;
    tl::PhEstimate pe = tl::estimate_ph_full(sample, epsilon, r, lib_k_max,
                                             mode, kernel, e.threads, e.budget);
    write_file_atomic(out_path, tl::diagrams_to_tsv(pe.diagrams));
    if (!svg_path.empty())
        write_file_atomic(svg_path,
                          tl::render_barcode(pe.diagrams, "svg", min_length));
    return 0;
}

int run_manifold(const InputOpts& in, const EstimOpts& e, int m,
                 const std::string& out_path) {
    tl::LabeledSample sample = load_input(in);
    tl::KernelSpec kernel = make_kernel(e, sample.dimension());
    tl::EstimatorMode mode = tl::EstimatorMode::density;
    double r = resolve_r(e, sample, kernel, mode);
    double epsilon = resolve_epsilon(e, sample, kernel, mode, r);
    int lib_k_max = e.k_max ? *e.k_max : 0;
    tl::ManifoldRecovery mr = tl::recover_manifold_homology(
        sample, epsilon, m, r, lib_k_max, kernel, parse_field(e.field),
        e.threads, e.budget);

    ordered_json rep;
    rep["command"] = "manifold";
    rep["n"] = sample.size();
    rep["kernel"] = kernel_json(kernel);
    rep["field"] = e.field;
    rep["m"] = mr.m;
    rep["epsilon"] = mr.epsilon;
    rep["r"] = mr.r;
    rep["i_star"] = mr.i_star;
    rep["level_used"] = mr.level_used;
    rep["betti"] = mr.betti;
    ordered_json trace = ordered_json::array();
    for (const tl::LevelProbe& p : mr.trace) {
        ordered_json row;
        row["level"] = p.level;
        row["betti_m"] = p.betti_m;
        trace.push_back(row);
    }
    rep["trace"] = trace;
    rep["assumptions"] = mr.assumptions;
    write_file_atomic(out_path, rep.dump(2) + "\n");
    return 0;
}

int run_bottleneck(const std::string& path1, const std::string& path2,
                   int degree) {
    std::vector<tl::PersistenceDiagram> ds1 =
        tl::diagrams_from_tsv(read_file(path1));
    std::vector<tl::PersistenceDiagram> ds2 =
        tl::diagrams_from_tsv(read_file(path2));
    double v = tl::bottleneck(tl::diagram_for_degree(ds1, degree),
                              tl::diagram_for_degree(ds2, degree));
    std::printf("%.12g\n", v);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"super-level-set homology estimation from sampled data"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    InputOpts in;
    EstimOpts est;
    std::string out_path;
    std::string svg_path;
    double min_length = 0.0;
    double level = 0.0;
    int degree_m = 0;
    int bn_degree = 0;
    std::string bn_path1, bn_path2;

    CLI::App* generate = app.add_subcommand("generate", "write a sample CSV");
    add_input_options(generate, in);
    generate->add_option("--out", out_path, "output CSV path")->required();
    generate->add_option("--config", "key=value parameter file");
    generate->callback([&] { run_generate(in, out_path); });

    CLI::App* estimate =
        app.add_subcommand("estimate", "image homology of one level pair");
    add_input_options(estimate, in);
    add_estimator_options(estimate, est, true);
    estimate->add_option("--L", level, "level to probe")->required();
    estimate->add_option("--k-max", est.k_max,
                         "highest reported degree (default d-1)");
    estimate->add_option("--out", out_path, "report path, - for stdout");
    estimate->add_option("--config", "key=value parameter file");
    estimate->callback([&] { run_estimate(in, est, level, out_path); });

    CLI::App* ph = app.add_subcommand(
        "ph", "persistent homology of the estimator's level ladder");
    add_input_options(ph, in);
    add_estimator_options(ph, est, true);
    ph->add_option("--k-max", est.k_max,
                   "largest simplex dimension (default d)");
    ph->add_option("--out", out_path, "diagram TSV path, - for stdout");
    ph->add_option("--svg", svg_path, "also render an SVG barcode here");
    ph->add_option("--min-length", min_length,
                   "suppress SVG bars shorter than this");
    ph->add_option("--config", "key=value parameter file");
    ph->callback([&] { run_ph(in, est, out_path, svg_path, min_length); });

    CLI::App* manifold = app.add_subcommand(
        "manifold", "manifold homology by the descending level scan");
    add_input_options(manifold, in);
    add_estimator_options(manifold, est, false);
    manifold->add_option("--m", degree_m, "intrinsic dimension")->required();
    manifold->add_option("--k-max", est.k_max,
                         "largest simplex dimension (default m+1)");
    manifold->add_option("--out", out_path, "report path, - for stdout");
    manifold->add_option("--config", "key=value parameter file");
    manifold->callback([&] { run_manifold(in, est, degree_m, out_path); });

    CLI::App* bn =
        app.add_subcommand("bottleneck", "distance between two diagram TSVs");
    bn->add_option("path1", bn_path1, "first diagram TSV")->required();
    bn->add_option("path2", bn_path2, "second diagram TSV")->required();
    bn->add_option("--degree", bn_degree, "diagram degree to compare");
    bn->callback([&] { run_bottleneck(bn_path1, bn_path2, bn_degree); });

    try {
        std::vector<std::string> args = expand_config(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const tl::CapacityExceededError& e) {
        std::cerr << "error: " << e.what() << " (budget " << e.budget << ")\n";
        return 3;
    } catch (const tl::NoStableLevelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const tl::ParseError& e) {
        std::cerr << "error: line " << e.line << ": " << e.what() << "\n";
        return 5;
    } catch (const tl::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const tl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
