#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "framekit/errors.hpp"
#include "framekit/frame.hpp"
#include "framekit/operator_frame.hpp"
#include "framekit/serialize.hpp"
#include "framekit/tolerances.hpp"
#include "framekit/verify.hpp"

namespace {

using namespace framekit;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_not_a_frame = 3;
constexpr int exit_size_cap = 4;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string flag(bool b) {
    return b ? "yes" : "no";
}

struct Options {
    std::uint64_t seed = 1;
    std::string output;
    std::string format = "text";
    bool machine() const { return format == "machine"; }
};

void write_or_print(const Options& opt, const std::string& text) {
    if (opt.output.empty())
        std::cout << text;
    else
        save_file(opt.output, text);
}

int cmd_analyze(const Options& opt, const std::string& path) {
    const ParsedFile file = load_file(path);
    if (std::holds_alternative<CVector>(file)) {
        std::cerr << "analyze: \"" << path << "\" holds a vector, not a frame\n";
        return exit_usage;
    }
    std::string kind, dims;
    std::size_t count = 0;
    FrameBounds b;
    if (const Frame* f = std::get_if<Frame>(&file)) {
        kind = "frame";
        dims = "  \"dim\": " + std::to_string(f->dim());
        count = f->count();
        b = frame_bounds(*f);
    } else {
        const OperatorFrame& of = std::get<OperatorFrame>(file);
        kind = "operator_frame";
        dims = "  \"dim_h\": " + std::to_string(of.dim_h()) + ",\n  \"dim_k\": " +
               std::to_string(of.dim_k());
        count = of.count();
        b = op_frame_bounds(of);
    }
    std::string out;
    if (opt.machine()) {
        out = "{\n  \"schema_version\": 1,\n  \"kind\": \"analysis\",\n  \"input_kind\": \"" +
              kind + "\",\n" + dims + ",\n  \"count\": " + std::to_string(count) +
              ",\n  \"lower\": " + num(b.lower) + ",\n  \"upper\": " + num(b.upper) +
              ",\n  \"is_frame\": " + (b.is_frame ? "true" : "false") +
              ",\n  \"is_tight\": " + (b.is_tight ? "true" : "false") +
              ",\n  \"is_normalized_tight\": " + (b.is_normalized_tight ? "true" : "false") +
              "\n}\n";
    } else {
        out = "kind: " + kind + "\n";
        if (const Frame* f = std::get_if<Frame>(&file))
            out += "dim: " + std::to_string(f->dim()) + "\n";
        else {
            const OperatorFrame& of = std::get<OperatorFrame>(file);
            out += "dim_h: " + std::to_string(of.dim_h()) + "\ndim_k: " +
                   std::to_string(of.dim_k()) + "\n";
        }
        out += "count: " + std::to_string(count) + "\n";
        out += "bounds: " + num(b.lower) + " " + num(b.upper) + "\n";
        out += "frame: " + flag(b.is_frame) +
               (b.is_frame ? "" : " (lower bound " + num(b.lower) + ")") + "\n";
        out += "tight: " + flag(b.is_tight) + "\n";
        out += "normalized tight: " + flag(b.is_normalized_tight) + "\n";
    }
    write_or_print(opt, out);
    return exit_ok;
}

int cmd_dual(const Options& opt, const std::string& path) {
    if (opt.output.empty()) {
        std::cerr << "dual: --output is required\n";
        return exit_usage;
    }
    const ParsedFile file = load_file(path);
    if (std::holds_alternative<CVector>(file)) {
        std::cerr << "dual: \"" << path << "\" holds a vector, not a frame\n";
        return exit_usage;
    }
    FrameBounds db;
    if (const Frame* f = std::get_if<Frame>(&file)) {
        const Frame d = canonical_dual(*f);
        db = frame_bounds(d);
        save_file(opt.output, to_json(d));
    } else {
        const OperatorFrame d = op_canonical_dual(std::get<OperatorFrame>(file));
        db = op_frame_bounds(d);
        save_file(opt.output, to_json(d));
    }
    std::cout << "dual bounds: " << num(db.lower) << " " << num(db.upper) << "\n";
    return exit_ok;
}

int cmd_tensor(const Options& opt, const std::vector<std::string>& paths) {
    std::vector<Frame> factors;
    double lo = 1.0, hi = 1.0;
    for (const std::string& p : paths) {
        ParsedFile file = load_file(p);
        Frame* f = std::get_if<Frame>(&file);
        if (!f) {
            std::cerr << "tensor: \"" << p << "\" is not a frame file\n";
            return exit_usage;
        }
        const FrameBounds b = frame_bounds(*f);
        lo *= b.lower;
        hi *= b.upper;
        factors.push_back(std::move(*f));
    }
    const Frame product = tensor_frame(factors);
    const FrameBounds b = frame_bounds(product);
    if (!opt.output.empty())
        save_file(opt.output, to_json(product));
    const double scale = std::max(hi, tol::abs_floor);
    const bool match = std::abs(b.lower - lo) <= 1e-9 * scale &&
                       std::abs(b.upper - hi) <= 1e-9 * scale;
    std::cout << "dim: " << product.dim() << "\ncount: " << product.count()
              << "\nbounds: " << num(b.lower) << " " << num(b.upper)
              << "\ncomponent products: " << num(lo) << " " << num(hi)
              << "\nproduct-bound check: " << (match ? "pass" : "FAIL") << "\n";
    return match ? exit_ok : exit_check_failed;
}

int cmd_reconstruct(const std::string& frame_path, const std::string& vector_path) {
    ParsedFile ffile = load_file(frame_path);
    const Frame* f = std::get_if<Frame>(&ffile);
    if (!f) {
        std::cerr << "reconstruct: \"" << frame_path << "\" is not a frame file\n";
        return exit_usage;
    }
    ParsedFile vfile = load_file(vector_path);
    const CVector* x = std::get_if<CVector>(&vfile);
    if (!x) {
        std::cerr << "reconstruct: \"" << vector_path << "\" is not a vector file\n";
        return exit_usage;
    }
    const Reconstruction r = reconstruct(*f, *x);
    const double scale = std::max(x->norm(), tol::abs_floor);
    std::cout << "residual via dual coefficients: "
              << num((r.via_dual_coefficients - *x).norm() / scale)
              << "\nresidual via dual elements: "
              << num((r.via_dual_elements - *x).norm() / scale) << "\n";
    return exit_ok;
}

int cmd_random(const Options& opt, std::size_t dim, std::size_t count, bool tight) {
    if (opt.output.empty()) {
        std::cerr << "random: --output is required\n";
        return exit_usage;
    }
    if (tight && count < dim) {
        std::cerr << "random: --tight needs count >= dim\n";
        return exit_usage;
    }
    const Frame f = tight ? random_tight_frame(dim, count, opt.seed)
                          : random_frame(dim, count, opt.seed);
    save_file(opt.output, to_json(f));
    const FrameBounds b = frame_bounds(f);
    std::cout << "bounds: " << num(b.lower) << " " << num(b.upper) << "\n";
    return exit_ok;
}

int cmd_verify(const Options& opt, std::size_t trials,
               const std::vector<std::string>& paths) {
    VerifyOptions vo;
    vo.seed = opt.seed;
    vo.trials = trials;
    for (const std::string& p : paths) {
        ParsedFile file = load_file(p);
        if (Frame* f = std::get_if<Frame>(&file))
            vo.user_frames.push_back(std::move(*f));
        else if (OperatorFrame* of = std::get_if<OperatorFrame>(&file))
            vo.user_operator_frames.push_back(std::move(*of));
        else {
            std::cerr << "verify: \"" << p << "\" holds a vector, not a frame\n";
            return exit_usage;
        }
    }
    const VerifyReport report = run_verification(vo);
    std::cout << (opt.machine() ? render_machine(report) : render_text(report));
    if (!opt.output.empty())
        save_file(opt.output, render_machine(report));
    return report.all_pass() ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frame computations in finite-dimensional spaces and their tensor products"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "Seed for every random draw");
    app.add_option("-o,--output", opt.output, "Write the result to this file");
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* analyze = app.add_subcommand("analyze", "Bounds and classification of a frame file");
    std::string analyze_path;
    analyze->add_option("path", analyze_path, "Frame or operator-frame file")->required();

    auto* dual = app.add_subcommand("dual", "Write the canonical dual frame");
    std::string dual_path;
    dual->add_option("path", dual_path, "Frame or operator-frame file")->required();

    auto* tensor = app.add_subcommand("tensor", "Tensor two or more frame files");
    std::vector<std::string> tensor_paths;
    tensor->add_option("paths", tensor_paths, "Frame files")->expected(2, -1);

    auto* reconstruct = app.add_subcommand("reconstruct", "Recover a vector through the dual expansions");
    std::string rec_frame, rec_vector;
    reconstruct->add_option("frame", rec_frame, "Frame file")->required();
    reconstruct->add_option("vector", rec_vector, "Vector file")->required();

    auto* random = app.add_subcommand("random", "Generate a random frame file");
    std::size_t rnd_dim = 0, rnd_count = 0;
    bool rnd_tight = false;
    random->add_option("--dim", rnd_dim, "Space dimension")->required()
        ->check(CLI::PositiveNumber);
    random->add_option("--count", rnd_count, "Number of vectors")->required()
        ->check(CLI::PositiveNumber);
    random->add_flag("--tight", rnd_tight, "Force a normalized tight frame");

    auto* verify = app.add_subcommand("verify", "Run the full property-check suite");
    std::size_t trials = 50;
    std::vector<std::string> verify_paths;
    verify->add_option("--trials", trials, "Random instances per check");
    verify->add_option("paths", verify_paths, "Extra frame files used as instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze)
            return cmd_analyze(opt, analyze_path);
        if (*dual)
            return cmd_dual(opt, dual_path);
        if (*tensor)
            return cmd_tensor(opt, tensor_paths);
        if (*reconstruct)
            return cmd_reconstruct(rec_frame, rec_vector);
        if (*random)
            return cmd_random(opt, rnd_dim, rnd_count, rnd_tight);
        if (*verify)
            return cmd_verify(opt, trials, verify_paths);
    } catch (const SizeCapError& e) {
        std::cerr << e.what() << "\n";
        return exit_size_cap;
    } catch (const NotAFrameError& e) {
        std::cerr << e.what() << "\n";
        return exit_not_a_frame;
    } catch (const NotNormalizedTightError& e) {
        std::cerr << e.what() << "\n";
        return exit_not_a_frame;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
