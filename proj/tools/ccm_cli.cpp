// ccm: closed-curve matching from the command line.
//
//   ccm trace     <source>
//   ccm features  <source>
//   ccm potential <source-x> <source-y>
//   ccm match     <source-x> <source-y> [--method base|multistart|lookahead] [--n N] ...
//   ccm classify  --images FILE --labels FILE --patterns DIR [--limit K] [--threshold T]
//   ccm render    (<source-x> <source-y> | --potential V.csv [--path P.json]) --out FIG.ppm
//
// A source is either a pattern file ('.'/'#' rows) or mnist:<index> into --images.

#include "ccm/classify.hpp"
#include "ccm/error.hpp"
#include "ccm/image.hpp"
#include "ccm/io.hpp"
#include "ccm/render.hpp"
#include "ccm/similarity.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kBadInput = 3,
    kStage = 4,
    kSearch = 5,
};

int exit_code(ccm::ErrorKind kind)
{
    switch (kind) {
    case ccm::ErrorKind::Usage: return kUsage;
    case ccm::ErrorKind::Io: return kIo;
    case ccm::ErrorKind::Format:
    case ccm::ErrorKind::Length: return kBadInput;
    case ccm::ErrorKind::Degenerate:
    case ccm::ErrorKind::Tracing: return kStage;
    case ccm::ErrorKind::Search: return kSearch;
    }
    return kUsage;
}

std::string default_data(const char* file)
{
    const char* dir = std::getenv("CCM_MNIST_DIR");
    return std::string(dir ? dir : "data/mnist") + "/" + file;
}

struct Options {
    std::string images = default_data("t10k-images-idx3-ubyte");
    std::string labels = default_data("t10k-labels-idx1-ubyte");
    int gray_limit = ccm::kDefaultGrayLimit;
    std::string threshold_rule = "greater";
    int samples = ccm::kSampleCount;
    bool signed_differences = false;
    std::string angle_unit = "radians";
    std::vector<double> weights;
    std::string method = "base";
    int lookahead = 0;
    std::uint64_t seed = 0;
    std::string tie = "random";
    int start_row = 0;
    std::string out;

    std::optional<std::vector<ccm::GrayImage>> mnist_cache;

    ccm::ThresholdRule rule() const
    {
        if (threshold_rule == "greater")
            return ccm::ThresholdRule::Greater;
        if (threshold_rule == "greater-equal")
            return ccm::ThresholdRule::GreaterEqual;
        throw ccm::Error(ccm::ErrorKind::Usage, "unknown threshold rule '" + threshold_rule + "'");
    }

    ccm::PipelineConfig<double> pipeline() const
    {
        ccm::PipelineConfig<double> config;
        config.samples = samples;
        config.features.absolute_differences = !signed_differences;
        if (angle_unit == "radians")
            config.features.angle_unit = ccm::AngleUnit::Radians;
        else if (angle_unit == "degrees")
            config.features.angle_unit = ccm::AngleUnit::Degrees;
        else
            throw ccm::Error(ccm::ErrorKind::Usage, "unknown angle unit '" + angle_unit + "'");
        if (weights.size() == 2)
            config.weights = ccm::FeatureWeights<double>::uniform(weights[0], weights[1]);
        else if (!weights.empty())
            config.weights = ccm::FeatureWeights<double>::from(weights);
        config.search.method = ccm::parse_method(method);
        config.search.lookahead = lookahead;
        config.search.seed = seed;
        config.search.tie = ccm::parse_tie_rule(tie);
        config.search.start_row = start_row;
        config.search.validate();
        return config;
    }

    ccm::BinaryMask source(const std::string& spec)
    {
        if (spec.rfind("mnist:", 0) == 0) {
            std::size_t index = 0;
            try {
                index = std::stoul(spec.substr(6));
            } catch (const std::exception&) {
                throw ccm::Error(ccm::ErrorKind::Usage, "bad MNIST index in '" + spec + "'");
            }
            if (!mnist_cache)
                mnist_cache = ccm::parse_idx_images(ccm::read_file_bytes(images));
            if (index >= mnist_cache->size())
                throw ccm::Error(ccm::ErrorKind::Usage, "MNIST index " + std::to_string(index) + " out of range");
            return ccm::threshold((*mnist_cache)[index], gray_limit, rule());
        }
        return ccm::load_pattern(ccm::read_file_text(spec));
    }

    void emit(const std::string& text) const { emit_bytes(text.data(), text.size()); }

    void emit_bytes(const void* data, std::size_t size) const
    {
        if (out.empty() || out == "-") {
            std::cout.write(static_cast<const char*>(data), std::streamsize(size));
            std::cout.flush();
            return;
        }
        std::ofstream file(out, std::ios::binary);
        if (!file)
            throw ccm::Error(ccm::ErrorKind::Io, "cannot write " + out);
        file.write(static_cast<const char*>(data), std::streamsize(size));
    }
};

void add_pipeline_flags(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--images", opt.images, "IDX image file for mnist:<index> sources");
    cmd.add_option("--gray-limit", opt.gray_limit, "gray value limit for digit membership");
    cmd.add_option("--threshold-rule", opt.threshold_rule, "greater | greater-equal");
    cmd.add_option("--samples", opt.samples, "resampled points per curve");
    cmd.add_flag("--signed-differences", opt.signed_differences, "keep signs of order 1/2 differences");
    cmd.add_option("--angle-unit", opt.angle_unit, "degrees | radians");
    cmd.add_option("--weights", opt.weights, "ANGLE,OTHER or 45 comma-separated feature weights")->delimiter(',');
}

void add_search_flags(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--method", opt.method, "base | multistart | lookahead");
    cmd.add_option("--n", opt.lookahead, "lookahead depth for --method lookahead");
    cmd.add_option("--seed", opt.seed, "seed for random tie breaking");
    cmd.add_option("--tie", opt.tie, "random | deterministic");
    cmd.add_option("--start-row", opt.start_row, "start row for --method multistart");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Closed-curve similarity of digit borderlines"};
    app.require_subcommand(1);
    Options opt;

    std::string source_x;
    std::string source_y;

    auto* trace = app.add_subcommand("trace", "trace the outer borderline (CSV index,w,h)");
    trace->add_option("source", source_x)->required();
    add_pipeline_flags(*trace, opt);
    trace->add_option("--out", opt.out);

    auto* features = app.add_subcommand("features", "dump the 60x45 feature matrix as CSV");
    features->add_option("source", source_x)->required();
    add_pipeline_flags(*features, opt);
    features->add_option("--out", opt.out);

    auto* potential = app.add_subcommand("potential", "dump the potential torus as CSV");
    potential->add_option("source-x", source_x)->required();
    potential->add_option("source-y", source_y)->required();
    add_pipeline_flags(*potential, opt);
    potential->add_option("--out", opt.out);

    auto* match = app.add_subcommand("match", "canonical path and mean potential as JSON");
    match->add_option("source-x", source_x)->required();
    match->add_option("source-y", source_y)->required();
    add_pipeline_flags(*match, opt);
    add_search_flags(*match, opt);
    match->add_option("--out", opt.out);

    std::string patterns_dir = "patterns";
    std::size_t limit = 1000;
    double reject = ccm::kDefaultRejectThreshold;
    unsigned threads = 1;
    auto* classify = app.add_subcommand("classify", "score MNIST digits against the 10 patterns (CSV)");
    add_pipeline_flags(*classify, opt);
    add_search_flags(*classify, opt);
    classify->add_option("--labels", opt.labels, "IDX label file");
    classify->add_option("--patterns", patterns_dir, "directory holding 0.pattern .. 9.pattern");
    classify->add_option("--limit", limit, "number of leading digits to score");
    classify->add_option("--threshold", reject, "reject when the best mean potential exceeds this");
    classify->add_option("--threads", threads, "worker threads");
    classify->add_option("--out", opt.out);

    std::string potential_csv;
    std::string path_json;
    std::string format = "ppm";
    ccm::HeatmapSpec heatmap;
    auto* render = app.add_subcommand("render", "heatmap of the potential with the canonical path");
    render->add_option("source-x", source_x);
    render->add_option("source-y", source_y);
    render->add_option("--potential", potential_csv, "potential CSV instead of two sources");
    render->add_option("--path", path_json, "MatchResult JSON whose path is overlaid");
    render->add_option("--format", format, "ppm | svg");
    render->add_option("--cell", heatmap.cell, "pixels per torus cell")->check(CLI::Range(1, 64));
    add_pipeline_flags(*render, opt);
    add_search_flags(*render, opt);
    render->add_option("--out", opt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*trace) {
            opt.emit(ccm::curve_csv(ccm::outer_borderline(opt.source(source_x))));
        } else if (*features) {
            const auto config = opt.pipeline();
            opt.emit(ccm::features_csv(ccm::curve_features(opt.source(source_x), config), config.features));
        } else if (*potential) {
            const auto config = opt.pipeline();
            const auto v = ccm::build_potential(ccm::curve_features(opt.source(source_x), config),
                                                ccm::curve_features(opt.source(source_y), config), config.weights);
            opt.emit(ccm::matrix_csv(v));
        } else if (*match) {
            const auto result = ccm::similarity(opt.source(source_x), opt.source(source_y), opt.pipeline());
            opt.emit(ccm::to_json(result).dump(2) + "\n");
        } else if (*classify) {
            ccm::ClassifyOptions options;
            options.pipeline = opt.pipeline();
            options.threshold = reject;
            options.gray_limit = opt.gray_limit;
            options.rule = opt.rule();
            options.threads = threads;
            auto images = ccm::parse_idx_images(ccm::read_file_bytes(opt.images));
            const auto labels = ccm::parse_idx_labels(ccm::read_file_bytes(opt.labels));
            auto digits = ccm::zip_digits(std::move(images), labels);
            if (digits.size() > limit)
                digits.resize(limit);
            const auto patterns = ccm::load_pattern_set(patterns_dir);
            const auto report = ccm::classify(digits, patterns, options);
            for (const auto& row : report.rows)
                if (!row.error.empty())
                    std::cerr << "digit " << row.index << ": " << row.error << "\n";
            opt.emit(ccm::report_csv(report));
        } else if (*render) {
            Eigen::MatrixXd v;
            std::optional<ccm::TorusPath> path;
            if (!potential_csv.empty()) {
                v = ccm::parse_matrix_csv(ccm::read_file_text(potential_csv));
            } else if (!source_x.empty() && !source_y.empty()) {
                const auto config = opt.pipeline();
                v = ccm::build_potential(ccm::curve_features(opt.source(source_x), config),
                                         ccm::curve_features(opt.source(source_y), config), config.weights);
                path = ccm::canonical_path(v, config.search).path;
            } else {
                throw ccm::Error(ccm::ErrorKind::Usage, "render needs two sources or --potential");
            }
            if (!path_json.empty())
                path = ccm::path_from_json(nlohmann::json::parse(ccm::read_file_text(path_json)));
            if (path)
                for (const auto& c : path->cells)
                    if (c.i < 0 || c.j < 0 || c.i >= v.rows() || c.j >= v.cols())
                        throw ccm::Error(ccm::ErrorKind::Format, "path cell outside the potential");
            const ccm::TorusPath* overlay = path ? &*path : nullptr;
            if (format == "svg") {
                opt.emit(ccm::render_svg(v, overlay, heatmap));
            } else if (format == "ppm") {
                const auto bytes = ccm::encode_ppm(ccm::render_heatmap(v, overlay, heatmap));
                opt.emit_bytes(bytes.data(), bytes.size());
            } else {
                throw ccm::Error(ccm::ErrorKind::Usage, "unknown format '" + format + "'");
            }
        }
    } catch (const ccm::Error& e) {
        std::cerr << "ccm: ";
        if (e.stage() != ccm::Stage::None)
            std::cerr << "[" << ccm::to_string(e.stage()) << "] ";
        std::cerr << ccm::to_string(e.kind()) << " error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "ccm: bad JSON: " << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}
