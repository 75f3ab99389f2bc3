// Acceptance run: one PASS/FAIL line per criterion, exit status = number of failures.

#include "ccm/classify.hpp"
#include "ccm/image.hpp"
#include "ccm/render.hpp"
#include "ccm/similarity.hpp"

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace ccm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty())
                detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(const char* format, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

PipelineConfig<double> deterministic(Method method = Method::Base, int n = 0)
{
    PipelineConfig<double> config;
    config.search = SearchConfig::deterministic(method, n);
    return config;
}

const std::vector<GrayImage>& mnist()
{
    static const auto images = parse_idx_images(read_file_bytes(CCM_DATA_DIR "/t10k-images-idx3-ubyte"));
    return images;
}

Outcome identity()
{
    Outcome o;
    const auto config = deterministic();
    int checked = 0;
    double slowest = 0;
    for (std::size_t k = 0; checked < 20 && k < mnist().size(); ++k) {
        const auto mask = threshold(mnist()[k]);
        const auto start = Clock::now();
        const auto r = similarity(mask, mask, config);
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        slowest = std::max(slowest, seconds);
        ++checked;
        bool diagonal = r.path.size() == 60;
        for (std::size_t m = 0; diagonal && m < r.path.size(); ++m)
            diagonal = r.path.cells[m].i == r.path.cells[m].j;
        o.require(r.mean_potential == 0.0, fmt("digit %zu scored %.17g", k, r.mean_potential));
        o.require(diagonal, fmt("digit %zu path is not the 60-cell diagonal", k));
        o.require(seconds <= 1.0, fmt("digit %zu took %.3f s", k, seconds));
    }
    o.require(checked >= 20, "fewer than 20 digits");
    o.detail = fmt("%d digits, slowest %.4f s", checked, slowest) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome invariances()
{
    Outcome o;
    const auto config = deterministic();
    const auto patterns = load_pattern_set(CCM_PATTERN_DIR);

    // translation, exact
    int translated = 0;
    for (std::size_t k = 0; k < 20; ++k) {
        const auto mask = threshold(mnist()[k]);
        const auto reference = threshold(mnist()[k + 20]);
        for (auto [dw, dh] : {std::pair{1, 0}, std::pair{-1, 2}, std::pair{0, -1}}) {
            const auto moved = translate(mask, dw, dh);
            if (moved.count() != mask.count())
                continue; // content pushed off the canvas
            ++translated;
            o.require(curve_features(moved, config).values == curve_features(mask, config).values,
                      fmt("digit %zu: features moved under (%d,%d)", k, dw, dh));
            o.require(similarity(moved, reference, config).mean_potential ==
                          similarity(mask, reference, config).mean_potential,
                      fmt("digit %zu: score moved under (%d,%d)", k, dw, dh));
        }
    }

    // 2x upscaling of each pattern against every other pattern as the fixed reference
    double worst = 0;
    std::string worst_at;
    for (std::size_t p = 0; p < patterns.size(); ++p) {
        const auto up = upscale(patterns[p], 2);
        for (std::size_t r = 0; r < patterns.size(); ++r) {
            if (r == p)
                continue;
            const double before = similarity(patterns[p], patterns[r], config).mean_potential;
            const double after = similarity(up, patterns[r], config).mean_potential;
            const double delta = std::abs(after - before);
            if (delta > worst) {
                worst = delta;
                worst_at = fmt("pattern %zu vs %zu: %.3f -> %.3f", p, r, before, after);
            }
        }
    }
    o.require(worst <= 0.5, "worst " + worst_at);
    o.detail = fmt("%d exact translations, 2x upscale max |delta| %.3f", translated, worst) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome index_origin()
{
    Outcome o;
    int checked = 0;
    for (auto method : {Method::Base, Method::MultiStart, Method::Lookahead}) {
        const auto config = deterministic(method, 5);
        for (std::size_t k = 0; k < 10; ++k) {
            const auto x = analyze(threshold(mnist()[2 * k]), config);
            const auto y = analyze(threshold(mnist()[2 * k + 1]), config);
            const double reference = match_features(x.features, y.features, config).mean_potential;
            for (Eigen::Index shift : {1, 13, 30, 59}) {
                NormalizedCurve<double> xs = x.normalized;
                NormalizedCurve<double> ys = y.normalized;
                xs.points = cyclic_shift_rows(x.normalized.points, shift);
                ys.points = cyclic_shift_rows(y.normalized.points, shift);
                const auto fxs = feature_matrix(xs, config.features);
                const auto fys = feature_matrix(ys, config.features);
                const double sx = match_features(fxs, y.features, config).mean_potential;
                const double sy = match_features(x.features, fys, config).mean_potential;
                // multistart only scans one row, so only relabelling Y keeps its start set
                if (method != Method::MultiStart)
                    o.require(sx == reference, fmt("%s pair %zu shift %td of X: %.17g vs %.17g",
                                                   std::string(to_string(method)).c_str(), k, shift, sx, reference));
                o.require(sy == reference, fmt("%s pair %zu shift %td of Y: %.17g vs %.17g",
                                               std::string(to_string(method)).c_str(), k, shift, sy, reference));
                ++checked;
            }
        }
    }
    o.detail = fmt("%d relabellings", checked) + (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome lookahead_oracle()
{
    Outcome o;
    std::mt19937 rng(2024);
    int mismatches = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_integer_torus(rng, 8, 8);
        const auto v = fixture::to_torus(g);
        for (int n = 0; n <= 6; ++n)
            if (lookahead_sums(v, n) != fixture::to_torus(oracle::lookahead_grid(g, n)))
                ++mismatches;
    }
    o.require(mismatches == 0, fmt("%d of 350 (torus, n) pairs differ", mismatches));

    const auto valley = fixture::to_torus(fixture::dead_end_valley());
    const double base = canonical_path(valley, SearchConfig::deterministic(Method::Lookahead, 0)).mean_potential;
    const double deep = canonical_path(valley, SearchConfig::deterministic(Method::Lookahead, 6)).mean_potential;
    o.require(deep < base, fmt("dead end: n=6 mean %.4f not below n=0 mean %.4f", deep, base));
    o.detail = fmt("350 exact comparisons; dead end n=0 %.4f, n=6 %.4f", base, deep) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome optimality()
{
    Outcome o;
    std::mt19937 rng(77);
    double tightest = 1e300;
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_integer_torus(rng, 8, 8);
        const double floor = oracle::min_mean_cycle(g);
        const auto v = fixture::to_torus(g);
        for (auto tie : {TieRule::Deterministic, TieRule::SeededRandom}) {
            for (auto [method, n] : {std::pair{Method::Base, 0}, std::pair{Method::MultiStart, 0},
                                     std::pair{Method::Lookahead, 3}, std::pair{Method::Lookahead, 6}}) {
                SearchConfig config = SearchConfig::deterministic(method, n);
                config.tie = tie;
                config.seed = std::uint64_t(trial);
                const double mean = canonical_path(v, config).mean_potential;
                tightest = std::min(tightest, mean - floor);
                o.require(mean >= floor - 1e-12, fmt("torus %d: %s mean %.6f below optimum %.6f", trial,
                                                     std::string(to_string(method)).c_str(), mean, floor));
            }
        }
    }
    o.detail = fmt("20 tori x 8 searches, smallest gap to optimum %.4f", tightest) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome idx_parsing()
{
    Outcome o;
    const auto& images = mnist();
    const auto labels = parse_idx_labels(read_file_bytes(CCM_DATA_DIR "/t10k-labels-idx1-ubyte"));
    o.require(images.size() == 10000, fmt("%zu images", images.size()));
    o.require(labels.size() == 10000, fmt("%zu labels", labels.size()));
    for (const auto& image : images)
        if (image.width != 28 || image.height != 28) {
            o.require(false, "image not 28x28");
            break;
        }
    for (int l : labels)
        if (l < 0 || l > 9) {
            o.require(false, "label outside 0..9");
            break;
        }

    auto bad_images = read_file_bytes(CCM_DATA_DIR "/t10k-images-idx3-ubyte");
    bad_images.resize(1024);
    bad_images[3] = 0x01;
    auto bad_labels = serialize_idx_labels(std::vector<int>{1, 2, 3});
    bad_labels[2] = 0x09;
    const auto rejected = [](auto parse, const std::vector<std::uint8_t>& bytes) {
        try {
            parse(bytes);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::Format;
        }
        return false;
    };
    o.require(rejected([](const auto& b) { return parse_idx_images(b); }, bad_images), "bad image magic accepted");
    o.require(rejected([](const auto& b) { return parse_idx_labels(b); }, bad_labels), "bad label magic accepted");
    o.require(rejected([](const auto& b) { return parse_idx_images(b); }, serialize_idx_labels(std::vector<int>{1})),
              "label file accepted as images");
    o.detail = fmt("%zu images, %zu labels, malformed magic rejected", images.size(), labels.size()) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome experiment_harness()
{
    Outcome o;
    const auto csv = cli::scratch_dir() / "classify.csv";
    const auto start = Clock::now();
    const auto r = cli::run("classify --images \"" CCM_DATA_DIR "/t10k-images-idx3-ubyte\" --labels \"" CCM_DATA_DIR
                            "/t10k-labels-idx1-ubyte\" --patterns \"" CCM_PATTERN_DIR
                            "\" --limit 1000 --threads 1 --out \"" +
                            csv.string() + "\"");
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(r.code == 0, fmt("classify exited with %d", r.code));
    o.require(seconds <= 300, fmt("classify took %.1f s", seconds));

    std::istringstream lines(cli::slurp(csv));
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    int correct = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');)
            fields.push_back(f);
        if (fields.size() == 14 && fields[1] == fields[12])
            ++correct;
    }
    o.require(rows == 1000, fmt("%d rows", rows));

    const auto patterns = load_pattern_set(CCM_PATTERN_DIR);
    std::vector<LabeledDigit> own;
    for (std::size_t k = 0; k < patterns.size(); ++k)
        own.push_back({to_gray(patterns[k]), int(k), k});
    ClassifyOptions options;
    options.pipeline.search = SearchConfig::deterministic();
    const auto report = classify(own, patterns, options);
    int self_correct = 0;
    for (const auto& row : report.rows)
        if (row.best == row.label && row.scores[std::size_t(row.label)] == 0.0)
            ++self_correct;
    o.require(self_correct == 10, fmt("patterns self-classified %d/10", self_correct));
    o.detail = fmt("1000 digits in %.1f s, %d rows, %d/1000 best==label, patterns %d/10 at score 0", seconds, rows,
                   correct, self_correct) +
               (o.detail.empty() ? "" : "; " + o.detail);
    return o;
}

Outcome figure_reproduction()
{
    Outcome o;
    const auto out = cli::scratch_dir() / "figure.ppm";
    const auto r = cli::run("render mnist:247 \"" CCM_PATTERN_DIR "/6.pattern\" --images \"" CCM_DATA_DIR
                            "/t10k-images-idx3-ubyte\" --tie deterministic --out \"" +
                            out.string() + "\"");
    o.require(r.code == 0, fmt("render exited with %d", r.code));
    const auto bytes = read_file_bytes(out.string());
    try {
        const auto image = decode_ppm(bytes);
        o.require(image.width == 240 && image.height == 240, fmt("%dx%d image", image.width, image.height));
        const HeatmapSpec spec;
        bool overlay = false;
        for (int y = 0; y < image.height && !overlay; ++y)
            for (int x = 0; x < image.width && !overlay; ++x) {
                const Rgb c = image.at(x, y);
                overlay = c[0] > c[1] + 30; // path ramp runs yellow to red, the base ramp never leaves gray/green
            }
        o.require(overlay, "no path overlay pixels");
    } catch (const Error& e) {
        o.require(false, std::string("invalid P6: ") + e.what());
    }
    o.require(bytes == read_file_bytes(CCM_GOLDEN_DIR "/mnist247_vs_6.ppm"), "digit/pattern render differs from golden");

    const auto v = fixture::to_torus(fixture::dead_end_valley());
    const auto path = canonical_path(v, SearchConfig::deterministic(Method::Lookahead, 6)).path;
    o.require(encode_ppm(render_heatmap(v, &path)) == read_file_bytes(CCM_GOLDEN_DIR "/dead_end_lookahead.ppm"),
              "fixture render differs from golden");
    o.detail = "mnist:247 vs pattern 6 and dead-end fixture match golden bytes" +
               (o.detail.empty() ? "" : std::string("; ") + o.detail);
    return o;
}

} // namespace

int main()
{
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"AC1 identity", identity},
        {"AC2 invariances", invariances},
        {"AC3 index origin", index_origin},
        {"AC4 lookahead oracle", lookahead_oracle},
        {"AC5 optimality bound", optimality},
        {"AC6 idx parsing", idx_parsing},
        {"AC7 experiment harness", experiment_harness},
        {"AC8 figure reproduction", figure_reproduction},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%-24s %s  %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
