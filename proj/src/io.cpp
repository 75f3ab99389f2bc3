#include "ccm/io.hpp"

#include "ccm/error.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace ccm {

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::Base: return "base";
    case Method::MultiStart: return "multistart";
    case Method::Lookahead: return "lookahead";
    }
    return "unknown";
}

std::string_view to_string(TieRule rule) noexcept
{
    return rule == TieRule::Deterministic ? "deterministic" : "random";
}

Method parse_method(std::string_view text)
{
    if (text == "base")
        return Method::Base;
    if (text == "multistart")
        return Method::MultiStart;
    if (text == "lookahead")
        return Method::Lookahead;
    throw Error(ErrorKind::Usage, "unknown method '" + std::string(text) + "'");
}

TieRule parse_tie_rule(std::string_view text)
{
    if (text == "random")
        return TieRule::SeededRandom;
    if (text == "deterministic")
        return TieRule::Deterministic;
    throw Error(ErrorKind::Usage, "unknown tie rule '" + std::string(text) + "'");
}

std::string matrix_csv(const Eigen::MatrixXd& m)
{
    std::string out;
    char buf[40];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            if (j)
                out.push_back(',');
            out += buf;
        }
        out.push_back('\n');
    }
    return out;
}

Eigen::MatrixXd parse_matrix_csv(std::string_view text)
{
    std::vector<std::vector<double>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<double> row;
        const char* p = line.c_str();
        while (true) {
            char* end = nullptr;
            const double value = std::strtod(p, &end);
            if (end == p)
                throw Error(ErrorKind::Format, "bad number in CSV row " + std::to_string(rows.size() + 1));
            row.push_back(value);
            p = end;
            if (*p == '\0')
                break;
            if (*p != ',')
                throw Error(ErrorKind::Format, "expected ',' in CSV row " + std::to_string(rows.size() + 1));
            ++p;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw Error(ErrorKind::Length, "ragged CSV row " + std::to_string(rows.size() + 1));
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw Error(ErrorKind::Format, "empty CSV matrix");

    Eigen::MatrixXd m(Eigen::Index(rows.size()), Eigen::Index(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(Eigen::Index(i), Eigen::Index(j)) = rows[i][j];
    return m;
}

std::string curve_csv(const ClosedCurve& curve)
{
    std::ostringstream out;
    out << "index,w,h\n";
    for (std::size_t k = 0; k < curve.points.size(); ++k)
        out << k << ',' << curve.points[k].w << ',' << curve.points[k].h << '\n';
    return out.str();
}

std::string features_csv(const FeatureMatrix<double>& features, const FeatureOptions& options)
{
    static constexpr const char* kBaseNames[kBaseCount] = {"w", "h", "sum", "diff", "angle"};
    std::ostringstream out;
    out << "index";
    for (int slot = 0; slot < kWindowCount; ++slot)
        for (int b = 0; b < kBaseCount; ++b)
            for (int order = 0; order < kOrderCount; ++order)
                out << ",win" << options.windows[std::size_t(slot)] << '_' << kBaseNames[b] << "_d" << order;
    out << '\n';
    char buf[40];
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
        out << i;
        for (int k = 0; k < kFeatureCount; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g", features.values(i, k));
            out << ',' << buf;
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const MatchResult<double>& result)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const Cell& c : result.path.cells)
        cells.push_back({c.i, c.j});
    return {
        {"method", to_string(result.method)},
        {"n", result.lookahead},
        {"tie", to_string(result.tie)},
        {"seed", result.seed},
        {"tie_events", result.tie_events},
        {"mean_potential", result.mean_potential},
        {"path_length", result.path.cells.size()},
        {"wrap_count_x", result.path.wrap_count_x},
        {"wrap_count_y", result.path.wrap_count_y},
        {"path", std::move(cells)},
    };
}

TorusPath path_from_json(const nlohmann::json& doc)
{
    try {
        TorusPath path;
        for (const auto& cell : doc.at("path"))
            path.cells.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
        path.wrap_count_x = doc.value("wrap_count_x", 0);
        path.wrap_count_y = doc.value("wrap_count_y", 0);
        return path;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Format, std::string("bad path JSON: ") + e.what());
    }
}

} // namespace ccm
