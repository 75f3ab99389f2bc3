#pragma once

#include "ccm/error.hpp"
#include "ccm/potential.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ccm {

/// Index pair on the torus: i over curve X, j over curve Y.
struct Cell {
    int i = 0;
    int j = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// The three forward moves. Right is (i+1, j), Down is (i, j+1), with i drawn
/// left to right and j top to bottom.
enum class Step { Down, Diagonal, Right };

inline constexpr std::array<Step, 3> kCandidateOrder = {Step::Down, Step::Diagonal, Step::Right};

enum class Method { Base, MultiStart, Lookahead };
enum class TieRule { SeededRandom, Deterministic };

std::string_view to_string(Method method) noexcept;
std::string_view to_string(TieRule rule) noexcept;
Method parse_method(std::string_view text);
TieRule parse_tie_rule(std::string_view text);

struct SearchConfig {
    Method method = Method::Base;
    int lookahead = 0;
    TieRule tie = TieRule::SeededRandom;
    std::uint64_t seed = 0;
    /// Deterministic tie order, most preferred first.
    std::array<Step, 3> preference = {Step::Diagonal, Step::Right, Step::Down};
    /// Row i used as the start set for MultiStart.
    int start_row = 0;
    std::size_t step_budget = 36000;

    void validate() const
    {
        if (lookahead < 0)
            throw Error(ErrorKind::Usage, "lookahead depth must be >= 0");
        if (step_budget < 3601)
            throw Error(ErrorKind::Usage, "step budget must be >= 3601");
        for (Step s : kCandidateOrder)
            if (std::count(preference.begin(), preference.end(), s) != 1)
                throw Error(ErrorKind::Usage, "tie preference must list each step once");
    }

    static SearchConfig deterministic(Method method = Method::Base, int lookahead = 0)
    {
        SearchConfig c;
        c.method = method;
        c.lookahead = lookahead;
        c.tie = TieRule::Deterministic;
        return c;
    }
};

struct TorusPath {
    std::vector<Cell> cells;
    int wrap_count_x = 0;
    int wrap_count_y = 0;

    std::size_t size() const noexcept { return cells.size(); }
};

template <typename Scalar>
struct MatchResult {
    TorusPath path;
    Scalar mean_potential = 0;
    Method method = Method::Base;
    int lookahead = 0;
    TieRule tie = TieRule::SeededRandom;
    std::uint64_t seed = 0;
    std::size_t tie_events = 0;
};

inline Cell apply_step(Cell c, Step s, int rows, int cols) noexcept
{
    switch (s) {
    case Step::Down: return {c.i, (c.j + 1) % cols};
    case Step::Diagonal: return {(c.i + 1) % rows, (c.j + 1) % cols};
    case Step::Right: return {(c.i + 1) % rows, c.j};
    }
    return c;
}

/// True if `to` is reachable from `from` in one forward move.
inline bool is_step(Cell from, Cell to, int rows, int cols) noexcept
{
    for (Step s : kCandidateOrder)
        if (apply_step(from, s, rows, cols) == to)
            return true;
    return false;
}

/// Resolves exact ties in a guide value, either by a fixed preference or by a seeded
/// generator, and counts how often a choice was not unique.
class TieBreaker {
public:
    explicit TieBreaker(const SearchConfig& config)
        : rule_(config.tie), preference_(config.preference), rng_(config.seed)
    {}

    TieBreaker(const SearchConfig& config, std::uint64_t stream)
        : rule_(config.tie), preference_(config.preference)
    {
        std::seed_seq seq{std::uint32_t(config.seed), std::uint32_t(config.seed >> 32), std::uint32_t(stream),
                          std::uint32_t(stream >> 32)};
        rng_.seed(seq);
    }

    std::size_t events() const noexcept { return events_; }

    /// Picks among `steps` (all tied); deterministic mode follows the preference.
    Step choose_step(const std::vector<Step>& steps)
    {
        if (steps.size() == 1)
            return steps.front();
        ++events_;
        if (rule_ == TieRule::Deterministic) {
            for (Step s : preference_)
                if (std::find(steps.begin(), steps.end(), s) != steps.end())
                    return s;
        }
        return steps[pick(steps.size())];
    }

    /// Deterministic mode takes the first candidate (row-major order for cells).
    std::size_t choose_index(std::size_t count)
    {
        if (count == 1)
            return 0;
        ++events_;
        return rule_ == TieRule::Deterministic ? 0 : pick(count);
    }

private:
    std::size_t pick(std::size_t count) { return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_); }

    TieRule rule_;
    std::array<Step, 3> preference_;
    std::mt19937_64 rng_;
    std::size_t events_ = 0;
};

/// Cell with the smallest guide value; ties resolved row-major / randomly.
template <typename Derived>
Cell minimal_cell(const Eigen::MatrixBase<Derived>& guide, TieBreaker& ties)
{
    const auto best = guide.minCoeff();
    std::vector<Cell> candidates;
    for (Eigen::Index i = 0; i < guide.rows(); ++i)
        for (Eigen::Index j = 0; j < guide.cols(); ++j)
            if (guide(i, j) == best)
                candidates.push_back({int(i), int(j)});
    return candidates[ties.choose_index(candidates.size())];
}

/// Walks from `start`, always to the forward neighbour with the smallest guide value,
/// until a cell repeats. Returns the cycle between the two visits of that cell; any
/// lead-in before the cycle is dropped.
template <typename Derived>
TorusPath greedy_walk(const Eigen::MatrixBase<Derived>& guide, Cell start, const SearchConfig& config,
                      TieBreaker& ties)
{
    const int rows = int(guide.rows());
    const int cols = int(guide.cols());
    if (start.i < 0 || start.j < 0 || start.i >= rows || start.j >= cols)
        throw Error(ErrorKind::Usage, "start cell outside the torus", Stage::Search);

    std::vector<int> seen_at(std::size_t(rows) * std::size_t(cols), -1);
    const auto slot = [cols](Cell c) { return std::size_t(c.i) * std::size_t(cols) + std::size_t(c.j); };

    std::vector<Cell> walk{start};
    std::vector<Step> steps; // steps[k] leads from walk[k] to walk[k + 1]
    seen_at[slot(start)] = 0;
    std::vector<Step> tied;
    tied.reserve(3);
    Cell cur = start;
    for (std::size_t step = 0;; ++step) {
        if (step >= config.step_budget)
            throw Error(ErrorKind::Search, "walk did not close within " + std::to_string(config.step_budget) +
                                               " steps", Stage::Search);
        auto best = std::numeric_limits<typename Derived::Scalar>::infinity();
        for (Step s : kCandidateOrder) {
            const Cell c = apply_step(cur, s, rows, cols);
            best = std::min(best, guide(c.i, c.j));
        }
        tied.clear();
        for (Step s : kCandidateOrder) {
            const Cell c = apply_step(cur, s, rows, cols);
            if (guide(c.i, c.j) == best)
                tied.push_back(s);
        }
        const Step taken = ties.choose_step(tied);
        const Cell next = apply_step(cur, taken, rows, cols);
        steps.push_back(taken);
        if (const int first = seen_at[slot(next)]; first >= 0) {
            TorusPath path;
            path.cells.assign(walk.begin() + first, walk.end());
            int di = 0;
            int dj = 0;
            for (auto it = steps.begin() + first; it != steps.end(); ++it) {
                di += *it != Step::Down ? 1 : 0;
                dj += *it != Step::Right ? 1 : 0;
            }
            path.wrap_count_x = di / rows;
            path.wrap_count_y = dj / cols;
            return path;
        }
        seen_at[slot(next)] = int(walk.size());
        walk.push_back(next);
        cur = next;
    }
}

template <typename Derived>
TorusPath greedy_walk(const Eigen::MatrixBase<Derived>& guide, Cell start, const SearchConfig& config)
{
    TieBreaker ties(config);
    return greedy_walk(guide, start, config, ties);
}

/// Equal-weight mean of V over the path cells, summed in path order.
template <typename Derived>
typename Derived::Scalar mean_along(const Eigen::MatrixBase<Derived>& v, const TorusPath& path)
{
    typename Derived::Scalar sum = 0;
    for (const Cell& c : path.cells)
        sum += v(c.i, c.j);
    return sum / typename Derived::Scalar(path.cells.size());
}

/// S_0 = V; S_m(i, j) = V(i, j) + min over the three forward neighbours of S_{m-1}.
template <typename Scalar>
PotentialTorus<Scalar> lookahead_sums(const PotentialTorus<Scalar>& v, int n)
{
    if (n < 0)
        throw Error(ErrorKind::Usage, "lookahead depth must be >= 0", Stage::Search);
    const Eigen::Index rows = v.rows();
    const Eigen::Index cols = v.cols();
    PotentialTorus<Scalar> s = v;
    PotentialTorus<Scalar> prev(rows, cols);
    for (int m = 1; m <= n; ++m) {
        prev.swap(s);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const Eigen::Index i1 = (i + 1) % rows;
            for (Eigen::Index j = 0; j < cols; ++j) {
                const Eigen::Index j1 = (j + 1) % cols;
                s(i, j) = v(i, j) + std::min({prev(i, j1), prev(i1, j1), prev(i1, j)});
            }
        }
    }
    return s;
}

namespace detail {

template <typename Scalar>
MatchResult<Scalar> guided_match(const PotentialTorus<Scalar>& v, const PotentialTorus<Scalar>& guide,
                                 const SearchConfig& config, Method method)
{
    TieBreaker ties(config);
    const Cell start = minimal_cell(guide, ties);
    MatchResult<Scalar> result;
    result.path = greedy_walk(guide, start, config, ties);
    result.mean_potential = mean_along(v, result.path);
    result.method = method;
    result.lookahead = method == Method::Lookahead ? config.lookahead : 0;
    result.tie = config.tie;
    result.seed = config.seed;
    result.tie_events = ties.events();
    return result;
}

} // namespace detail

/// Start at the global minimum of V and follow the valley.
template <typename Scalar>
MatchResult<Scalar> canonical_path_base(const PotentialTorus<Scalar>& v, const SearchConfig& config)
{
    config.validate();
    return detail::guided_match(v, v, config, Method::Base);
}

/// Start and steer by the lookahead sums S_n; the score still averages V.
template <typename Scalar>
MatchResult<Scalar> canonical_path_lookahead(const PotentialTorus<Scalar>& v, const SearchConfig& config)
{
    config.validate();
    return detail::guided_match(v, lookahead_sums(v, config.lookahead), config, Method::Lookahead);
}

/// One walk from every cell of row `start_row`; keeps the cycle with the smallest mean.
/// Each start draws ties from its own stream, so the result does not depend on the
/// order the walks run in.
template <typename Scalar>
MatchResult<Scalar> canonical_path_multistart(const PotentialTorus<Scalar>& v, const SearchConfig& config)
{
    config.validate();
    if (config.start_row < 0 || config.start_row >= v.rows())
        throw Error(ErrorKind::Usage, "start row outside the torus", Stage::Search);

    std::vector<TorusPath> paths;
    std::vector<Scalar> means;
    std::size_t events = 0;
    for (int j = 0; j < int(v.cols()); ++j) {
        TieBreaker ties(config, std::uint64_t(j));
        paths.push_back(greedy_walk(v, Cell{config.start_row, j}, config, ties));
        means.push_back(mean_along(v, paths.back()));
        events += ties.events();
    }

    const Scalar best = *std::min_element(means.begin(), means.end());
    std::vector<std::size_t> tied;
    for (std::size_t k = 0; k < means.size(); ++k)
        if (means[k] == best)
            tied.push_back(k);
    TieBreaker final_ties(config, std::uint64_t(v.cols()));
    const std::size_t chosen = tied[final_ties.choose_index(tied.size())];

    MatchResult<Scalar> result;
    result.path = std::move(paths[chosen]);
    result.mean_potential = best;
    result.method = Method::MultiStart;
    result.tie = config.tie;
    result.seed = config.seed;
    result.tie_events = events + final_ties.events();
    return result;
}

/// Dispatches on config.method.
template <typename Scalar>
MatchResult<Scalar> canonical_path(const PotentialTorus<Scalar>& v, const SearchConfig& config)
{
    switch (config.method) {
    case Method::Base: return canonical_path_base(v, config);
    case Method::MultiStart: return canonical_path_multistart(v, config);
    case Method::Lookahead: return canonical_path_lookahead(v, config);
    }
    throw Error(ErrorKind::Usage, "unknown search method");
}

} // namespace ccm
