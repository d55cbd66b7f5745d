// Copyright 2026 The discord_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "discord_lab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "discord_lab/errors.hpp"

namespace discord {

void OptimizerConfig::check() const {
    if (grid_theta == 0 || grid_phi == 0 || simplex_iterations == 0 || starts == 0 || grid_budget == 0) {
        throw ArgumentError("optimizer counts must all be positive");
    }
    if (!(tolerance > 0.0)) throw ArgumentError("optimizer tolerance must be positive");
}

double axis_node(const Axis& axis, std::size_t i, std::size_t points) {
    if (points <= 1) return 0.5 * (axis.lower + axis.upper);
    const double span = axis.upper - axis.lower;
    const double step = axis.periodic ? span / static_cast<double>(points) : span / static_cast<double>(points - 1);
    return axis.lower + step * static_cast<double>(i);
}

namespace {

// Screening pool size relative to `starts`, and its simplex iteration cap.
constexpr std::size_t kScreenFactor = 4;
constexpr std::size_t kScreenIterations = 60;

struct Point {
    std::vector<double> x;
    double f = 0.0;
};

class Evaluator {
   public:
    Evaluator(const Objective& objective, std::span<const Axis> axes) : objective_(objective), axes_(axes) {}

    void project(std::vector<double>& x) const {
        for (std::size_t k = 0; k < x.size(); ++k) {
            const auto& a = axes_[k];
            if (a.periodic) {
                const double span = a.upper - a.lower;
                double r = std::fmod(x[k] - a.lower, span);
                if (r < 0.0) r += span;
                x[k] = a.lower + r;
            } else {
                x[k] = std::clamp(x[k], a.lower, a.upper);
            }
        }
    }

    double operator()(std::span<const double> x) {
        ++count_;
        const double f = objective_(x);
        if (!std::isfinite(f)) {
            std::ostringstream msg;
            msg << "objective returned " << f << " at (";
            for (std::size_t k = 0; k < x.size(); ++k) msg << (k ? ", " : "") << x[k];
            msg << ")";
            throw EvaluationError(msg.str());
        }
        return f;
    }

    std::size_t count() const { return count_; }

   private:
    const Objective& objective_;
    std::span<const Axis> axes_;
    std::size_t count_ = 0;
};

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Refinement {
    Point best;
    bool converged = false;
};

// Bounded Nelder-Mead from `start`. Restarts from the incumbent with a
// halved simplex until a restart no longer improves by more than tolerance.
Refinement nelder_mead(Evaluator& eval, Point start, std::span<const Axis> axes, const OptimizerConfig& config) {
    const std::size_t n = start.x.size();
    std::vector<double> step(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double span = axes[k].upper - axes[k].lower;
        step[k] = axes[k].points >= 2 ? span / static_cast<double>(axes[k].points) : span / 8.0;
    }

    Point best = std::move(start);
    std::size_t iterations = 0;
    bool converged = false;
    double last_restart_value = std::numeric_limits<double>::infinity();

    while (iterations < config.simplex_iterations) {
        std::vector<Point> simplex;
        simplex.reserve(n + 1);
        simplex.push_back(best);
        for (std::size_t k = 0; k < n; ++k) {
            Point p = best;
            p.x[k] += step[k];
            if (!axes[k].periodic && p.x[k] > axes[k].upper) p.x[k] = best.x[k] - step[k];
            eval.project(p.x);
            p.f = eval(p.x);
            simplex.push_back(std::move(p));
        }

        bool settled = false;
        while (iterations < config.simplex_iterations) {
            std::stable_sort(simplex.begin(), simplex.end(), [](const Point& a, const Point& b) { return a.f < b.f; });
            if (simplex.back().f - simplex.front().f <= config.tolerance) {
                settled = true;
                break;
            }
            ++iterations;

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i].x[k];
            }
            for (auto& c : centroid) c /= static_cast<double>(n);

            auto along = [&](double coeff) {
                Point p;
                p.x.resize(n);
                for (std::size_t k = 0; k < n; ++k) p.x[k] = centroid[k] + coeff * (simplex[n].x[k] - centroid[k]);
                eval.project(p.x);
                p.f = eval(p.x);
                return p;
            };

            Point reflected = along(-1.0);
            if (reflected.f < simplex[0].f) {
                Point expanded = along(-2.0);
                simplex[n] = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
            } else if (reflected.f < simplex[n - 1].f) {
                simplex[n] = std::move(reflected);
            } else {
                const bool outside = reflected.f < simplex[n].f;
                Point contracted = along(outside ? -0.5 : 0.5);
                if (contracted.f < std::min(reflected.f, simplex[n].f)) {
                    simplex[n] = std::move(contracted);
                } else {
                    for (std::size_t i = 1; i <= n; ++i) {
                        for (std::size_t k = 0; k < n; ++k) {
                            simplex[i].x[k] = simplex[0].x[k] + 0.5 * (simplex[i].x[k] - simplex[0].x[k]);
                        }
                        eval.project(simplex[i].x);
                        simplex[i].f = eval(simplex[i].x);
                    }
                }
            }
        }

        std::stable_sort(simplex.begin(), simplex.end(), [](const Point& a, const Point& b) { return a.f < b.f; });
        if (simplex.front().f < best.f) best = simplex.front();
        if (!settled) break;
        if (last_restart_value - best.f <= config.tolerance) {
            converged = true;
            break;
        }
        last_restart_value = best.f;
        for (auto& s : step) s *= 0.5;
    }
    return {std::move(best), converged};
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && total > cap / base) return cap + 1;
        total *= base;
    }
    return total;
}

}  // namespace

OptimizationResult minimize(const Objective& objective, std::span<const Axis> axes, const OptimizerConfig& config,
                            std::span<const std::vector<double>> seeds, const Canonicalizer& canonicalize) {
    config.check();
    const std::size_t n = axes.size();
    if (n == 0) throw ArgumentError("minimize: zero-dimensional search");
    Evaluator eval(objective, axes);

    std::vector<Point> candidates;
    for (const auto& s : seeds) {
        if (s.size() != n) throw ArgumentError("minimize: seed has wrong dimension");
        Point p{s, 0.0};
        eval.project(p.x);
        p.f = eval(p.x);
        candidates.push_back(std::move(p));
    }

    const bool scan = std::all_of(axes.begin(), axes.end(), [](const Axis& a) { return a.points > 0; });
    if (scan) {
        std::size_t total = 1;
        bool over = false;
        for (const auto& a : axes) {
            if (total > config.grid_budget / a.points) over = true;
            total = over ? config.grid_budget + 1 : total * a.points;
        }
        auto node = [&](std::size_t flat) {
            Point p;
            p.x.resize(n);
            for (std::size_t k = n; k-- > 0;) {
                p.x[k] = axis_node(axes[k], flat % axes[k].points, axes[k].points);
                flat /= axes[k].points;
            }
            p.f = eval(p.x);
            return p;
        };
        if (!over) {
            for (std::size_t i = 0; i < total; ++i) candidates.push_back(node(i));
        } else {
            std::mt19937_64 rng(config.seed);
            for (std::size_t i = 0; i < config.grid_budget; ++i) {
                Point p;
                p.x.resize(n);
                for (std::size_t k = 0; k < n; ++k) {
                    std::uniform_int_distribution<std::size_t> pick(0, axes[k].points - 1);
                    p.x[k] = axis_node(axes[k], pick(rng), axes[k].points);
                }
                p.f = eval(p.x);
                candidates.push_back(std::move(p));
            }
        }
    }
    if (candidates.empty()) throw ArgumentError("minimize: no seeds and no scan axes");

    std::stable_sort(candidates.begin(), candidates.end(), [](const Point& a, const Point& b) {
        if (a.f != b.f) return a.f < b.f;
        return lex_less(a.x, b.x);
    });
    // A pool of kScreenFactor * starts candidates is picked best-first but at
    // least two grid steps apart, then each gets a short simplex descent. The
    // `starts` best descents that ended in distinct basins are refined fully.
    auto separation = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double worst = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double span = axes[k].upper - axes[k].lower;
            double d = std::abs(a[k] - b[k]);
            if (axes[k].periodic) d = std::min(d, span - d);
            const std::size_t points = axes[k].points > 0 ? axes[k].points : 8;
            worst = std::max(worst, d / (span / static_cast<double>(points)));
        }
        return worst;
    };
    auto canonical = [&](const std::vector<double>& x) {
        return canonicalize ? canonicalize(x) : x;
    };
    auto pick_spread = [&](const std::vector<Point>& from, std::size_t count, double spread) {
        std::vector<Point> picked;
        std::vector<std::vector<double>> keys;
        for (double limit : {spread, 0.0}) {
            for (const auto& c : from) {
                if (picked.size() >= count) break;
                auto key = canonical(c.x);
                const bool close = std::any_of(keys.begin(), keys.end(),
                                               [&](const auto& q) { return separation(q, key) <= limit; });
                if (!close) {
                    picked.push_back(c);
                    keys.push_back(std::move(key));
                }
            }
        }
        return picked;
    };
    auto by_value = [](const Point& a, const Point& b) { return a.f < b.f; };

    const auto pool = pick_spread(candidates, kScreenFactor * config.starts, 2.0 - 1e-9);
    OptimizerConfig screen_config = config;
    screen_config.simplex_iterations = std::min(config.simplex_iterations, kScreenIterations);
    std::vector<Point> screened;
    screened.reserve(pool.size());
    for (const auto& c : pool) screened.push_back(nelder_mead(eval, c, axes, screen_config).best);
    std::stable_sort(screened.begin(), screened.end(), by_value);
    auto chosen = pick_spread(screened, config.starts, 0.5);

    std::vector<Refinement> runs;
    runs.reserve(chosen.size());
    for (auto& c : chosen) runs.push_back(nelder_mead(eval, std::move(c), axes, config));

    std::vector<std::vector<double>> canon;
    canon.reserve(runs.size());
    for (const auto& r : runs) canon.push_back(canonical(r.best.x));

    std::size_t best = 0;
    for (std::size_t i = 1; i < runs.size(); ++i) {
        const double fi = runs[i].best.f;
        const double fb = runs[best].best.f;
        if (fi < fb || (fi == fb && lex_less(canon[i], canon[best]))) best = i;
    }

    OptimizationResult result;
    result.best_value = runs[best].best.f;
    result.best_params = canon[best];
    result.converged = runs[best].converged;
    result.evaluations = eval.count();
    result.starts_used = runs.size();
    double second = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i != best) second = std::min(second, runs[i].best.f);
    }
    result.runner_up_gap = std::isfinite(second) ? second - result.best_value : 0.0;
    return result;
}

OptimizationResult grid_oracle(const Objective& objective, std::span<const Axis> axes, std::size_t resolution) {
    const std::size_t n = axes.size();
    if (n == 0 || n > 6) throw CapacityError("grid_oracle supports 1 to 6 dimensions");
    if (resolution < 2) throw ArgumentError("grid_oracle resolution must be >= 2");
    constexpr std::size_t kMaxPoints = 100'000'000;
    const std::size_t total = checked_power(resolution, n, kMaxPoints);
    if (total > kMaxPoints) throw CapacityError("grid_oracle: resolution^dimension exceeds 1e8");

    Evaluator eval(objective, axes);
    OptimizationResult result;
    result.best_value = std::numeric_limits<double>::infinity();
    std::vector<double> x(n);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rest = flat;
        for (std::size_t k = n; k-- > 0;) {
            x[k] = axis_node(axes[k], rest % resolution, resolution);
            rest /= resolution;
        }
        const double f = eval(x);
        if (f < result.best_value) {
            result.best_value = f;
            result.best_params = x;
        }
    }
    result.converged = true;
    result.evaluations = eval.count();
    result.starts_used = 0;
    return result;
}

}  // namespace discord
