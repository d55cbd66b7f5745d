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

#include "discord_lab/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "discord_lab/errors.hpp"

namespace discord {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::string_view to_string(Quantity q) {
    switch (q) {
        case Quantity::entropy:
            return "entropy";
        case Quantity::mutual_info:
            return "mutual_info";
        case Quantity::conditional_entropy:
            return "conditional_entropy";
        case Quantity::d_phi:
            return "d_phi";
        case Quantity::one_sided_discord:
            return "one_sided_discord";
        case Quantity::symmetric_discord:
            return "symmetric_discord";
        case Quantity::block_discord:
            return "block_discord";
        case Quantity::global_discord:
            return "global_discord";
    }
    return "unknown";
}

Quantity parse_quantity(std::string_view name) {
    for (auto q : {Quantity::entropy, Quantity::mutual_info, Quantity::conditional_entropy, Quantity::d_phi,
                   Quantity::one_sided_discord, Quantity::symmetric_discord, Quantity::block_discord,
                   Quantity::global_discord}) {
        if (to_string(q) == name) return q;
    }
    throw ArgumentError("unknown quantity \"" + std::string(name) + "\"");
}

double shannon_entropy(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > kEntropyCutoff) h -= p * std::log2(p);
    }
    return h;
}

double matrix_entropy(const ComplexMatrix& m) { return shannon_entropy(hermitian_eig(m).values); }

double entropy(const DensityMatrix& rho) { return matrix_entropy(rho.matrix()); }

double mutual_information(const DensityMatrix& rho) {
    const std::size_t n = rho.num_subsystems();
    if (n < 2) throw ArgumentError("mutual information needs at least two subsystems");
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t site[] = {k};
        sum += entropy(rho.marginal(site));
    }
    return sum - entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho, std::span<const std::size_t> target,
                           std::span<const std::size_t> given) {
    if (target.empty() || given.empty()) throw ArgumentError("conditional entropy needs non-empty sets");
    std::vector<std::size_t> joint(target.begin(), target.end());
    for (auto g : given) {
        if (std::find(target.begin(), target.end(), g) != target.end()) {
            throw ArgumentError("conditional entropy: target and given sets overlap");
        }
        joint.push_back(g);
    }
    return entropy(rho.marginal(joint)) - entropy(rho.marginal(given));
}

std::vector<Axis> qubit_angle_axes(std::size_t qubits, const OptimizerConfig& config) {
    std::vector<Axis> axes;
    axes.reserve(2 * qubits);
    for (std::size_t k = 0; k < qubits; ++k) {
        axes.push_back({0.0, kPi, false, config.grid_theta});
        axes.push_back({0.0, 2.0 * kPi, true, config.grid_phi});
    }
    return axes;
}

MeasurementScheme scheme_from_angles(std::span<const double> angles, std::span<const std::size_t> sites) {
    if (angles.size() != 2 * sites.size()) throw ArgumentError("need two angles per measured qubit");
    MeasurementScheme scheme;
    for (std::size_t k = 0; k < sites.size(); ++k) scheme.add(sites[k], QubitBasis{angles[2 * k], angles[2 * k + 1]});
    return scheme;
}

namespace {

std::vector<std::size_t> all_sites(std::size_t n) {
    std::vector<std::size_t> sites(n);
    for (std::size_t k = 0; k < n; ++k) sites[k] = k;
    return sites;
}

void require_partition(std::span<const std::vector<std::size_t>> parties, std::size_t n) {
    std::vector<int> count(n, 0);
    for (const auto& p : parties) {
        if (p.empty()) throw ArgumentError("empty party in a correlation cut");
        for (auto s : p) {
            if (s >= n) throw ArgumentError("party site out of range");
            ++count[s];
        }
    }
    for (auto c : count) {
        if (c != 1) throw ArgumentError("parties must partition the subsystems");
    }
}

void require_full_measurement(const MeasurementScheme& scheme, std::size_t n) {
    if (scheme.measured_sites() != all_sites(n)) {
        throw ArgumentError("scheme must measure every subsystem exactly once");
    }
}

// D_Phi across fixed parties for many schemes: the quantum half is computed once.
class PartyLossEvaluator {
   public:
    PartyLossEvaluator(const DensityMatrix& rho, std::vector<std::vector<std::size_t>> parties)
        : rho_(rho), parties_(std::move(parties)) {
        require_partition(parties_, rho.num_subsystems());
        quantum_ = -entropy(rho);
        for (auto& p : parties_) {
            std::sort(p.begin(), p.end());
            quantum_ += entropy(rho.marginal(p));
            maps_.push_back(subsystem_index_map(rho.layout(), p));
            std::size_t d = 1;
            for (auto s : p) d *= rho.layout().dim(s);
            party_dims_.push_back(d);
        }
    }

    double operator()(const MeasurementScheme& scheme) const {
        const auto u = scheme.basis_unitary(rho_.layout());
        const auto probs = outcome_probabilities(rho_.matrix(), u);
        double classical = -shannon_entropy(probs);
        std::vector<double> marginal;
        for (std::size_t k = 0; k < parties_.size(); ++k) {
            marginal.assign(party_dims_[k], 0.0);
            for (std::size_t i = 0; i < probs.size(); ++i) marginal[maps_[k][i]] += probs[i];
            classical += shannon_entropy(marginal);
        }
        return quantum_ - classical;
    }

   private:
    const DensityMatrix& rho_;
    std::vector<std::vector<std::size_t>> parties_;
    std::vector<std::vector<std::size_t>> maps_;
    std::vector<std::size_t> party_dims_;
    double quantum_ = 0.0;
};

// I(rho) - I(Phi_M(rho)) = S(rho_M) - S(rho) + sum_j p_j S(rho_rest | j).
class OneSidedEvaluator {
   public:
    OneSidedEvaluator(const DensityMatrix& rho, std::vector<std::size_t> unmeasured, std::vector<std::size_t> measured)
        : rho_(rho) {
        std::sort(measured.begin(), measured.end());
        std::sort(unmeasured.begin(), unmeasured.end());
        quantum_ = entropy(rho.marginal(measured)) - entropy(rho);
        measured_map_ = subsystem_index_map(rho.layout(), measured);
        rest_map_ = subsystem_index_map(rho.layout(), unmeasured);
        measured_dim_ = 1;
        for (auto s : measured) measured_dim_ *= rho.layout().dim(s);
        rest_dim_ = rho.dimension() / measured_dim_;
    }

    double operator()(const MeasurementScheme& scheme) const {
        const auto w = scheme.basis_unitary(rho_.layout());
        const auto rotated = w.adjoint() * rho_.matrix() * w;
        std::vector<ComplexMatrix> blocks(measured_dim_, ComplexMatrix(rest_dim_, rest_dim_));
        const std::size_t d = rho_.dimension();
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                if (measured_map_[i] == measured_map_[j]) blocks[measured_map_[i]](rest_map_[i], rest_map_[j]) = rotated(i, j);
            }
        }
        double conditional = 0.0;
        for (auto& b : blocks) {
            const double p = b.trace().real();
            if (p <= kEntropyCutoff) continue;
            b *= 1.0 / p;
            conditional += p * matrix_entropy(b);
        }
        return quantum_ + conditional;
    }

   private:
    const DensityMatrix& rho_;
    std::vector<std::size_t> measured_map_;
    std::vector<std::size_t> rest_map_;
    std::size_t measured_dim_ = 1;
    std::size_t rest_dim_ = 1;
    double quantum_ = 0.0;
};

double clamp_discord(double value) { return (value < 0.0 && value >= -kDiscordClamp) ? 0.0 : value; }

// The three named bases (z, x, and theta = 2pi/5) on every qubit, plus a
// shared-basis sweep over the angle grid.
std::vector<std::vector<double>> qubit_seeds(std::size_t qubits, const OptimizerConfig& config) {
    static constexpr double kNamed[3][2] = {{0.0, 0.0}, {kPi / 2.0, 0.0}, {2.0 * kPi / 5.0, 0.0}};
    std::vector<std::vector<double>> seeds;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < qubits; ++k) combos *= 3;
    for (std::size_t c = 0; c < combos; ++c) {
        std::vector<double> x(2 * qubits);
        std::size_t rest = c;
        for (std::size_t k = 0; k < qubits; ++k) {
            x[2 * k] = kNamed[rest % 3][0];
            x[2 * k + 1] = kNamed[rest % 3][1];
            rest /= 3;
        }
        seeds.push_back(std::move(x));
    }
    const Axis theta{0.0, kPi, false, config.grid_theta};
    const Axis phi{0.0, 2.0 * kPi, true, config.grid_phi};
    for (std::size_t i = 0; i < config.grid_theta; ++i) {
        for (std::size_t j = 0; j < config.grid_phi; ++j) {
            std::vector<double> x(2 * qubits);
            for (std::size_t k = 0; k < qubits; ++k) {
                x[2 * k] = axis_node(theta, i, config.grid_theta);
                x[2 * k + 1] = axis_node(phi, j, config.grid_phi);
            }
            seeds.push_back(std::move(x));
        }
    }
    return seeds;
}

std::vector<double> canonical_angles(std::span<const double> x) {
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t k = 0; k + 1 < out.size(); k += 2) {
        const auto c = QubitBasis{out[k], out[k + 1]}.canonical();
        out[k] = c.theta;
        out[k + 1] = c.phi;
    }
    return out;
}

OptimizerDiagnostics diagnostics_of(const OptimizationResult& r) {
    return {r.starts_used, r.evaluations, r.runner_up_gap, r.converged};
}

// A minimization over local measurements on `measured` (positions within the
// reduced state), grouped into `blocks` for joint mode.
struct SchemeSearch {
    std::vector<Axis> axes;
    std::vector<std::vector<double>> seeds;
    Canonicalizer canonicalize;
    std::function<MeasurementScheme(std::span<const double>)> build;
};

SchemeSearch product_search(const SubsystemLayout& layout, std::vector<std::size_t> measured,
                            const OptimizerConfig& config) {
    for (auto s : measured) {
        if (layout.dim(s) != 2) throw LayoutError("product-local measurement needs qubit subsystems");
    }
    SchemeSearch search;
    search.axes = qubit_angle_axes(measured.size(), config);
    search.seeds = qubit_seeds(measured.size(), config);
    search.canonicalize = canonical_angles;
    search.build = [measured](std::span<const double> x) { return scheme_from_angles(x, measured); };
    return search;
}

SchemeSearch joint_search(const SubsystemLayout& layout, std::vector<std::vector<std::size_t>> blocks,
                          const OptimizerConfig& config) {
    std::vector<std::size_t> dims;
    std::size_t total = 0;
    for (const auto& b : blocks) {
        std::size_t d = 1;
        for (auto s : b) d *= layout.dim(s);
        dims.push_back(d);
        total += d * d;
    }
    SchemeSearch search;
    search.axes.assign(total, Axis{-kPi, kPi, false, 0});
    search.seeds.push_back(std::vector<double>(total, 0.0));
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> small(-0.3, 0.3);
    std::uniform_real_distribution<double> wide(-kPi, kPi);
    for (std::size_t i = 0; i < 4 * config.starts; ++i) {
        std::vector<double> x(total);
        for (auto& v : x) v = (i % 2 == 0) ? small(rng) : wide(rng);
        search.seeds.push_back(std::move(x));
    }
    search.build = [blocks = std::move(blocks), dims](std::span<const double> x) {
        MeasurementScheme scheme;
        std::size_t at = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const std::size_t count = dims[b] * dims[b];
            scheme.add(blocks[b], BlockBasis{dims[b], std::vector<double>(x.begin() + at, x.begin() + at + count)});
            at += count;
        }
        return scheme;
    };
    return search;
}

// Restricts to left u right and re-indexes both sets into the reduced state.
struct ReducedCut {
    DensityMatrix state;
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

ReducedCut reduce_to_cut(const DensityMatrix& rho, std::span<const std::size_t> left,
                         std::span<const std::size_t> right) {
    if (left.empty() || right.empty()) throw ArgumentError("both sides of a cut must be non-empty");
    std::vector<std::size_t> keep(left.begin(), left.end());
    for (auto r : right) {
        if (std::find(left.begin(), left.end(), r) != left.end()) throw ArgumentError("cut sides overlap");
        keep.push_back(r);
    }
    for (auto s : keep) {
        if (s >= rho.num_subsystems()) throw ArgumentError("cut names a subsystem out of range");
    }
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) throw ArgumentError("cut repeats a subsystem");
    auto position = [&](std::size_t s) {
        return static_cast<std::size_t>(std::find(keep.begin(), keep.end(), s) - keep.begin());
    };
    ReducedCut cut{rho.marginal(keep), {}, {}};
    for (auto s : left) cut.left.push_back(position(s));
    for (auto s : right) cut.right.push_back(position(s));
    std::sort(cut.left.begin(), cut.left.end());
    std::sort(cut.right.begin(), cut.right.end());
    return cut;
}

CorrelationReport run_search(Quantity quantity, const SubsystemLayout& layout, const SchemeSearch& search,
                             const std::function<double(const MeasurementScheme&)>& loss,
                             const OptimizerConfig& config) {
    const Objective objective = [&](std::span<const double> x) { return loss(search.build(x)); };
    const auto result = minimize(objective, search.axes, config, search.seeds, search.canonicalize);
    CorrelationReport report;
    report.quantity = quantity;
    report.value = clamp_discord(result.best_value);
    report.argmin = search.build(result.best_params);
    report.diagnostics = diagnostics_of(result);
    report.layout = layout;
    return report;
}

}  // namespace

double party_loss(const DensityMatrix& rho, std::span<const std::vector<std::size_t>> parties,
                  const MeasurementScheme& scheme) {
    require_full_measurement(scheme, rho.num_subsystems());
    PartyLossEvaluator eval(rho, {parties.begin(), parties.end()});
    return eval(scheme);
}

double channel_party_loss(const DensityMatrix& rho, std::span<const std::vector<std::size_t>> parties,
                          const MeasurementScheme& scheme) {
    require_partition(parties, rho.num_subsystems());
    require_full_measurement(scheme, rho.num_subsystems());
    const auto measured = apply_channel(rho, scheme);
    double before = -entropy(rho);
    double after = -entropy(measured);
    for (const auto& party : parties) {
        std::vector<std::size_t> sorted(party);
        std::sort(sorted.begin(), sorted.end());
        const auto marginal = rho.marginal(sorted);
        before += entropy(marginal);
        after += entropy(apply_channel(marginal, scheme.restricted(sorted)));
    }
    return before - after;
}

double loss_of_correlation(const DensityMatrix& rho, const MeasurementScheme& scheme) {
    std::vector<std::vector<std::size_t>> parties;
    for (std::size_t k = 0; k < rho.num_subsystems(); ++k) parties.push_back({k});
    return party_loss(rho, parties, scheme);
}

CorrelationReport one_sided_discord(const DensityMatrix& rho, std::span<const std::size_t> unmeasured,
                                    std::span<const std::size_t> measured, MeasurementMode mode,
                                    const OptimizerConfig& config) {
    config.check();
    const auto cut = reduce_to_cut(rho, unmeasured, measured);
    OneSidedEvaluator eval(cut.state, cut.left, cut.right);
    const auto search = mode == MeasurementMode::product_local
                            ? product_search(cut.state.layout(), cut.right, config)
                            : joint_search(cut.state.layout(), {cut.right}, config);
    return run_search(Quantity::one_sided_discord, cut.state.layout(), search,
                      [&](const MeasurementScheme& s) { return eval(s); }, config);
}

CorrelationReport block_discord(const DensityMatrix& rho, std::span<const std::size_t> left,
                                std::span<const std::size_t> right, MeasurementMode mode,
                                const OptimizerConfig& config) {
    config.check();
    const auto cut = reduce_to_cut(rho, left, right);
    PartyLossEvaluator eval(cut.state, {cut.left, cut.right});
    const auto search = mode == MeasurementMode::product_local
                            ? product_search(cut.state.layout(), all_sites(cut.state.num_subsystems()), config)
                            : joint_search(cut.state.layout(), {cut.left, cut.right}, config);
    return run_search(Quantity::block_discord, cut.state.layout(), search,
                      [&](const MeasurementScheme& s) { return eval(s); }, config);
}

CorrelationReport symmetric_discord(const DensityMatrix& rho, std::span<const std::size_t> left,
                                    std::span<const std::size_t> right, MeasurementMode mode,
                                    const OptimizerConfig& config) {
    auto report = block_discord(rho, left, right, mode, config);
    report.quantity = Quantity::symmetric_discord;
    return report;
}

CorrelationReport global_discord(const DensityMatrix& rho, const OptimizerConfig& config) {
    config.check();
    const std::size_t n = rho.num_subsystems();
    if (n < 2) throw ArgumentError("global discord needs at least two subsystems");
    std::vector<std::vector<std::size_t>> parties;
    for (std::size_t k = 0; k < n; ++k) parties.push_back({k});
    PartyLossEvaluator eval(rho, parties);
    const auto search = product_search(rho.layout(), all_sites(n), config);
    return run_search(Quantity::global_discord, rho.layout(), search,
                      [&](const MeasurementScheme& s) { return eval(s); }, config);
}

}  // namespace discord
