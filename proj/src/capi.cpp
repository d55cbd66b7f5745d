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


#include "discord_lab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "discord_lab/correlations.hpp"
#include "discord_lab/errors.hpp"
#include "discord_lab/monogamy.hpp"
#include "discord_lab/serialize.hpp"
#include "discord_lab/states.hpp"
#include "discord_lab/sweep.hpp"

struct dl_state {
    discord::DensityMatrix rho;
};

struct dl_sweep {
    std::vector<discord::SweepRow> rows;
};

namespace {

using namespace discord;

thread_local std::string last_error;

template <typename F>
dl_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return DL_OK;
    } catch (const CapacityError& e) {
        last_error = e.what();
        return DL_ERROR_CAPACITY;
    } catch (const ArgumentError& e) {
        last_error = e.what();
        return DL_ERROR_ARGUMENT;
    } catch (const LayoutError& e) {
        last_error = e.what();
        return DL_ERROR_LAYOUT;
    } catch (const SymmetryError& e) {
        last_error = e.what();
        return DL_ERROR_SYMMETRY;
    } catch (const ValidationError& e) {
        last_error = e.what();
        return DL_ERROR_VALIDATION;
    } catch (const EvaluationError& e) {
        last_error = e.what();
        return DL_ERROR_EVALUATION;
    } catch (const IoError& e) {
        last_error = e.what();
        return DL_ERROR_IO;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return DL_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return DL_ERROR_INTERNAL;
    }
}

template <typename T>
void require(const T* p, const char* what) {
    if (p == nullptr) throw ArgumentError(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

OptimizerConfig to_config(const dl_optimizer_config* c) {
    OptimizerConfig config;
    if (c != nullptr) {
        config.grid_theta = c->grid_theta;
        config.grid_phi = c->grid_phi;
        config.simplex_iterations = c->simplex_iterations;
        config.starts = c->starts;
        config.tolerance = c->tolerance;
        config.seed = c->seed;
    }
    config.check();
    return config;
}

// Greedy longest-label match, so "AB" resolves with labels A, B and with a
// label "AB" alike.
std::vector<std::size_t> parse_set(const SubsystemLayout& layout, std::string_view text) {
    std::vector<std::size_t> sites;
    std::size_t at = 0;
    while (at < text.size()) {
        std::size_t best = layout.size();
        std::size_t best_len = 0;
        for (std::size_t k = 0; k < layout.size(); ++k) {
            const auto& label = layout.label(k);
            if (label.size() > best_len && text.substr(at, label.size()) == label) {
                best = k;
                best_len = label.size();
            }
        }
        if (best == layout.size()) {
            throw ArgumentError("unknown subsystem label in '" + std::string(text) + "'");
        }
        if (std::find(sites.begin(), sites.end(), best) != sites.end()) {
            throw ArgumentError("subsystem " + layout.label(best) + " named twice in '" + std::string(text) + "'");
        }
        sites.push_back(best);
        at += best_len;
    }
    if (sites.empty()) throw ArgumentError("empty subsystem set");
    std::sort(sites.begin(), sites.end());
    return sites;
}

struct Cut {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
};

Cut parse_cut(const SubsystemLayout& layout, const char* text) {
    if (text == nullptr) {
        if (layout.size() != 2) throw ArgumentError("a cut such as A:BC is required for more than two subsystems");
        return {{0}, {1}};
    }
    const std::string_view s(text);
    const auto colon = s.find(':');
    if (colon == std::string_view::npos || s.find(':', colon + 1) != std::string_view::npos) {
        throw ArgumentError("cut must have the form LEFT:RIGHT, got '" + std::string(s) + "'");
    }
    Cut cut{parse_set(layout, s.substr(0, colon)), parse_set(layout, s.substr(colon + 1))};
    for (auto r : cut.right) {
        if (std::find(cut.left.begin(), cut.left.end(), r) != cut.left.end()) {
            throw ArgumentError("cut sides overlap in '" + std::string(s) + "'");
        }
    }
    return cut;
}

bool has_colon(const char* text) { return text != nullptr && std::strchr(text, ':') != nullptr; }

std::vector<double> interleave(const double* theta, const double* phi, std::size_t count, std::size_t expected) {
    if (theta == nullptr) throw ArgumentError("theta angles are required");
    if (count != expected) {
        throw ArgumentError("expected " + std::to_string(expected) + " angle pairs, got " + std::to_string(count));
    }
    std::vector<double> x(2 * count);
    for (std::size_t k = 0; k < count; ++k) {
        x[2 * k] = theta[k];
        x[2 * k + 1] = phi == nullptr ? 0.0 : phi[k];
    }
    return x;
}

std::vector<std::size_t> all_sites(std::size_t n) {
    std::vector<std::size_t> sites(n);
    for (std::size_t k = 0; k < n; ++k) sites[k] = k;
    return sites;
}

std::vector<std::size_t> merged(const Cut& cut) {
    std::vector<std::size_t> both(cut.left);
    both.insert(both.end(), cut.right.begin(), cut.right.end());
    std::sort(both.begin(), both.end());
    return both;
}

CorrelationReport plain(Quantity q, double value, const SubsystemLayout& layout) {
    CorrelationReport r;
    r.quantity = q;
    r.value = value;
    r.layout = layout;
    return r;
}

CorrelationReport evaluate(const DensityMatrix& rho, const dl_request& req, const OptimizerConfig& config) {
    require(req.quantity, "quantity");
    const auto quantity = parse_quantity(req.quantity);
    const auto& layout = rho.layout();
    const auto mode = req.joint ? MeasurementMode::joint : MeasurementMode::product_local;

    switch (quantity) {
        case Quantity::entropy: {
            if (req.cut == nullptr) return plain(quantity, entropy(rho), layout);
            if (has_colon(req.cut)) throw ArgumentError("entropy takes a subsystem set, not a cut");
            const auto sites = parse_set(layout, req.cut);
            const auto marginal = rho.marginal(sites);
            return plain(quantity, entropy(marginal), marginal.layout());
        }
        case Quantity::mutual_info: {
            if (req.cut == nullptr) return plain(quantity, mutual_information(rho), layout);
            if (!has_colon(req.cut)) {
                const auto marginal = rho.marginal(parse_set(layout, req.cut));
                return plain(quantity, mutual_information(marginal), marginal.layout());
            }
            const auto cut = parse_cut(layout, req.cut);
            const double value =
                entropy(rho.marginal(cut.left)) + entropy(rho.marginal(cut.right)) - entropy(rho.marginal(merged(cut)));
            return plain(quantity, value, layout.select(merged(cut)));
        }
        case Quantity::conditional_entropy: {
            const auto cut = parse_cut(layout, req.cut);
            return plain(quantity, conditional_entropy(rho, cut.left, cut.right), layout.select(merged(cut)));
        }
        case Quantity::d_phi: {
            const auto angles = interleave(req.theta, req.phi, req.num_angles, rho.num_subsystems());
            const auto scheme = scheme_from_angles(angles, all_sites(rho.num_subsystems()));
            if (req.cut == nullptr) return plain(quantity, loss_of_correlation(rho, scheme), layout);
            const auto cut = parse_cut(layout, req.cut);
            const auto keep = merged(cut);
            auto position = [&](std::size_t s) {
                return static_cast<std::size_t>(std::find(keep.begin(), keep.end(), s) - keep.begin());
            };
            std::vector<std::vector<std::size_t>> parties(2);
            for (auto s : cut.left) parties[0].push_back(position(s));
            for (auto s : cut.right) parties[1].push_back(position(s));
            const auto marginal = rho.marginal(keep);
            return plain(quantity, party_loss(marginal, parties, scheme.restricted(keep)), marginal.layout());
        }
        case Quantity::one_sided_discord: {
            const auto cut = parse_cut(layout, req.cut);
            const auto measured = req.measured == nullptr ? cut.right : parse_set(layout, req.measured);
            if (measured == cut.right) return one_sided_discord(rho, cut.left, cut.right, mode, config);
            if (measured == cut.left) return one_sided_discord(rho, cut.right, cut.left, mode, config);
            throw ArgumentError("the measured side must be one side of the cut");
        }
        case Quantity::symmetric_discord:
        case Quantity::block_discord: {
            const auto cut = parse_cut(layout, req.cut);
            return quantity == Quantity::symmetric_discord
                       ? symmetric_discord(rho, cut.left, cut.right, mode, config)
                       : block_discord(rho, cut.left, cut.right, mode, config);
        }
        case Quantity::global_discord:
            if (req.cut != nullptr) throw ArgumentError("global_discord acts on the whole state and takes no cut");
            if (req.joint) throw ArgumentError("global_discord is defined by product-local measurements");
            return global_discord(rho, config);
    }
    throw ArgumentError("unsupported quantity");
}

std::string read_file(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(std::string("cannot read ") + path);
    return buf.str();
}

}  // namespace

extern "C" {

const char* dl_version(void) { return "0.1.0"; }

const char* dl_last_error(void) { return last_error.c_str(); }

const char* dl_status_name(dl_status status) {
    switch (status) {
        case DL_OK:
            return "ok";
        case DL_ERROR_ARGUMENT:
            return "argument error";
        case DL_ERROR_VALIDATION:
            return "validation error";
        case DL_ERROR_LAYOUT:
            return "layout error";
        case DL_ERROR_SYMMETRY:
            return "symmetry error";
        case DL_ERROR_CAPACITY:
            return "capacity error";
        case DL_ERROR_EVALUATION:
            return "evaluation error";
        case DL_ERROR_IO:
            return "i/o error";
        case DL_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void dl_string_free(char* s) { std::free(s); }

void dl_optimizer_config_default(dl_optimizer_config* config) {
    if (config == nullptr) return;
    const OptimizerConfig d;
    config->grid_theta = static_cast<uint32_t>(d.grid_theta);
    config->grid_phi = static_cast<uint32_t>(d.grid_phi);
    config->simplex_iterations = static_cast<uint32_t>(d.simplex_iterations);
    config->starts = static_cast<uint32_t>(d.starts);
    config->tolerance = d.tolerance;
    config->seed = d.seed;
}

dl_status dl_state_from_json(const char* spec_json, dl_state** out) {
    return guarded([&] {
        require(spec_json, "spec");
        require(out, "output handle");
        *out = nullptr;
        *out = new dl_state{from_spec(parse_state_spec(spec_json))};
    });
}

dl_status dl_state_from_file(const char* path, dl_state** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "output handle");
        *out = nullptr;
        const auto text = read_file(path);
        *out = new dl_state{from_spec(parse_state_spec(text))};
    });
}

void dl_state_free(dl_state* state) { delete state; }

dl_status dl_state_num_subsystems(const dl_state* state, size_t* out) {
    return guarded([&] {
        require(state, "state");
        require(out, "output");
        *out = state->rho.num_subsystems();
    });
}

dl_status dl_state_dimension(const dl_state* state, size_t* out) {
    return guarded([&] {
        require(state, "state");
        require(out, "output");
        *out = state->rho.dimension();
    });
}

dl_status dl_state_entries(const dl_state* state, double* out, size_t capacity) {
    return guarded([&] {
        require(state, "state");
        require(out, "output");
        const auto entries = state->rho.matrix().entries();
        if (capacity < 2 * entries.size()) {
            throw ArgumentError("buffer holds " + std::to_string(capacity) + " doubles, need " +
                                std::to_string(2 * entries.size()));
        }
        for (std::size_t i = 0; i < entries.size(); ++i) {
            out[2 * i] = entries[i].real();
            out[2 * i + 1] = entries[i].imag();
        }
    });
}

dl_status dl_compute(const dl_state* state, const dl_request* request, const dl_optimizer_config* config,
                     char** json_out) {
    return guarded([&] {
        require(state, "state");
        require(request, "request");
        require(json_out, "output");
        *json_out = nullptr;
        const auto report = evaluate(state->rho, *request, to_config(config));
        *json_out = copy_string(to_json(report));
    });
}

dl_status dl_audit(const dl_state* state, int joint, const dl_optimizer_config* config, char** json_out) {
    return guarded([&] {
        require(state, "state");
        require(json_out, "output");
        *json_out = nullptr;
        *json_out = copy_string(to_json(audit(state->rho, to_config(config), joint != 0)));
    });
}

dl_status dl_residual(const dl_state* state, int permutation_min, const dl_optimizer_config* config, double* out) {
    return guarded([&] {
        require(state, "state");
        require(out, "output");
        *out = residual(state->rho, to_config(config), permutation_min != 0);
    });
}

dl_status dl_decompose(const dl_state* state, const double* theta, const double* phi, size_t num_angles,
                       char** json_out) {
    return guarded([&] {
        require(state, "state");
        require(json_out, "output");
        *json_out = nullptr;
        const std::size_t n = state->rho.num_subsystems();
        const auto angles = interleave(theta, phi, num_angles, n);
        const auto scheme = scheme_from_angles(angles, all_sites(n));
        *json_out = copy_string(to_json(decompose_loss(state->rho, scheme)));
    });
}

dl_status dl_sweep_run(double step, const dl_optimizer_config* config, unsigned threads, dl_sweep** out) {
    return guarded([&] {
        require(out, "output handle");
        *out = nullptr;
        *out = new dl_sweep{run_sweep(step, to_config(config), threads)};
    });
}

void dl_sweep_free(dl_sweep* sweep) { delete sweep; }

size_t dl_sweep_size(const dl_sweep* sweep) { return sweep == nullptr ? 0 : sweep->rows.size(); }

dl_status dl_sweep_row_at(const dl_sweep* sweep, size_t index, dl_sweep_row* out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "output");
        if (index >= sweep->rows.size()) throw ArgumentError("row index out of range");
        const auto& r = sweep->rows[index];
        *out = {r.lambda, r.gqd,      r.d_ab,  r.d_ac, r.d_bc, r.pairwise_sum, r.residual,
                r.holds ? 1 : 0, r.argmin_theta_gqd, r.argmin_phi_gqd};
    });
}

dl_status dl_sweep_csv(const dl_sweep* sweep, char** csv_out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(csv_out, "output");
        *csv_out = nullptr;
        std::ostringstream out;
        write_sweep_csv(out, sweep->rows);
        *csv_out = copy_string(out.str());
    });
}

dl_status dl_sweep_write_csv(const dl_sweep* sweep, const char* path) {
    return guarded([&] {
        require(sweep, "sweep");
        require(path, "path");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError(std::string("cannot open ") + path + " for writing");
        write_sweep_csv(out, sweep->rows);
        out.flush();
        if (!out) throw IoError(std::string("cannot write ") + path);
    });
}

}  // extern "C"
