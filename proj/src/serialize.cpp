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


#include "discord_lab/serialize.hpp"

#include <variant>

#include <json.hpp>

namespace discord {

namespace {

using nlohmann::json;

std::string block_name(const std::vector<std::string>& labels, const std::vector<std::size_t>& sites) {
    std::string name;
    for (auto s : sites) name += labels.at(s);
    return name;
}

json scheme_json(const MeasurementScheme& scheme, const SubsystemLayout& layout) {
    json parts = json::array();
    for (const auto& part : scheme.parts()) {
        json entry;
        entry["sites"] = block_name(layout.labels(), part.sites);
        if (const auto* q = std::get_if<QubitBasis>(&part.basis)) {
            const auto c = q->canonical();
            entry["theta"] = c.theta;
            entry["phi"] = c.phi;
        } else {
            const auto& b = std::get<BlockBasis>(part.basis);
            entry["dim"] = b.dim;
            entry["generator"] = b.generator;
        }
        parts.push_back(std::move(entry));
    }
    return parts;
}

json term_json(const DiscordTerm& term, const std::vector<std::string>& labels) {
    return {{"cut", cut_name(labels, term.left, term.right)},
            {"mode", term.mode == MeasurementMode::joint ? "joint" : "product_local"},
            {"value", term.value},
            {"converged", term.converged}};
}

json terms_json(const std::vector<DiscordTerm>& terms, const std::vector<std::string>& labels) {
    json out = json::array();
    for (const auto& t : terms) out.push_back(term_json(t, labels));
    return out;
}

}  // namespace

std::string cut_name(const std::vector<std::string>& labels, const std::vector<std::size_t>& left,
                     const std::vector<std::size_t>& right) {
    return block_name(labels, left) + ":" + block_name(labels, right);
}

std::string to_json(const CorrelationReport& report) {
    json j;
    j["quantity"] = std::string(to_string(report.quantity));
    j["value"] = report.value;
    j["layout"] = {{"dims", report.layout.dims()}, {"labels", report.layout.labels()}};
    if (report.argmin) j["argmin"] = scheme_json(*report.argmin, report.layout);
    if (report.diagnostics) {
        const auto& d = *report.diagnostics;
        j["diagnostics"] = {{"starts", d.starts},
                            {"evaluations", d.evaluations},
                            {"runner_up_gap", d.runner_up_gap},
                            {"converged", d.converged}};
    }
    return j.dump(2);
}

std::string to_json(const MonogamyAudit& audit) {
    const auto& labels = audit.labels;
    const std::size_t n = labels.size();
    json j;
    j["labels"] = labels;
    j["gqd"] = audit.gqd;
    j["gqd_converged"] = audit.gqd_converged;
    j["pairwise"] = terms_json(audit.pairwise, labels);
    j["block_terms"] = terms_json(audit.block_terms, labels);
    if (!audit.joint_block_terms.empty()) j["joint_block_terms"] = terms_json(audit.joint_block_terms, labels);

    auto discard = [&](const std::vector<bool>& flags, const std::vector<DiscordTerm>& blocks) {
        json out = json::array();
        for (std::size_t i = 0; i < flags.size(); ++i) {
            const auto& block = blocks[i + 1];
            const auto& pair = audit.pairwise[i + 1];
            out.push_back({{"block", cut_name(labels, block.left, block.right)},
                           {"pair", cut_name(labels, pair.left, pair.right)},
                           {"satisfied", static_cast<bool>(flags[i])}});
        }
        return out;
    };
    j["discard_condition"] = discard(audit.discard_condition, audit.block_terms);
    if (!audit.joint_block_terms.empty()) {
        j["joint_discard_condition"] = discard(audit.joint_discard_condition, audit.joint_block_terms);
    }

    j["single_site"] = term_json(audit.single_site, labels);
    if (audit.joint_single_site) j["joint_single_site"] = term_json(*audit.joint_single_site, labels);
    json single = json::array();
    for (std::size_t i = 0; i < audit.single_site_discard.size() && i + 1 < n; ++i) {
        single.push_back({{"pair", cut_name(labels, audit.pairwise[i].left, audit.pairwise[i].right)},
                          {"satisfied", static_cast<bool>(audit.single_site_discard[i])}});
    }
    j["single_site_discard"] = single;

    j["block_sum"] = audit.block_sum;
    j["slack"] = audit.slack;
    j["holds"] = audit.holds;
    j["residual"] = audit.residual ? json(*audit.residual) : json(nullptr);
    return j.dump(2);
}

std::string to_json(const LossDecomposition& decomposition) {
    json j;
    j["total"] = decomposition.total;
    j["terms"] = decomposition.terms;
    j["identity_residual"] = decomposition.identity_residual();
    return j.dump(2);
}

std::string to_json(const ValidationReport& report) {
    json j;
    j["passed"] = report.passed();
    j["hermiticity_violation"] = report.hermiticity_violation;
    j["trace_deviation"] = report.trace_deviation;
    j["min_eigenvalue"] = report.min_eigenvalue;
    j["details"] = report.describe();
    return j.dump(2);
}

}  // namespace discord
