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

#include <json.hpp>

#include "discord_lab/errors.hpp"
#include "discord_lab/states.hpp"

namespace discord {

namespace {

using nlohmann::json;

StateKind parse_kind(const std::string& name) {
    if (name == "ghz") return StateKind::ghz;
    if (name == "w") return StateKind::w;
    if (name == "schmidt") return StateKind::schmidt;
    if (name == "mixture") return StateKind::mixture;
    if (name == "explicit") return StateKind::explicit_matrix;
    if (name == "counterexample") return StateKind::counterexample;
    throw ArgumentError("unknown state kind \"" + name + "\"");
}

std::size_t as_count(const json& value, const char* field) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ArgumentError(std::string("\"") + field + "\" must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

double as_real(const json& value, const char* field) {
    if (!value.is_number()) throw ArgumentError(std::string("\"") + field + "\" must be a number");
    return value.get<double>();
}

StateSpec parse_node(const json& node) {
    if (!node.is_object()) throw ArgumentError("state spec must be a JSON object");
    if (!node.contains("kind") || !node["kind"].is_string()) throw ArgumentError("state spec needs a string \"kind\"");

    StateSpec spec;
    spec.kind = parse_kind(node["kind"].get<std::string>());
    if (node.contains("n")) spec.n = as_count(node["n"], "n");
    if (node.contains("lambda")) spec.lambda = as_real(node["lambda"], "lambda");
    if (node.contains("p1")) spec.p1 = as_real(node["p1"], "p1");
    if (node.contains("weights")) {
        if (!node["weights"].is_array()) throw ArgumentError("\"weights\" must be an array");
        for (const auto& w : node["weights"]) spec.weights.push_back(as_real(w, "weights[]"));
    }
    if (node.contains("parts")) {
        if (!node["parts"].is_array()) throw ArgumentError("\"parts\" must be an array");
        for (const auto& p : node["parts"]) spec.parts.push_back(parse_node(p));
    }
    if (node.contains("entries")) {
        if (!node["entries"].is_array()) throw ArgumentError("\"entries\" must be an array of [re, im] pairs");
        for (const auto& e : node["entries"]) {
            if (!e.is_array() || e.size() != 2) throw ArgumentError("each entry must be a [re, im] pair");
            spec.entries.emplace_back(as_real(e[0], "entries[][0]"), as_real(e[1], "entries[][1]"));
        }
    }
    if (node.contains("dims")) {
        if (!node["dims"].is_array()) throw ArgumentError("\"dims\" must be an array");
        for (const auto& d : node["dims"]) spec.dims.push_back(as_count(d, "dims[]"));
    }
    return spec;
}

}  // namespace

StateSpec parse_state_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ArgumentError(std::string("state spec is not valid JSON: ") + e.what());
    }
    return parse_node(doc);
}

}  // namespace discord
