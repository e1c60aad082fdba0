// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ftmcfe/harness.hpp"

#include <json.hpp>

#include <string>

namespace ftmcfe {

/// Parsed `simulate` configuration: the round spec plus inputs the spec needs
/// resolved at run time (gradients, keystore seed, curve selection).
struct SimulateConfig {
    RoundSpec spec;
    std::vector<std::vector<double>> gradients;  // n x d
    uint64_t keystore_seed = 1;
    std::string curve = "bls12-381";
};

inline SimulateConfig parse_simulate_config(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ConfigParseError, e.what());
    }

    try {
        SimulateConfig cfg;
        RoundSpec& spec = cfg.spec;
        spec.round = j.value("round", 0ull);
        spec.label_prefix = j.at("label_prefix").get<std::string>();
        spec.t = j.at("t").get<uint32_t>();
        spec.d = j.at("d").get<uint32_t>();
        spec.weights = j.at("weights").get<std::vector<double>>();
        if (j.contains("dropout")) {
            const auto& d = j.at("dropout");
            if (d.contains("offline"))
                spec.dropout.offline = d.at("offline").get<std::vector<uint32_t>>();
            if (d.contains("probability"))
                spec.dropout.probability = d.at("probability").get<double>();
            if (spec.dropout.probability && !spec.dropout.offline.empty())
                fail(ErrorCode::ConfigParseError, "dropout is either explicit or probabilistic, not both");
        }
        if (j.contains("scales")) {
            spec.codec.scale_x = j.at("scales").value("x", spec.codec.scale_x);
            spec.codec.scale_y = j.at("scales").value("y", spec.codec.scale_y);
            if (spec.codec.scale_x < 1 || spec.codec.scale_y < 1)
                fail(ErrorCode::ConfigParseError, "scales must be positive");
        }
        spec.dlog_bound = j.value("dlog_bound", spec.dlog_bound);
        spec.seed = j.value("seed", 0ull);
        cfg.keystore_seed = j.value("keystore_seed", 1ull);
        cfg.curve = j.value("curve", cfg.curve);

        const uint32_t n = spec.n();
        if (n < 1)
            fail(ErrorCode::ConfigParseError, "weights must name at least one client");
        if (spec.t < 1 || spec.t > n)
            fail(ErrorCode::ConfigParseError, "threshold outside 1..n");
        if (spec.d < 1)
            fail(ErrorCode::ConfigParseError, "dimension must be at least 1");

        if (j.contains("gradients")) {
            cfg.gradients = j.at("gradients").get<std::vector<std::vector<double>>>();
            if (cfg.gradients.size() != n)
                fail(ErrorCode::ConfigParseError, "gradients must have one row per client");
            for (const auto& row : cfg.gradients)
                if (row.size() != spec.d)
                    fail(ErrorCode::ConfigParseError, "gradient rows must have d entries");
        } else {
            // synthesized gradients in [-1, 1], deterministic in the seed
            const uint64_t gseed = j.value("gradient_seed", 42ull);
            Rng rng(gseed);
            cfg.gradients.assign(n, std::vector<double>(spec.d));
            for (auto& row : cfg.gradients)
                for (auto& v : row)
                    v = static_cast<double>(rng.below(2001)) / 1000.0 - 1.0;
        }
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ConfigParseError, e.what());
    }
}

inline std::string aggregate_result_json(const AggregateResult& result)
{
    nlohmann::json j;
    j["round"] = result.round;
    j["online"] = result.online;
    j["sums"] = result.sums;
    j["metrics"] = {
        {"pkeygen_ms", result.metrics.pkeygen_ms},
        {"encrypt_ms", result.metrics.encrypt_ms},
        {"verify_ms", result.metrics.verify_ms},
        {"decrypt_ms", result.metrics.decrypt_ms},
    };
    return j.dump(2);
}

inline std::string metrics_csv(const AggregateResult& result, uint32_t n, uint32_t t)
{
    std::string out = "phase,n,t,millis\n";
    const auto row = [&](const char* phase, double ms) {
        out += std::string(phase) + "," + std::to_string(n) + "," + std::to_string(t) + "," +
               std::to_string(ms) + "\n";
    };
    row("pkeygen", result.metrics.pkeygen_ms);
    row("encrypt", result.metrics.encrypt_ms);
    row("verify", result.metrics.verify_ms);
    row("decrypt", result.metrics.decrypt_ms);
    return out;
}

}  // namespace ftmcfe
