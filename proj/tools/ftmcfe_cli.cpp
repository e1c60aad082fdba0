// ftmcfe: flexible-threshold multi-client functional encryption for inner products
// Copyright 2026 The ftmcfe Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line entry points for the three roles (authority, client,
// aggregator), the round simulator, and the benchmark runner.

#include "ftmcfe/bench.hpp"
#include "ftmcfe/bls/engine.hpp"
#include "ftmcfe/fsio.hpp"
#include "ftmcfe/sim_config.hpp"
#include "ftmcfe/toy/engine.hpp"
#include "ftmcfe/wire.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

using namespace ftmcfe;

namespace {

template <typename E>
struct CurveTag {
    using engine = E;
};

template <typename F>
auto with_curve(const std::string& name, F&& f)
{
    if (name == bls::Bls12381::kCurveId)
        return f(CurveTag<bls::Bls12381>{});
    if (name == toy::ToyPairing::kCurveId)
        return f(CurveTag<toy::ToyPairing>{});
    fail(ErrorCode::UnsupportedCurve, "unknown curve '" + name + "'");
}

std::string read_curve_id(const std::filesystem::path& mpk_path)
{
    const Bytes data = read_file(mpk_path, true);
    WireReader r{BytesView(data)};
    r.expect_magic("FTMC");
    r.expect_version();
    if (r.u8() != static_cast<uint8_t>(WireKind::MasterPublicKey))
        fail(ErrorCode::MalformedEncoding, mpk_path.string() + " is not a master public key");
    const uint8_t len = r.u8();
    const auto id = r.take(len);
    return std::string(id.begin(), id.end());
}

std::vector<int64_t> parse_int_csv(const std::string& text)
{
    std::vector<int64_t> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty())
                fail(ErrorCode::UsageError, "empty entry in list '" + text + "'");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

std::vector<uint32_t> parse_index_csv(const std::string& text)
{
    std::vector<uint32_t> out;
    for (int64_t v : parse_int_csv(text)) {
        if (v < 1 || v > UINT32_MAX)
            fail(ErrorCode::IndexOutOfRange, "index out of range in '" + text + "'");
        out.push_back(static_cast<uint32_t>(v));
    }
    return out;
}

uint64_t fresh_seed()
{
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

struct CliArgs {
    uint32_t n = 0;
    uint32_t t = 0;
    uint32_t index = 0;
    std::string label;
    int64_t value = 0;
    std::string y_csv;
    std::string b_csv;
    uint64_t bound = 1ull << 20;
    std::string out;
    std::string keys;
    std::string config;
    uint64_t seed = 0;
    bool seed_given = false;
    uint32_t reps = 5;
    std::string curve = std::string(bls::Bls12381::kCurveId);
    bool insecure_test = false;
    std::vector<std::string> files;
};

int cmd_setup(const CliArgs& args)
{
    const bool oracle_env = std::getenv("FTMCFE_TEST_ORACLE") != nullptr &&
                            std::string(std::getenv("FTMCFE_TEST_ORACLE")) == "1";
    if (oracle_env && !args.insecure_test)
        fail(ErrorCode::UsageError, "FTMCFE_TEST_ORACLE=1 requires --insecure-test");

    return with_curve(args.curve, [&](auto tag) {
        using E = typename decltype(tag)::engine;
        Rng rng(args.seed_given ? args.seed : fresh_seed());
        const auto ctx = init_pairing<E>();
        SetupOracle<E> oracle;
        const auto mpk = ta_setup_with_oracle<E>(args.n, ctx, rng, oracle_env ? &oracle : nullptr);
        std::filesystem::create_directories(args.out);
        write_file(std::filesystem::path(args.out) / "mpk.key", BytesView(serialize_mpk<E>(mpk)), true);
        if (oracle_env) {
            uint8_t buf[32];
            scalar_to_bytes32<E>(oracle.gamma, buf);
            std::cerr << "test-oracle gamma=" << to_hex(BytesView(buf, 32)) << "\n";
        }
        std::cout << "wrote " << (std::filesystem::path(args.out) / "mpk.key").string() << " (n="
                  << args.n << ", curve=" << E::kCurveId << ")\n";
        return 0;
    });
}

int cmd_client_init(const CliArgs& args)
{
    const auto dir = std::filesystem::path(args.keys);
    return with_curve(read_curve_id(dir / "mpk.key"), [&](auto tag) {
        using E = typename decltype(tag)::engine;
        const auto mpk = deserialize_mpk<E>(read_file(dir / "mpk.key", true));
        Rng rng(args.seed_given ? args.seed : fresh_seed());
        const auto kp = client_init<E>(args.index, mpk.n, rng);
        const auto path = dir / KeyStore<E>::client_file(args.index);
        write_file(path, BytesView(serialize_client_key<E>(kp)), true);
        std::cout << "wrote " << path.string() << "\n";
        return 0;
    });
}

int cmd_pkeygen(const CliArgs& args)
{
    const auto dir = std::filesystem::path(args.keys);
    return with_curve(read_curve_id(dir / "mpk.key"), [&](auto tag) {
        using E = typename decltype(tag)::engine;
        const auto mpk = deserialize_mpk<E>(read_file(dir / "mpk.key", true));
        const auto kp = deserialize_client_key<E>(
            read_file(dir / KeyStore<E>::client_file(args.index), true));
        const ParticipationSet set(mpk.n, parse_index_csv(args.b_csv));
        const auto y = FunctionVector<E>::from_int64(parse_int_csv(args.y_csv));
        const auto key = pkeygen<E>(set, kp, y, args.t, mpk);
        write_file(args.out, BytesView(serialize_partial_key<E>(key)), true);
        std::cout << "wrote " << args.out << "\n";
        return 0;
    });
}

int cmd_encrypt(const CliArgs& args)
{
    const auto dir = std::filesystem::path(args.keys);
    return with_curve(read_curve_id(dir / "mpk.key"), [&](auto tag) {
        using E = typename decltype(tag)::engine;
        const auto mpk = deserialize_mpk<E>(read_file(dir / "mpk.key", true));
        const auto kp = deserialize_client_key<E>(
            read_file(dir / KeyStore<E>::client_file(args.index), true));
        const auto ct = encrypt<E>(args.value, kp, args.t, args.label, mpk);
        write_file(args.out, BytesView(serialize_ciphertext<E>(ct)), true);

        nlohmann::json sidecar = {
            {"i", ct.index}, {"l", ct.label}, {"t", ct.t}, {"n", mpk.n}};
        write_text_file(args.out + ".json", sidecar.dump(2) + "\n");
        std::cout << "wrote " << args.out << "\n";
        return 0;
    });
}

int cmd_decrypt(const CliArgs& args)
{
    const auto dir = std::filesystem::path(args.keys);
    return with_curve(read_curve_id(dir / "mpk.key"), [&](auto tag) {
        using E = typename decltype(tag)::engine;
        const auto mpk = deserialize_mpk<E>(read_file(dir / "mpk.key", true));
        const ParticipationSet set(mpk.n, parse_index_csv(args.b_csv));
        const auto y = FunctionVector<E>::from_int64(parse_int_csv(args.y_csv));

        // share files self-describe through the wire kind byte
        std::vector<PartialFunctionalKey<E>> keys;
        std::vector<Ciphertext<E>> cts;
        for (const auto& file : args.files) {
            const Bytes data = read_file(file, true);
            if (data.size() < 6)
                fail(ErrorCode::MalformedEncoding, file + " too short");
            switch (static_cast<WireKind>(data[5])) {
            case WireKind::PartialKey:
                keys.push_back(deserialize_partial_key<E>(data));
                break;
            case WireKind::Ciphertext:
                cts.push_back(deserialize_ciphertext<E>(data));
                break;
            default:
                fail(ErrorCode::MalformedEncoding, file + " is neither a partial key nor a ciphertext");
            }
        }
        for (const auto& key : keys) {
            if (!verify_partial_key<E>(key, key.t, mpk))
                fail(ErrorCode::WrongSubgroup, "partial key failed the degree check");
        }
        const int64_t result = decrypt<E>(set, y, std::span<const PartialFunctionalKey<E>>(keys),
            std::span<const Ciphertext<E>>(cts), args.label, DlogConfig{args.bound}, mpk);
        std::cout << result << "\n";
        return 0;
    });
}

int cmd_simulate(const CliArgs& args)
{
    const auto cfg = parse_simulate_config(read_text_file(args.config));
    return with_curve(cfg.curve, [&](auto tag) {
        using E = typename decltype(tag)::engine;
        const uint32_t n = cfg.spec.n();

        std::optional<KeyStore<E>> store;
        if (!args.keys.empty() && std::filesystem::exists(std::filesystem::path(args.keys) / "mpk.key")) {
            store = KeyStore<E>::load(args.keys);
            if (store->n() != n)
                fail(ErrorCode::ConfigParseError, "keystore sized for a different client count");
        } else {
            const auto dir = args.keys.empty()
                                 ? std::filesystem::temp_directory_path() /
                                       ("ftmcfe_sim_" + std::to_string(cfg.keystore_seed))
                                 : std::filesystem::path(args.keys);
            store = KeyStore<E>::init(n, dir, cfg.keystore_seed);
        }

        const auto result = run_round<E>(cfg.spec, *store, cfg.gradients);
        const std::string json = aggregate_result_json(result);
        if (!args.out.empty()) {
            std::filesystem::create_directories(args.out);
            write_text_file(std::filesystem::path(args.out) / "result.json", json + "\n");
            write_text_file(std::filesystem::path(args.out) / "metrics.csv",
                metrics_csv(result, n, cfg.spec.t));
        }
        std::cout << json << "\n";
        return 0;
    });
}

nlohmann::json fit_json(const std::optional<LinearFit>& fit)
{
    if (!fit)
        return {{"defined", false}};
    return {{"defined", true}, {"slope", fit->slope}, {"intercept", fit->intercept}, {"r2", fit->r2}};
}

int cmd_bench(const CliArgs& args)
{
    return with_curve(args.curve, [&](auto tag) {
        using E = typename decltype(tag)::engine;
        const uint64_t seed = args.seed_given ? args.seed : 1;

        auto trio = run_bench<E>(default_trio_cases(args.reps), seed);
        auto by_n = run_bench<E>(scaling_n_cases(args.reps), seed);
        auto by_b = run_bench<E>(scaling_quorum_cases(args.reps), seed);

        nlohmann::json j;
        // timings are single-threaded by construction; stated for reproducibility
        j["single_threaded"] = true;
        j["curve"] = std::string(E::kCurveId);
        j["reps"] = args.reps;
        const auto case_json = [](const BenchReport& r) {
            nlohmann::json arr = nlohmann::json::array();
            for (size_t i = 0; i < r.cases.size(); ++i) {
                arr.push_back({{"name", r.cases[i].name}, {"n", r.cases[i].n}, {"t", r.cases[i].t},
                    {"setup_ms", r.timings[i].setup.mean}, {"pkeygen_ms", r.timings[i].pkeygen.mean},
                    {"enc_ms", r.timings[i].enc.mean}, {"dec_ms", r.timings[i].dec.mean}});
            }
            return arr;
        };
        j["paper_cases"] = case_json(trio);
        j["scaling_n"] = case_json(by_n);
        j["scaling_quorum"] = case_json(by_b);
        j["fits"] = {
            {"setup_vs_n", fit_json(by_n.setup_vs_n)},
            {"pkeygen_vs_n", fit_json(by_n.pkeygen_vs_n)},
            {"enc_vs_n", fit_json(by_n.enc_vs_n)},
            {"dec_vs_quorum", fit_json(by_b.dec_vs_quorum)},
        };
        j["dec_ratio_case_ii_over_case_i"] = trio.timings[1].dec.mean / trio.timings[0].dec.mean;

        const std::string csv =
            bench_csv(trio) + bench_csv(by_n).substr(bench_csv(by_n).find('\n') + 1) +
            bench_csv(by_b).substr(bench_csv(by_b).find('\n') + 1);

        if (!args.out.empty()) {
            std::filesystem::create_directories(args.out);
            write_text_file(std::filesystem::path(args.out) / "bench.json", j.dump(2) + "\n");
            write_text_file(std::filesystem::path(args.out) / "bench.csv", csv);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    });
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"flexible-threshold multi-client inner-product functional encryption"};
    app.require_subcommand(1);
    CliArgs args;

    auto* setup = app.add_subcommand("setup", "authority: generate the master public key");
    setup->add_option("--n", args.n, "number of clients")->required();
    setup->add_option("--out", args.out, "output directory")->required();
    setup->add_option("--seed", args.seed)->each([&](const std::string&) { args.seed_given = true; });
    setup->add_option("--curve", args.curve, "bls12-381 or toy-ss42");
    setup->add_flag("--insecure-test", args.insecure_test, "allow gamma retention for tests");

    auto* cinit = app.add_subcommand("client-init", "client: generate a key pair");
    cinit->add_option("--index", args.index)->required();
    cinit->add_option("--keys", args.keys, "key directory")->required();
    cinit->add_option("--seed", args.seed)->each([&](const std::string&) { args.seed_given = true; });

    auto* pkg = app.add_subcommand("pkeygen", "client: issue a partial functional key");
    pkg->add_option("--keys", args.keys)->required();
    pkg->add_option("--index", args.index)->required();
    pkg->add_option("--b", args.b_csv, "participation set, e.g. 1,2,3")->required();
    pkg->add_option("--y", args.y_csv, "function vector, e.g. 1,1,1")->required();
    pkg->add_option("--t", args.t, "threshold")->required();
    pkg->add_option("--out", args.out)->required();

    auto* enc = app.add_subcommand("encrypt", "client: encrypt a value under a label");
    enc->add_option("--keys", args.keys)->required();
    enc->add_option("--index", args.index)->required();
    enc->add_option("--value", args.value)->required();
    enc->add_option("--t", args.t)->required();
    enc->add_option("--label", args.label)->required();
    enc->add_option("--out", args.out)->required();

    auto* dec = app.add_subcommand("decrypt", "aggregator: recover the inner product");
    dec->add_option("--keys", args.keys)->required();
    dec->add_option("--b", args.b_csv)->required();
    dec->add_option("--y", args.y_csv)->required();
    dec->add_option("--label", args.label)->required();
    dec->add_option("--bound", args.bound, "dlog recovery bound");
    dec->add_option("files", args.files, "partial key and ciphertext files")->required();

    auto* sim = app.add_subcommand("simulate", "run a federated aggregation round");
    sim->add_option("--config", args.config)->required();
    sim->add_option("--keys", args.keys, "keystore directory (loaded if present, else created)");
    sim->add_option("--out", args.out, "directory for result.json and metrics.csv");

    auto* bench = app.add_subcommand("bench", "time the four algorithms and fit scaling trends");
    bench->add_option("--reps", args.reps, "repetitions per case");
    bench->add_option("--out", args.out, "directory for bench.json and bench.csv");
    bench->add_option("--curve", args.curve);
    bench->add_option("--seed", args.seed)->each([&](const std::string&) { args.seed_given = true; });

    CLI11_PARSE(app, argc, argv);

    try {
        if (setup->parsed())
            return cmd_setup(args);
        if (cinit->parsed())
            return cmd_client_init(args);
        if (pkg->parsed())
            return cmd_pkeygen(args);
        if (enc->parsed())
            return cmd_encrypt(args);
        if (dec->parsed())
            return cmd_decrypt(args);
        if (sim->parsed())
            return cmd_simulate(args);
        if (bench->parsed())
            return cmd_bench(args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << error_code_name(ErrorCode::UsageError) << ": " << e.what() << "\n";
        return 1;
    }
    return 0;
}
