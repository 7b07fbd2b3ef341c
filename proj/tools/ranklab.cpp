// Command-line front end: parameter validation, key generation, signing,
// encryption, and the three attack pipelines, all seeded explicitly.
//
// Exit codes: 0 success, 1 operational failure (decode or attack retries
// exhausted, verification rejected), 2 usage error, 3 anomaly (a violated
// structural invariant, which signals a bug rather than bad luck).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ranklab/bilinear.hpp"
#include "ranklab/bounds.hpp"
#include "ranklab/hamming.hpp"
#include "ranklab/profiles.hpp"
#include "ranklab/ranksign_attack.hpp"
#include "ranklab/serialize.hpp"

using namespace ranklab;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OperationalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << content;
}

Profile need_profile(const std::string& name) {
    auto p = find_profile(name);
    if (!p) {
        std::string names;
        for (const auto& pr : builtin_profiles()) names += " " + pr.name;
        throw UsageError("unknown profile '" + name + "'; available:" + names);
    }
    return *p;
}

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    // plain text: one "key: value" line per field, sections flattened
    std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            if (node.is_object()) {
                for (auto it = node.begin(); it != node.end(); ++it)
                    walk(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
            } else if (node.is_array()) {
                size_t i = 0;
                for (const auto& el : node) walk(el, prefix + "[" + std::to_string(i++) + "]");
            } else {
                std::cout << prefix << ": " << node.dump() << '\n';
            }
        };
    walk(j, "");
}

json params_check_json(const Profile& prof) {
    json j;
    j["schema"] = 1;
    j["command"] = "params-check";
    j["profile"] = prof.name;
    switch (prof.kind) {
    case Profile::Kind::Ranksign: {
        const LrpcParams& p = prof.sgn;
        ParamReport rep = validate_params(p);
        j["params"] = {{"q", p.q()}, {"m", p.m}, {"n", p.n},      {"k", p.k},
                       {"d", p.d},   {"t", p.t}, {"t'", p.tprime}, {"w", p.w}};
        j["admissible"] = rep.ok();
        j["eq_weight_field"] = rep.eq_weight_field;
        j["eq_cokernel"] = rep.eq_cokernel;
        j["eq_length"] = rep.eq_length;
        j["derived_w"] = rep.derived_w;
        j["gv_distance"] = rep.gv;
        j["singleton_distance"] = singleton_distance(p.m, p.n, p.k);
        j["w_below_gv"] = rep.w_below_gv;
        auto census = ranksign_system_counts(p.n, p.k, p.m, p.t);
        j["system_equations"] = census.equations;
        j["system_unknowns"] = census.unknowns;
        break;
    }
    case Profile::Kind::Rsl: {
        const RslParams& p = prof.rsl;
        j["params"] = {{"q", p.q()}, {"m", p.m}, {"n", p.n}, {"k", p.k}, {"N", p.N},
                       {"w", p.w}};
        j["guaranteed_subcode_dim"] = theorem_bound(p);
        j["noise_exceeds_wk"] = static_cast<long>(p.N) > static_cast<long>(p.w) * p.k;
        break;
    }
    case Profile::Kind::RankIbe: {
        const RankIbeParams& p = prof.rank_ibe;
        auto rep = ibe_param_check(p.sgn.a, p.sgn.m, p.n_sgn(), p.k_sgn(), p.n_dec, p.k_dec,
                                   p.w_sgn(), p.w_dec);
        j["signature_window"] = {{"pass", rep.sig_lower && rep.sig_upper},
                                 {"gv", rep.gv_sgn},
                                 {"upper", rep.sig_upper_bound},
                                 {"exact_gv", rep.gv_exact}};
        j["decoding_product"] = {{"pass", rep.decoding}, {"gv_dec", rep.gv_dec}};
        j["support_learning_guard"] = {{"pass", rep.rsl_guard},
                                       {"lhs", rep.rsl_lhs},
                                       {"rhs", rep.rsl_rhs}};
        j["epsilon_slack"] = rep.epsilon_slack;
        j["all_pass"] = rep.all_pass();
        break;
    }
    case Profile::Kind::HammingIbe: {
        const HammingIbeParams& p = prof.hamming;
        j["params"] = {{"n_sgn", p.n_sgn}, {"k_sgn", p.k_sgn}, {"w_dec", p.w_dec},
                       {"n_dec", p.n_dec}, {"k_dec", p.k_dec}};
        double expect = big_log2(big_binomial(p.n_sgn, p.w_dec)) -
                        big_log2(big_binomial(p.k_sgn, p.w_dec));
        j["prange_exponent"] = prange_exponent(p.n_sgn, p.k_sgn, p.w_dec);
        j["expected_iterations_log2"] = expect;
        break;
    }
    case Profile::Kind::Check: {
        const auto& c = *prof.check;
        auto rep = ibe_param_check(c.a, c.m, c.n_sgn, c.k_sgn, c.n_dec, c.k_dec, c.w_sgn,
                                   c.w_dec);
        j["params"] = {{"log2_q", c.a},   {"m", c.m},         {"n_sgn", c.n_sgn},
                       {"k_sgn", c.k_sgn}, {"n_dec", c.n_dec}, {"k_dec", c.k_dec},
                       {"w_sgn", c.w_sgn}, {"w_dec", c.w_dec}};
        j["signature_window"] = {{"pass", rep.sig_lower && rep.sig_upper},
                                 {"gv", rep.gv_sgn},
                                 {"upper", rep.sig_upper_bound},
                                 {"exact_gv", rep.gv_exact}};
        j["decoding_product"] = {{"pass", rep.decoding}, {"gv_dec", rep.gv_dec}};
        j["support_learning_guard"] = {{"pass", rep.rsl_guard},
                                       {"lhs", rep.rsl_lhs},
                                       {"rhs", rep.rsl_rhs}};
        j["all_pass"] = rep.all_pass();
        auto census = rsl_system_counts(c.n_sgn, c.k_sgn, c.m, c.w_dec);
        j["system_equations"] = census.equations;
        j["system_unknowns"] = census.unknowns;
        break;
    }
    }
    return j;
}

std::string serialize_msg(const ExtField& F, const VecFqm& msg) {
    std::ostringstream os;
    for (size_t i = 0; i < msg.size(); ++i) {
        if (i) os << ' ';
        os << pack_elem(F, msg[i]);
    }
    return os.str();
}

VecFqm parse_msg(const ExtField& F, const std::string& text, size_t len) {
    std::istringstream is(text);
    VecFqm msg;
    std::string tok;
    while (is >> tok) msg.push_back(unpack_elem(F, BigInt(tok)));
    if (msg.size() != len)
        throw UsageError("message needs exactly " + std::to_string(len) + " elements");
    return msg;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric signing, encryption, and cryptanalysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags remain valid after a subcommand name

    bool as_json = false;
    unsigned threads = 1;
    app.add_flag("--json", as_json, "machine-readable reports (schema 1)");
    app.add_option("--threads", threads, "worker threads for enumeration pipelines");

    std::string profile_name, out_path, out2_path, strategy, msg_text, msg_file, id;
    std::string pk_path, sk_path, sig_path, inst_path, secret_path, mpk_path, msk_path,
        uk_path, ct_path, fk_path, metric = "rank";
    uint64_t seed = 0;
    unsigned trials = 10;
    bool force = false;

    auto* params = app.add_subcommand("params", "parameter validators and counters");
    auto* pcheck = params->add_subcommand("check", "validate a profile and report counts");
    pcheck->add_option("--profile", profile_name, "profile name")->required();
    auto* pderive = params->add_subcommand("derive", "derive signing parameters");
    pderive->add_option("--profile", profile_name, "profile name")->required();

    auto* keygen = app.add_subcommand("keygen", "generate a signing key pair");
    keygen->add_option("--profile", profile_name)->required();
    keygen->add_option("--seed", seed)->required();
    keygen->add_option("--out-pk", out_path, "public key file")->required();
    keygen->add_option("--out-sk", out2_path, "secret key file")->required();
    keygen->add_flag("--force", force, "allow profiles marked validators-only");

    auto* sign = app.add_subcommand("sign", "sign a message (trapdoor or forged key)");
    sign->add_option("--sk", sk_path, "secret key file");
    sign->add_option("--forge-key", fk_path, "recovered forging key file");
    sign->add_option("--pk", pk_path, "public key (required with --forge-key)");
    sign->add_option("--msg", msg_text, "message string");
    sign->add_option("--msg-file", msg_file, "message file");
    sign->add_option("--seed", seed)->required();
    sign->add_option("--out", out_path, "signature file")->required();

    auto* verify = app.add_subcommand("verify", "verify a signature");
    verify->add_option("--pk", pk_path)->required();
    verify->add_option("--msg", msg_text);
    verify->add_option("--msg-file", msg_file);
    verify->add_option("--sig", sig_path)->required();

    auto* attack = app.add_subcommand("attack", "key-recovery and message-recovery attacks");
    auto* atk_rs = attack->add_subcommand("ranksign", "recover a forging key from a public key");
    atk_rs->add_option("--pk", pk_path)->required();
    atk_rs->add_option("--strategy", strategy, "bilinear or enumerate (default)");
    atk_rs->add_option("--seed", seed)->required();
    atk_rs->add_option("--out", out_path, "forging key file");
    atk_rs->add_option("--sk", sk_path, "optional secret key for a white-box check");
    auto* atk_h = attack->add_subcommand("hamming-ibe", "recover message and noise matrix");
    atk_h->add_option("--mpk", mpk_path)->required();
    atk_h->add_option("--ct", ct_path)->required();
    atk_h->add_option("--id", id, "recipient identity")->required();
    atk_h->add_option("--seed", seed)->required();
    atk_h->add_option("--out", out_path, "iterations report (CSV)");

    auto* rsl = app.add_subcommand("rsl", "rank support learning instances");
    auto* rsl_gen = rsl->add_subcommand("gen", "generate an instance");
    rsl_gen->add_option("--profile", profile_name)->required();
    rsl_gen->add_option("--seed", seed)->required();
    rsl_gen->add_option("--out", out_path, "instance file")->required();
    rsl_gen->add_option("--out-secret", out2_path, "secret file (white-box tests)");
    auto* rsl_atk = rsl->add_subcommand("attack", "recover the secret support");
    rsl_atk->add_option("--inst", inst_path)->required();
    rsl_atk->add_option("--strategy", strategy, "exhaustive (default) or bilinear");
    rsl_atk->add_option("--seed", seed)->required();
    rsl_atk->add_option("--secret", secret_path, "optional secret for comparison");

    auto* ibe = app.add_subcommand("ibe", "identity-based encryption pipelines");
    auto* ibe_setup = ibe->add_subcommand("setup", "master key generation");
    ibe_setup->add_option("--profile", profile_name)->required();
    ibe_setup->add_option("--metric", metric, "rank or hamming")->default_val("rank");
    ibe_setup->add_option("--seed", seed)->required();
    ibe_setup->add_option("--out-mpk", out_path)->required();
    ibe_setup->add_option("--out-msk", out2_path);
    ibe_setup->add_flag("--force", force, "skip the constraint gate");
    auto* ibe_extract = ibe->add_subcommand("extract", "derive a user key from an identity");
    ibe_extract->add_option("--msk", msk_path)->required();
    ibe_extract->add_option("--id", id)->required();
    ibe_extract->add_option("--seed", seed)->required();
    ibe_extract->add_option("--out", out_path)->required();
    auto* ibe_encrypt = ibe->add_subcommand("encrypt", "encrypt to an identity");
    ibe_encrypt->add_option("--mpk", mpk_path)->required();
    ibe_encrypt->add_option("--id", id)->required();
    ibe_encrypt->add_option("--msg", msg_text, "message as packed elements (default: random)");
    ibe_encrypt->add_option("--metric", metric)->default_val("rank");
    ibe_encrypt->add_option("--seed", seed)->required();
    ibe_encrypt->add_option("--out", out_path)->required();
    auto* ibe_decrypt = ibe->add_subcommand("decrypt", "decrypt with a user key");
    ibe_decrypt->add_option("--mpk", mpk_path)->required();
    ibe_decrypt->add_option("--uk", uk_path)->required();
    ibe_decrypt->add_option("--ct", ct_path)->required();
    ibe_decrypt->add_option("--out", out_path, "write the message here as well");

    auto* bench = app.add_subcommand("bench", "pipeline wall-clock and success rates (CSV)");
    bench->add_option("--profile", profile_name)->required();
    bench->add_option("--trials", trials)->default_val(10);
    bench->add_option("--seed", seed)->required();
    bench->add_option("--out", out_path, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (pcheck->parsed() || pderive->parsed()) {
            Profile prof = need_profile(profile_name);
            json j = params_check_json(prof);
            if (pderive->parsed()) {
                j["command"] = "params-derive";
                if (prof.kind == Profile::Kind::Ranksign) {
                    const LrpcParams& p = prof.sgn;
                    j["derived"] = {{"w_minus_tprime", p.m / (p.d + 1)},
                                    {"w", p.t + p.tprime + (p.n - p.k) / p.d},
                                    {"tprime_convention", p.t}};
                }
            }
            emit(j, as_json);
            if (prof.kind == Profile::Kind::Ranksign && !validate_params(prof.sgn).ok())
                return 1;
            return 0;
        }

        if (keygen->parsed()) {
            Profile prof = need_profile(profile_name);
            if (prof.kind != Profile::Kind::Ranksign) throw UsageError("not a signing profile");
            if (!prof.solve_scale && !force)
                throw UsageError("profile is validators-only; pass --force to generate anyway");
            Rng rng(seed);
            auto kp = ranksign_keygen(prof.sgn, rng);
            std::ostringstream pk_os, sk_os;
            write_public_key(pk_os, kp.pk);
            write_secret_key(sk_os, kp.sk);
            write_file(out_path, pk_os.str());
            write_file(out2_path, sk_os.str());
            emit({{"schema", 1},
                  {"command", "keygen"},
                  {"profile", prof.name},
                  {"pk", out_path},
                  {"sk", out2_path}},
                 as_json);
            return 0;
        }

        if (sign->parsed()) {
            if (!msg_file.empty()) msg_text = read_file(msg_file);
            std::optional<RanksignSignature> sig;
            FieldPtr field;
            if (!fk_path.empty()) {
                if (pk_path.empty()) throw UsageError("--forge-key needs --pk");
                std::istringstream fk_is(read_file(fk_path));
                ForgeKey fk = read_forge_key(fk_is);
                std::istringstream pk_is(read_file(pk_path));
                RanksignPublicKey pk = read_public_key(pk_is);
                field = pk.field;
                Rng rng(seed);
                sig = forged_sign(pk, fk, msg_text, rng);
            } else if (!sk_path.empty()) {
                std::istringstream sk_is(read_file(sk_path));
                RanksignSecretKey sk = read_secret_key(sk_is);
                field = sk.field;
                Rng rng(seed);
                sig = ranksign_sign(sk, msg_text, rng);
            } else {
                throw UsageError("need --sk or --forge-key");
            }
            if (!sig) throw OperationalError("signing retries exhausted");
            std::ostringstream os;
            write_signature(os, *field, *sig);
            write_file(out_path, os.str());
            emit({{"schema", 1}, {"command", "sign"}, {"signature", out_path}}, as_json);
            return 0;
        }

        if (verify->parsed()) {
            if (!msg_file.empty()) msg_text = read_file(msg_file);
            std::istringstream pk_is(read_file(pk_path));
            RanksignPublicKey pk = read_public_key(pk_is);
            std::istringstream sig_is(read_file(sig_path));
            RanksignSignature sig = read_signature(sig_is, *pk.field);
            bool ok = ranksign_verify(pk, msg_text, sig);
            emit({{"schema", 1}, {"command", "verify"}, {"valid", ok}}, as_json);
            return ok ? 0 : 1;
        }

        if (atk_rs->parsed()) {
            std::istringstream pk_is(read_file(pk_path));
            RanksignPublicKey pk = read_public_key(pk_is);
            if (strategy.empty()) strategy = "enumerate";
            Rank1Strategy strat;
            if (strategy == "bilinear")
                strat = Rank1Strategy::Bilinear;
            else if (strategy == "enumerate")
                strat = Rank1Strategy::Enumerate;
            else
                throw UsageError("strategy must be bilinear or enumerate");
            Rng rng(seed);
            AttackReport rep;
            auto fk = attack_ranksign(pk, strat, rng, &rep);
            json j{{"schema", 1},
                   {"command", "attack-ranksign"},
                   {"strategy", strategy},
                   {"rank1_candidates", rep.rank1_found},
                   {"candidates_tried", rep.candidates_tried},
                   {"notes", rep.notes},
                   {"success", fk.has_value()}};
            if (fk) {
                j["checks"] = fk->checks;
                if (!out_path.empty()) {
                    std::ostringstream os;
                    write_forge_key(os, *fk);
                    write_file(out_path, os.str());
                    j["forge_key"] = out_path;
                }
                if (!sk_path.empty()) {
                    std::istringstream sk_is(read_file(sk_path));
                    RanksignSecretKey sk = read_secret_key(sk_is);
                    j["coefficient_space_recovered"] = fk->R.F == sk.H.F;
                }
            }
            emit(j, as_json);
            return fk ? 0 : 1;
        }

        if (atk_h->parsed()) {
            std::istringstream mpk_is(read_file(mpk_path));
            HammingIbeMpk mpk = read_hamming_mpk(mpk_is);
            std::istringstream ct_is(read_file(ct_path));
            HammingCiphertext ct = read_hamming_ct(ct_is);
            double expect = big_log2(big_binomial(mpk.p.n_sgn, mpk.p.w_dec)) -
                            big_log2(big_binomial(mpk.p.k_sgn, mpk.p.w_dec));
            uint64_t budget = static_cast<uint64_t>(std::ceil(50.0 * std::exp2(expect))) + 1;
            Rng rng(seed);
            auto res = break_hamming_ibe(mpk, id, ct, rng, budget, threads);
            std::ostringstream csv;
            csv << "column,iterations,success\n";
            for (size_t c = 0; c < res.columns.size(); ++c)
                csv << c << ',' << res.columns[c].iterations << ','
                    << (res.columns[c].success ? 1 : 0) << '\n';
            if (!out_path.empty()) write_file(out_path, csv.str());
            json j{{"schema", 1},
                   {"command", "attack-hamming-ibe"},
                   {"success", res.ok},
                   {"total_iterations", res.total_iterations},
                   {"per_column_budget", budget}};
            if (res.ok) {
                std::ostringstream m;
                for (size_t i = 0; i < res.msg.size(); ++i) {
                    if (i) m << ' ';
                    m << res.msg[i];
                }
                j["message"] = m.str();
            }
            if (out_path.empty()) j["csv"] = csv.str();
            emit(j, as_json);
            return res.ok ? 0 : 1;
        }

        if (rsl_gen->parsed()) {
            Profile prof = need_profile(profile_name);
            if (prof.kind != Profile::Kind::Rsl) throw UsageError("not a support-learning profile");
            Rng rng(seed);
            auto [inst, sec] = rsl_gen_instance(prof.rsl, rng);
            std::ostringstream os;
            write_rsl_instance(os, inst);
            write_file(out_path, os.str());
            json j{{"schema", 1}, {"command", "rsl-gen"}, {"instance", out_path}};
            if (!out2_path.empty()) {
                std::ostringstream ss;
                write_rsl_secret(ss, *inst.field, sec);
                write_file(out2_path, ss.str());
                j["secret"] = out2_path;
            }
            emit(j, as_json);
            return 0;
        }

        if (rsl_atk->parsed()) {
            std::istringstream is(read_file(inst_path));
            RslInstance inst = read_rsl_instance(is);
            if (strategy.empty()) strategy = "exhaustive";
            RslStrategy strat;
            if (strategy == "exhaustive")
                strat = RslStrategy::Exhaustive;
            else if (strategy == "bilinear")
                strat = RslStrategy::Bilinear;
            else
                throw UsageError("strategy must be exhaustive or bilinear");
            Rng rng(seed);
            RslAttackReport rep;
            auto got = rsl_attack(inst, strat, rng, &rep, threads);
            json j{{"schema", 1},
                   {"command", "rsl-attack"},
                   {"strategy", strategy},
                   {"low_rank_words", rep.low_rank_words},
                   {"success", got.has_value()}};
            if (got) {
                std::ostringstream os;
                write_mat_fq(os, *inst.field, got->basis_mat());
                j["recovered_support_basis"] = os.str();
                if (!secret_path.empty()) {
                    std::istringstream ss(read_file(secret_path));
                    RslSecret sec = read_rsl_secret(ss, inst.field);
                    j["exact_match"] = *got == sec.F;
                    j["subset_of_secret"] = sec.F.contains_subspace(*got);
                }
            }
            emit(j, as_json);
            return got ? 0 : 1;
        }

        if (ibe_setup->parsed()) {
            Profile prof = need_profile(profile_name);
            Rng rng(seed);
            if (metric == "rank") {
                if (prof.kind != Profile::Kind::RankIbe)
                    throw UsageError("profile is not a rank encryption profile");
                auto keys = rank_ibe_setup(prof.rank_ibe, rng, force);
                std::ostringstream mos;
                write_rank_ibe_mpk(mos, keys.mpk);
                write_file(out_path, mos.str());
                json j{{"schema", 1}, {"command", "ibe-setup"}, {"metric", "rank"},
                       {"mpk", out_path}};
                if (!out2_path.empty()) {
                    std::ostringstream sos;
                    write_rank_ibe_msk(sos, keys);
                    write_file(out2_path, sos.str());
                    j["msk"] = out2_path;
                }
                emit(j, as_json);
            } else if (metric == "hamming") {
                if (prof.kind != Profile::Kind::HammingIbe)
                    throw UsageError("profile is not a Hamming encryption profile");
                auto mpk = hamming_ibe_setup(prof.hamming, rng);
                std::ostringstream mos;
                write_hamming_mpk(mos, mpk);
                write_file(out_path, mos.str());
                if (!out2_path.empty())
                    throw UsageError("hamming mode has no extraction trapdoor to store");
                emit({{"schema", 1}, {"command", "ibe-setup"}, {"metric", "hamming"},
                      {"mpk", out_path}},
                     as_json);
            } else {
                throw UsageError("metric must be rank or hamming");
            }
            return 0;
        }

        if (ibe_extract->parsed()) {
            std::istringstream is(read_file(msk_path));
            RankIbeKeys keys = read_rank_ibe_msk(is);
            Rng rng(seed);
            auto uk = rank_ibe_extract(keys, id, rng);
            if (!uk) throw OperationalError("extraction retries exhausted");
            std::ostringstream os;
            write_user_key(os, *keys.mpk.field, *uk);
            write_file(out_path, os.str());
            emit({{"schema", 1}, {"command", "ibe-extract"}, {"userkey", out_path}}, as_json);
            return 0;
        }

        if (ibe_encrypt->parsed()) {
            Rng rng(seed);
            if (metric == "rank") {
                std::istringstream is(read_file(mpk_path));
                RankIbeMpk mpk = read_rank_ibe_mpk(is);
                const ExtField& F = *mpk.field;
                VecFqm msg;
                if (!msg_text.empty()) {
                    msg = parse_msg(F, msg_text, mpk.p.k_dec);
                } else {
                    msg.assign(mpk.p.k_dec, F.zero());
                    for (auto& x : msg) x = F.random(rng);
                }
                auto ct = rank_ibe_encrypt(mpk, id, msg, rng);
                std::ostringstream os;
                write_rank_ct(os, F, ct);
                write_file(out_path, os.str());
                emit({{"schema", 1},
                      {"command", "ibe-encrypt"},
                      {"metric", "rank"},
                      {"message", serialize_msg(F, msg)},
                      {"ciphertext", out_path}},
                     as_json);
            } else if (metric == "hamming") {
                std::istringstream is(read_file(mpk_path));
                HammingIbeMpk mpk = read_hamming_mpk(is);
                std::vector<Fq> msg(mpk.p.k_dec, 0);
                if (!msg_text.empty()) {
                    std::istringstream ms(msg_text);
                    uint64_t b;
                    size_t i = 0;
                    while (ms >> b && i < msg.size()) msg[i++] = b & 1;
                    if (i != msg.size()) throw UsageError("message needs k_dec bits");
                } else {
                    for (auto& b : msg) b = rng.coin();
                }
                auto ct = hamming_ibe_encrypt(mpk, id, msg, rng);
                std::ostringstream os;
                write_hamming_ct(os, ct);
                write_file(out_path, os.str());
                std::ostringstream m;
                for (size_t i = 0; i < msg.size(); ++i) {
                    if (i) m << ' ';
                    m << msg[i];
                }
                emit({{"schema", 1},
                      {"command", "ibe-encrypt"},
                      {"metric", "hamming"},
                      {"message", m.str()},
                      {"ciphertext", out_path}},
                     as_json);
            } else {
                throw UsageError("metric must be rank or hamming");
            }
            return 0;
        }

        if (ibe_decrypt->parsed()) {
            std::istringstream mis(read_file(mpk_path));
            RankIbeMpk mpk = read_rank_ibe_mpk(mis);
            std::istringstream uis(read_file(uk_path));
            IbeUserKey uk = read_user_key(uis, *mpk.field);
            std::istringstream cis(read_file(ct_path));
            RankCiphertext ct = read_rank_ct(cis, *mpk.field);
            auto msg = rank_ibe_decrypt(mpk, uk, ct);
            if (!msg) throw OperationalError("decoding failed");
            std::string text = serialize_msg(*mpk.field, *msg);
            if (!out_path.empty()) write_file(out_path, text + "\n");
            emit({{"schema", 1}, {"command", "ibe-decrypt"}, {"message", text}}, as_json);
            return 0;
        }

        if (bench->parsed()) {
            Profile prof = need_profile(profile_name);
            if (!prof.solve_scale) throw UsageError("profile is validators-only");
            std::ostringstream csv;
            csv << "pipeline,trial,seconds,success,retries\n";
            auto row = [&](const char* pipeline, unsigned trial, double secs, bool ok,
                           uint64_t retries) {
                csv << pipeline << ',' << trial << ',' << secs << ',' << (ok ? 1 : 0) << ','
                    << retries << '\n';
            };
            for (unsigned t = 0; t < trials; ++t) {
                Rng rng(seed + t);
                switch (prof.kind) {
                case Profile::Kind::Ranksign: {
                    auto t0 = std::chrono::steady_clock::now();
                    auto kp = ranksign_keygen(prof.sgn, rng);
                    row("keygen", t, seconds_since(t0), true, 0);
                    t0 = std::chrono::steady_clock::now();
                    auto sig = ranksign_sign(kp.sk, "bench-" + std::to_string(t), rng);
                    row("sign", t, seconds_since(t0), sig.has_value(), 0);
                    if (sig) {
                        t0 = std::chrono::steady_clock::now();
                        bool ok = ranksign_verify(kp.pk, "bench-" + std::to_string(t), *sig);
                        row("verify", t, seconds_since(t0), ok, 0);
                    }
                    if (prof.sgn.q() == 2) {
                        t0 = std::chrono::steady_clock::now();
                        AttackReport rep;
                        auto fk = attack_ranksign(kp.pk, Rank1Strategy::Enumerate, rng, &rep);
                        row("attack-ranksign", t, seconds_since(t0), fk.has_value(),
                            rep.candidates_tried);
                        if (fk) {
                            t0 = std::chrono::steady_clock::now();
                            auto fs = forged_sign(kp.pk, *fk, "bench-forge", rng);
                            row("forged-sign", t, seconds_since(t0), fs.has_value(), 0);
                        }
                    }
                    break;
                }
                case Profile::Kind::Rsl: {
                    auto t0 = std::chrono::steady_clock::now();
                    auto [inst, sec] = rsl_gen_instance(prof.rsl, rng);
                    row("rsl-gen", t, seconds_since(t0), true, 0);
                    t0 = std::chrono::steady_clock::now();
                    auto got = rsl_attack(inst, RslStrategy::Exhaustive, rng, nullptr, threads);
                    row("rsl-attack", t, seconds_since(t0), got && *got == sec.F, 0);
                    break;
                }
                case Profile::Kind::RankIbe: {
                    auto t0 = std::chrono::steady_clock::now();
                    auto keys = rank_ibe_setup(prof.rank_ibe, rng);
                    row("ibe-setup", t, seconds_since(t0), true, 0);
                    t0 = std::chrono::steady_clock::now();
                    auto uk = rank_ibe_extract(keys, "bench@" + std::to_string(t), rng);
                    row("ibe-extract", t, seconds_since(t0), uk.has_value(), 0);
                    if (!uk) break;
                    const ExtField& F = *keys.mpk.field;
                    VecFqm msg(prof.rank_ibe.k_dec, F.zero());
                    for (auto& x : msg) x = F.random(rng);
                    t0 = std::chrono::steady_clock::now();
                    auto ct = rank_ibe_encrypt(keys.mpk, uk->id, msg, rng);
                    row("ibe-encrypt", t, seconds_since(t0), true, 0);
                    t0 = std::chrono::steady_clock::now();
                    auto dec = rank_ibe_decrypt(keys.mpk, *uk, ct);
                    row("ibe-decrypt", t, seconds_since(t0), dec && *dec == msg, 0);
                    break;
                }
                case Profile::Kind::HammingIbe: {
                    auto t0 = std::chrono::steady_clock::now();
                    auto mpk = hamming_ibe_setup(prof.hamming, rng);
                    std::vector<Fq> msg(prof.hamming.k_dec);
                    for (auto& b : msg) b = rng.coin();
                    auto ct = hamming_ibe_encrypt(mpk, "bench", msg, rng);
                    row("hamming-encrypt", t, seconds_since(t0), true, 0);
                    t0 = std::chrono::steady_clock::now();
                    auto res = break_hamming_ibe(mpk, "bench", ct, rng, 1024, threads);
                    row("attack-hamming-ibe", t, seconds_since(t0), res.ok && res.msg == msg,
                        res.total_iterations);
                    break;
                }
                case Profile::Kind::Check:
                    throw UsageError("profile is validators-only");
                }
            }
            if (!out_path.empty()) {
                write_file(out_path, csv.str());
                emit({{"schema", 1}, {"command", "bench"}, {"csv", out_path}}, as_json);
            } else {
                std::cout << csv.str();
            }
            return 0;
        }

        throw UsageError("no subcommand matched");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const OperationalError& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    } catch (const AssumptionError& e) {
        std::cerr << "anomaly (" << e.assumption << "): " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "anomaly: " << e.what() << '\n';
        return 3;
    }
}
