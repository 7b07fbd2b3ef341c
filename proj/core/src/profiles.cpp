#include "ranklab/profiles.hpp"

namespace ranklab {

namespace {

std::vector<Profile> make_profiles() {
    std::vector<Profile> out;

    // desk signing profiles: n = 8, k = 4, m = 9, d = 2, t = 1, t' = 1, w = 4
    {
        Profile p;
        p.name = "desk-ranksign";
        p.kind = Profile::Kind::Ranksign;
        p.description = "desk-scale signing profile over F_16 (decoder-friendly field size)";
        p.sgn = LrpcParams{4, 9, 8, 4, 2, 1, 1, 4};
        out.push_back(p);
        p.name = "desk-ranksign-q2";
        p.description = "desk-scale signing profile over F_2 (enumeration-friendly)";
        p.sgn = LrpcParams{1, 9, 8, 4, 2, 1, 1, 4};
        out.push_back(p);
    }
    {
        Profile p;
        p.name = "desk-rsl";
        p.kind = Profile::Kind::Rsl;
        p.description = "desk-scale support-learning instance (n=10, k=3, N=8, w=2, m=10)";
        p.rsl = RslParams{1, 10, 10, 3, 8, 2};
        out.push_back(p);
    }
    {
        Profile p;
        p.name = "desk-rank-ibe";
        p.kind = Profile::Kind::RankIbe;
        p.description =
            "desk-scale rank encryption: signing profile with t'=0, w=3 plus a weight-2 "
            "decodable code (n_dec=12, k_dec=3), noise weight 1";
        p.rank_ibe.sgn = LrpcParams{4, 9, 8, 4, 2, 1, 0, 3};
        p.rank_ibe.n_dec = 12;
        p.rank_ibe.k_dec = 3;
        p.rank_ibe.d_dec = 2;
        p.rank_ibe.w_dec = 1;
        out.push_back(p);
    }
    {
        Profile p;
        p.name = "desk-hamming";
        p.kind = Profile::Kind::HammingIbe;
        p.description = "desk-scale Hamming encryption target (n_sgn=60, k_sgn=40, w_dec=2)";
        p.hamming = HammingIbeParams{60, 40, 2, 30, 10};
        out.push_back(p);
    }

    // published signing parameter rows: validators and counters only
    auto table_row = [](const std::string& name, unsigned a, unsigned m, unsigned n,
                        unsigned k, unsigned t, unsigned tprime, unsigned w,
                        const std::string& desc) {
        Profile p;
        p.name = name;
        p.kind = Profile::Kind::Ranksign;
        p.solve_scale = false;
        p.description = desc;
        p.sgn = LrpcParams{a, m, n, k, 2, t, tprime, w};
        return p;
    };
    out.push_back(table_row("table1-row1", 32, 21, 20, 10, 2, 2, 9,
                            "128-bit signing row (20,10,21,2,2) over GF(2^32)"));
    out.push_back(table_row("table1-row2", 24, 24, 24, 12, 2, 2, 10,
                            "128-bit signing row (24,12,24,2,2) over GF(2^24)"));
    out.push_back(table_row("table1-row3", 32, 27, 24, 12, 3, 3, 12,
                            "192-bit signing row (24,12,27,2,3) over GF(2^32)"));
    out.push_back(table_row("table1-row4", 32, 30, 28, 14, 3, 3, 13,
                            "256-bit signing row (28,14,30,2,3) over GF(2^32)"));

    {
        Profile p;
        p.name = "table2";
        p.kind = Profile::Kind::Check;
        p.solve_scale = false;
        p.description = "published rank-encryption row (100,80,96,4,96,9) over GF(2^192); "
                        "fails the support-learning guard";
        p.check = Profile::CheckParams{192, 96, 100, 80, 96, 9, 10, 4};
        out.push_back(p);
    }
    {
        Profile p;
        p.name = "ibe-recipe";
        p.kind = Profile::Kind::Check;
        p.solve_scale = false;
        p.description = "repaired rank-encryption recipe (m=n_sgn=100, k_sgn=75, n_dec=96, "
                        "k_dec=4, w_dec=4); passes every constraint";
        p.check = Profile::CheckParams{192, 100, 100, 75, 96, 4, 14, 4};
        out.push_back(p);
    }
    return out;
}

} // namespace

const std::vector<Profile>& builtin_profiles() {
    static const std::vector<Profile> profiles = make_profiles();
    return profiles;
}

std::optional<Profile> find_profile(const std::string& name) {
    for (const auto& p : builtin_profiles())
        if (p.name == name) return p;
    if (name == "desk-ranksign-q16") return find_profile("desk-ranksign");
    return std::nullopt;
}

} // namespace ranklab
