#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lrc/code.hpp"
#include "lrc/constructions.hpp"
#include "lrc/prng.hpp"

using namespace lrc;

namespace {

Field gf2() { return Field::make(2, 1); }

LinearCode repetition(int n) {
    return LinearCode::make(gf2(), Matrix{std::vector<felem>(n, 1)});
}

LinearCode spc3() {
    return LinearCode::make(gf2(), Matrix{{1, 0, 1}, {0, 1, 1}});
}

LinearCode simplex(int m) { return LinearCode::make(gf2(), simplex_generator(m)); }

} // namespace

TEST_CASE("min distance examples") {
    CHECK(min_distance(simplex(3)) == 4);
    CHECK(min_distance(repetition(3)) == 3);
    CHECK(min_distance(spc3()) == 2);

    Codebook single(gf2(), 3, {{0, 1, 0}});
    CHECK(min_distance(single) == infinite_distance);

    Codebook dup(gf2(), 2, {{0, 1}, {0, 1}, {1, 1}});
    CHECK(min_distance(dup) == 1); // distinct pairs only
    CHECK(duplicate_count(dup) == 1);
}

TEST_CASE("codebook dimension is log_q of distinct size") {
    Codebook book = expand_codebook(simplex(3));
    CHECK(dimension(book) == doctest::Approx(3.0));
    Codebook five(gf2(), 4, {{0, 0, 0, 0}, {1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 0}});
    CHECK(dimension(five) == doctest::Approx(std::log2(5.0)));
}

TEST_CASE("projection entropy examples") {
    Codebook book = expand_codebook(simplex(3));
    CHECK(projection_entropy(book, std::vector<int>{}) == doctest::Approx(0.0));
    // columns bin(1), bin(2) carry the two leading message bits
    CHECK(projection_entropy(book, std::vector<int>{0, 1}) == doctest::Approx(2.0));
    std::vector<int> all_coords;
    for (int c = 0; c < 7; ++c) all_coords.push_back(c);
    CHECK(projection_entropy(book, all_coords) == doctest::Approx(3.0));
}

TEST_CASE("repair set verification on the simplex code") {
    Codebook book = expand_codebook(simplex(3));
    // parity row through columns 1,2,3 (0-based 0,1,2)
    CHECK(verify_repair_set(book, 0, std::vector<int>{1, 2}));
    CHECK_FALSE(verify_repair_set(book, 0, std::vector<int>{1}));
    std::vector<int> others;
    for (int c = 1; c < 7; ++c) others.push_back(c);
    CHECK(verify_repair_set(book, 0, others));
    CHECK_THROWS_AS((void)verify_repair_set(book, 0, std::vector<int>{0, 1}), std::invalid_argument);
}

TEST_CASE("repair sets are monotone under supersets") {
    Codebook book = expand_codebook(simplex(3));
    CounterRng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int i = (int)rng.uniform_below(7);
        std::vector<int> base;
        for (int c = 0; c < 7; ++c)
            if (c != i && rng.uniform_below(2)) base.push_back(c);
        if (!verify_repair_set(book, i, base)) continue;
        std::vector<int> super = base;
        for (int c = 0; c < 7; ++c)
            if (c != i && std::find(super.begin(), super.end(), c) == super.end()) {
                super.push_back(c);
                CHECK(verify_repair_set(book, i, super));
            }
    }
}

TEST_CASE("locality examples") {
    CHECK(locality_of(simplex(3)).r == 2);
    CHECK(locality_of(repetition(3)).r == 1);
    LinearCode doubled = LinearCode::make(gf2(), Matrix{{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(locality_of(doubled).r == 1);

    // d = 1: coordinate 0 is unrecoverable
    CHECK_THROWS_AS((void)locality_of(Codebook(gf2(), 2, {{0, 0}, {1, 0}})), std::domain_error);
}

TEST_CASE("locality search respects the subset budget") {
    SearchLimits tiny;
    tiny.max_subsets = 2;
    CHECK_THROWS_AS((void)locality_of(expand_codebook(simplex(3)), tiny), BudgetExceeded);
}

TEST_CASE("repair round trip over every codeword and coordinate") {
    CodeArtifact artifact = build_simplex(3);
    Codebook book = expand_codebook(std::get<LinearCode>(artifact.code));
    for (const auto& word : book.words) {
        for (int i = 0; i < book.n; ++i) {
            // corrupt the erased position to prove repair never consults it
            std::vector<felem> erased = word;
            erased[i] = (felem)(1 - word[i]);
            CHECK(repair_erasure(book, erased, i, artifact.profile) == word[i]);
        }
    }
}

TEST_CASE("repair examples") {
    // [3,1] repetition: any neighbor copies
    LinearCode rep = repetition(3);
    Codebook rep_book = expand_codebook(rep);
    RepairProfile rep_profile{{{1}, {0}, {0}}};
    CHECK(repair_erasure(rep_book, std::vector<felem>{1, 1, 1}, 0, rep_profile) == 1);

    // [3,2] single parity check: erased coordinate is the sum of the others
    Codebook spc_book = expand_codebook(spc3());
    RepairProfile spc_profile{{{1, 2}, {0, 2}, {0, 1}}};
    CHECK(repair_erasure(spc_book, std::vector<felem>{0, 1, 1}, 0, spc_profile) == 0);
    CHECK(repair_erasure(spc_book, std::vector<felem>{0, 0, 1}, 0, spc_profile) == 1);

    // unknown projection
    Codebook rep_only(gf2(), 3, {{0, 0, 0}});
    CHECK_THROWS_AS((void)repair_erasure(rep_only, std::vector<felem>{1, 1, 1}, 0, rep_profile),
                    std::invalid_argument);
}

TEST_CASE("core set construction on the simplex code") {
    CodeArtifact artifact = build_simplex(3);
    Codebook book = expand_codebook(std::get<LinearCode>(artifact.code));

    std::vector<int> core = build_core_set(book, artifact.profile, 1);
    CHECK(core == std::vector<int>{0, 1, 2});
    CHECK(projection_count(book, core) <= 4); // H <= t*r = 2

    // t = 2 exceeds k/r = 1.5
    CHECK_THROWS_AS((void)build_core_set(book, artifact.profile, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)build_core_set(book, artifact.profile, 0), std::invalid_argument);

    CodeArtifact m4 = build_simplex(4);
    Codebook book4 = expand_codebook(std::get<LinearCode>(m4.code));
    std::vector<int> core4 = build_core_set(book4, m4.profile, 2);
    CHECK(core4.size() == 6);
    CHECK(projection_count(book4, core4) <= 16); // H <= 4
}

TEST_CASE("core set postcondition on seeded ensembles") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        CodeArtifact sample = sample_parity_ensemble(2, 2, 9, 8, seed);
        const Codebook& book = std::get<Codebook>(sample.code);
        const double k = dimension(book);
        for (int t = 1; t * 2 <= (int)(k + 1e-9); ++t) {
            std::vector<int> core = build_core_set(book, sample.profile, t);
            CHECK((int)core.size() == 3 * t);
            double h = projection_entropy(book, core);
            CHECK(h <= 2.0 * t + 1e-9);
        }
    }
}

TEST_CASE("shortening extracts the best prefix class") {
    Codebook book = expand_codebook(simplex(3));
    Codebook shortened = shorten_best_prefix(book, std::vector<int>{0, 1, 2}, 2.0);
    CHECK(shortened.n == 4);
    std::set<std::vector<felem>> words(shortened.words.begin(), shortened.words.end());
    CHECK(words == std::set<std::vector<felem>>{{0, 0, 0, 0}, {1, 1, 1, 1}});
    CHECK(min_distance(shortened) == 4);

    Codebook same = shorten_best_prefix(book, std::vector<int>{}, 0.0);
    CHECK(same.n == 7);
    CHECK(distinct_count(same) == 8);

    CHECK_THROWS_AS((void)shorten_best_prefix(book, std::vector<int>{0, 1, 2}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("shortening keeps dimension and distance on random ensembles") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        CodeArtifact sample = sample_parity_ensemble(2, 2, 9, 8, seed);
        const Codebook& book = std::get<Codebook>(sample.code);
        std::vector<int> core = build_core_set(book, sample.profile, 1);
        const double h = projection_entropy(book, core);
        Codebook shortened = shorten_best_prefix(book, core, 2.0);
        CHECK(shortened.n == 6);
        // |shortened| * count_I >= |book distinct| makes dim >= k - H(I) exact
        CHECK(distinct_count(shortened) * projection_count(book, core) >= distinct_count(book));
        int d0 = min_distance(book);
        if (distinct_count(shortened) >= 2 && d0 != infinite_distance)
            CHECK(min_distance(shortened) >= d0);
        (void)h;
    }
}

TEST_CASE("encode examples") {
    LinearCode code = simplex(3);
    CHECK(encode(code, std::vector<felem>{1, 0, 0}) == code.gen[0]);
    CHECK(encode(code, std::vector<felem>{0, 0, 0}) == std::vector<felem>(7, 0));
    std::vector<felem> w = encode(code, std::vector<felem>{1, 1, 0});
    for (int j = 1; j <= 7; ++j) {
        felem expect = (felem)(((j >> 0) & 1) ^ ((j >> 1) & 1));
        CHECK(w[j - 1] == expect);
    }
    CHECK_THROWS_AS((void)encode(code, std::vector<felem>{1, 0}), std::invalid_argument);
}

TEST_CASE("projection counts are submodular on linear codes") {
    // For a linear code the count of distinct projections onto I is
    // q^rank(columns I), a matroid rank in the exponent, hence submodular.
    // Nonlinear codebooks can violate this, so the corpus here is linear.
    CHECK(projection_counts_submodular(expand_codebook(simplex(3))));
    CHECK(projection_counts_submodular(expand_codebook(spc3())));
    CHECK(projection_counts_submodular(expand_codebook(repetition(5))));
    CodeArtifact concat = build_concat_rs_spc(2, 2, 2);
    CHECK(projection_counts_submodular(expand_codebook(std::get<LinearCode>(concat.code))));
    CounterRng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix gen(3, std::vector<felem>(8));
        for (auto& row : gen)
            for (auto& v : row) v = (felem)rng.uniform_below(2);
        LinearCode code = LinearCode::make_unchecked(gf2(), gen);
        CHECK(projection_counts_submodular(expand_codebook(code)));
    }
}

TEST_CASE("log-count projections are not submodular for general codebooks") {
    // {(0,y,z)} over GF(4) plus one stray word: the pair I1 = {0,1},
    // I2 = {0,2} yields 5*5 < 17*2.
    Field f4 = Field::make(2, 2);
    std::vector<std::vector<felem>> words;
    for (felem y = 0; y < 4; ++y)
        for (felem z = 0; z < 4; ++z) words.push_back({0, y, z});
    words.push_back({1, 0, 0});
    Codebook book(f4, 3, std::move(words));
    CHECK_FALSE(projection_counts_submodular(book));
}

TEST_CASE("linear code validation") {
    CHECK_THROWS_AS((void)LinearCode::make(gf2(), Matrix{{1, 0, 1}, {1, 0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)LinearCode::make(gf2(), Matrix{{1, 0, 1}}, Matrix{{1, 0, 0}}),
                    std::invalid_argument);
    LinearCode ok = LinearCode::make(gf2(), Matrix{{1, 1, 1}}, Matrix{{1, 1, 0}, {0, 1, 1}});
    CHECK(ok.n() == 3);
    Codebook book = expand_codebook(ok);
    CHECK(distinct_count(book) == 2); // q^k distinct codewords
}

TEST_CASE("weight scan agrees with pairwise distance over extension fields") {
    // the incremental message scan walks element indices, which is the
    // subtle path for non-prime alphabets
    for (auto [p, m] : {std::pair<int, int>{3, 1}, {2, 2}, {2, 3}, {5, 1}}) {
        Field f = Field::make(p, m);
        CounterRng rng(p * 100 + m);
        for (int trial = 0; trial < 6; ++trial) {
            const int n = 7 + (int)rng.uniform_below(3);
            const int k = 2 + (int)rng.uniform_below(2);
            Matrix gen(k, std::vector<felem>(n));
            for (int i = 0; i < k; ++i) {
                for (auto& v : gen[i]) v = rng.uniform(f);
                for (int j = 0; j < k; ++j) gen[i][j] = (felem)(i == j ? 1 : 0);
            }
            LinearCode code = LinearCode::make(f, gen);
            CHECK(min_distance(code) == min_distance(expand_codebook(code)));
        }
    }
}

TEST_CASE("expansion budget is enforced") {
    SearchLimits tiny;
    tiny.max_enumeration = 4;
    CHECK_THROWS_AS((void)expand_codebook(simplex(3), tiny), BudgetExceeded);
    CHECK_THROWS_AS((void)min_distance(simplex(3), tiny), BudgetExceeded);
    CHECK_THROWS_AS((void)min_distance(expand_codebook(simplex(3)), tiny), BudgetExceeded);
}
