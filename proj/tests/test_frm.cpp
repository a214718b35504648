#include <doctest.h>

#include <random>

#include "cogmap/frm.hpp"
#include "cogmap/modelio.hpp"
#include "helpers.hpp"

using namespace cogmap;
using testutil::bits;
using testutil::seed_at;

namespace {

void check_fixed_pair_closure(const FrmModel& model, const HiddenPair& p) {
    REQUIRE(p.is_fixed_pair());
    const StateVector& x = p.domain_pattern.states.front();
    const StateVector& y = p.range_pattern.states.front();
    CHECK(threshold_update(forward(model, x), y.clamped()) == y);
    CHECK(threshold_update(backward(model, y), x.clamped()) == x);
}

} // namespace

TEST_CASE("forward and backward products") {
    const FrmModel t = load_fixture("ch5_public_T").frm();
    const FrmModel m = load_fixture("ch5_pwd_M").frm();

    SUBCASE("single domain node picks out its row") {
        const RawVector raw = forward(t, seed_at(t.domain(), {0}));
        CHECK(raw.scores() == std::vector<std::int64_t>{0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
    }
    SUBCASE("zero state maps to zero") {
        CHECK(forward(t, testutil::sv(t.domain(), "000000000")).scores() ==
              std::vector<std::int64_t>(11, 0));
        CHECK(backward(t, testutil::sv(t.range(), "00000000000")).scores() ==
              std::vector<std::int64_t>(9, 0));
    }
    SUBCASE("forward sums columns over the on rows") {
        const RawVector raw = forward(m, testutil::sv(m.domain(), "111110"));
        CHECK(raw.scores() == std::vector<std::int64_t>{3, 2, 2, 5, 1});
    }
    SUBCASE("backward through several on columns") {
        const RawVector raw = backward(t, seed_at(t.range(), {2, 3, 8}));
        CHECK(raw.scores() == std::vector<std::int64_t>{3, 1, 2, -2, -2, 2, 0, 2, 0});
    }
    SUBCASE("backward through a single column reads it off") {
        const RawVector raw = backward(t, seed_at(t.range(), {5}));
        CHECK(raw.scores() == std::vector<std::int64_t>{0, 0, -1, 1, 1, -1, 0, 0, 0});
    }
    SUBCASE("space mismatch") {
        CHECK_THROWS_AS(forward(t, seed_at(t.range(), {0})), StructuralError);
        CHECK_THROWS_AS(backward(t, seed_at(t.domain(), {0})), StructuralError);
    }
}

TEST_CASE("public-person survey: depression and isolation runs") {
    const FrmModel t = load_fixture("ch5_public_T").frm();

    SUBCASE("depressed (D1) reaches the reported fixed pair") {
        const HiddenPair p = hidden_pair(t, seed_at(t.domain(), {0}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "111001111");
        CHECK(bits(p.range_pattern.states.front()) == "01111001111");
        CHECK(p.iterations() == 3);
        check_fixed_pair_closure(t, p);
    }
    SUBCASE("sympathetic caretakers (R6) reach the reported fixed pair") {
        const HiddenPair p = hidden_pair(t, seed_at(t.range(), {5}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "000110000");
        CHECK(bits(p.range_pattern.states.front()) == "00000110000");
        check_fixed_pair_closure(t, p);
    }
    SUBCASE("self image (D4) settles on sympathy and care") {
        const HiddenPair p = hidden_pair(t, seed_at(t.domain(), {3}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "000110000");
        CHECK(bits(p.range_pattern.states.front()) == "00000110000");
    }
    SUBCASE("isolation (R11) joins the depression pattern") {
        const HiddenPair p = hidden_pair(t, seed_at(t.range(), {10}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "111001111");
        CHECK(bits(p.range_pattern.states.front()) == "01111001111");
    }
}

TEST_CASE("respondent survey: every node wakes the whole system") {
    const FrmModel m = load_fixture("ch5_pwd_M").frm();

    SUBCASE("inferiority complex (D1)") {
        const HiddenPair p = hidden_pair(m, seed_at(m.domain(), {0}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "111110");
        CHECK(bits(p.range_pattern.states.front()) == "11111");
        check_fixed_pair_closure(m, p);
    }
    SUBCASE("no vocational training (R5) wakes everything including D6") {
        const HiddenPair p = hidden_pair(m, seed_at(m.range(), {4}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.range_pattern.states.front()) == "11111");
        // D6 carries negative edges into R1 and R2, so it falls back off.
        CHECK(bits(p.domain_pattern.states.front()) == "111110");
    }
}

TEST_CASE("caretaker survey: care switches nothing on") {
    const FrmModel p_model = load_fixture("ch5_caretaker_P").frm();

    SUBCASE("well taken care of (D1) influences nothing") {
        const HiddenPair p = hidden_pair(p_model, seed_at(p_model.domain(), {0}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "1000000");
        CHECK(bits(p.range_pattern.states.front()) == "000000");
        check_fixed_pair_closure(p_model, p);
    }
    SUBCASE("depression (D2) wakes everything but D1") {
        const HiddenPair p = hidden_pair(p_model, seed_at(p_model.domain(), {1}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "0111111");
        CHECK(bits(p.range_pattern.states.front()) == "111111");
    }
    SUBCASE("poverty (R1) gives the same equilibrium") {
        const HiddenPair p = hidden_pair(p_model, seed_at(p_model.range(), {0}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "0111111");
        CHECK(bits(p.range_pattern.states.front()) == "111111");
    }
    SUBCASE("social stigma (R4) gives the same equilibrium") {
        const HiddenPair p = hidden_pair(p_model, seed_at(p_model.range(), {3}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "0111111");
        CHECK(bits(p.range_pattern.states.front()) == "111111");
    }
}

TEST_CASE("NGO survey runs") {
    const FrmModel z = load_fixture("ch5_ngo_Z").frm();

    SUBCASE("government-assistance awareness (D1)") {
        const HiddenPair p = hidden_pair(z, seed_at(z.domain(), {0}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "111110");
        CHECK(bits(p.range_pattern.states.front()) == "11110");
    }
    SUBCASE("humiliation (R3) reaches the same pattern") {
        const HiddenPair p = hidden_pair(z, seed_at(z.range(), {2}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "111110");
        CHECK(bits(p.range_pattern.states.front()) == "11110");
    }
    SUBCASE("poor maintenance (D4) leaves R1 off") {
        const HiddenPair p = hidden_pair(z, seed_at(z.domain(), {3}));
        REQUIRE(p.is_fixed_pair());
        CHECK(bits(p.domain_pattern.states.front()) == "111111");
        CHECK(bits(p.range_pattern.states.front()) == "01111");
    }
}

TEST_CASE("seed validation") {
    const FrmModel t = load_fixture("ch5_public_T").frm();
    CHECK_THROWS_AS(hidden_pair(t, testutil::sv(t.domain(), "000000000")), UsageError);
    CHECK_THROWS_AS(hidden_pair(t, seed_at(testutil::space_n(4), {0})), StructuralError);
}

TEST_CASE("engine agrees with the naive pair simulator") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 3; // 2..4
        const std::size_t m = 2 + rng() % 2; // 2..3
        const RelationalMatrix rel = testutil::random_relational(rng, n, m);
        const FrmModel model{rel};
        const bool domain_side = rng() % 2 == 0;
        const std::size_t side_n = domain_side ? n : m;
        const auto on = testutil::random_seed_set(rng, side_n);
        const StateVector seed =
            StateVector::seed(domain_side ? rel.domain() : rel.range(), on);

        const HiddenPair p = hidden_pair(model, seed);
        const oracle::PairRun expected =
            oracle::frm_run(testutil::to_oracle(rel), testutil::to_oracle(seed), domain_side);

        REQUIRE(p.domain_pattern.trace.size() == expected.domain_history.size());
        for (std::size_t i = 0; i < expected.domain_history.size(); ++i) {
            CHECK(testutil::to_oracle(p.domain_pattern.trace[i]) == expected.domain_history[i]);
            CHECK(testutil::to_oracle(p.range_pattern.trace[i]) == expected.range_history[i]);
        }
        CHECK(p.domain_pattern.cycle_entry == expected.cycle_entry);
        CHECK(p.domain_pattern.period() == expected.period);

        // aligned ranges: trace[i] of the range is the forward image of the
        // aligned domain state
        for (std::size_t i = 0; i < p.domain_pattern.trace.size(); ++i) {
            const StateVector expected_range =
                threshold_update(forward(model, p.domain_pattern.trace[i]),
                                 p.range_pattern.trace[i].clamped());
            CHECK(p.range_pattern.trace[i] == expected_range);
        }

        if (p.is_fixed_pair()) check_fixed_pair_closure(model, p);

        // termination in at most 2^n domain states
        CHECK(p.domain_pattern.trace.size() <= (std::size_t{1} << n));
    }
}

TEST_CASE("domain and range periods always agree") {
    // The range state determines the next domain state and vice versa, so the
    // two cycles are conjugate; the mismatch flag is wired but can never fire
    // for this dynamics.
    std::mt19937 rng(43);
    for (int trial = 0; trial < 400; ++trial) {
        const RelationalMatrix rel = testutil::random_relational(rng, 3, 2);
        const bool domain_side = rng() % 2 == 0;
        const auto on = testutil::random_seed_set(rng, domain_side ? 3 : 2);
        const StateVector seed =
            StateVector::seed(domain_side ? rel.domain() : rel.range(), on);
        const HiddenPair p = hidden_pair(FrmModel{rel}, seed);
        CHECK(p.range_pattern.period() == p.domain_pattern.period());
        CHECK_FALSE(p.period_mismatch);
    }
}
