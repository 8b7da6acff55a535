#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"

using namespace vlink;

namespace {

const std::set<MoveKind> kAllKinds = {MoveKind::Xi,    MoveKind::R1Add, MoveKind::R1Remove,
                                      MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3};

MoveInstance xi(int c, int i) {
    MoveInstance m;
    m.kind = MoveKind::Xi;
    m.circle = c;
    m.pos = i;
    return m;
}

}  // namespace

TEST_CASE("xi swaps endpoints two apart") {
    auto d = parse_gauss_code("O1+ U2+ O2+ U1+");
    CHECK(serialize(apply_move(d, xi(0, 0))) == "O2+ U2+ O1+ U1+");
    CHECK(serialize(apply_move(d, xi(0, 2))) == "O2+ U2+ O1+ U1+");  // wraps around
    CHECK_THROWS_AS(apply_move(d, xi(0, 4)), DiagramError);
    CHECK_THROWS_AS(apply_move(parse_gauss_code("O1+ U1+"), xi(0, 0)), DiagramError);
}

TEST_CASE("r1 addition and removal") {
    auto d = parse_gauss_code("O1+ U1+");
    MoveInstance add;
    add.kind = MoveKind::R1Add;
    add.circle = 0;
    add.gap = 1;
    add.sign = -1;
    add.order = PairOrder::TargetFirst;
    auto after = apply_move(d, add);
    CHECK(serialize(after) == "O1+ U2- O2- U1+");

    MoveInstance rem;
    rem.kind = MoveKind::R1Remove;
    rem.x = 2;
    CHECK(serialize(apply_move(after, rem)) == serialize(d));

    rem.x = 1;  // endpoints adjacent only through the wrap
    CHECK(serialize(apply_move(d, rem)) == "()");
    CHECK(serialize(apply_move(after, rem)) == "U2- O2-");
    CHECK_THROWS_AS(apply_move(parse_gauss_code("O1+ U2- U1+ O2-"), rem),
                    DiagramError);  // separated endpoints
}

TEST_CASE("r2 addition patterns") {
    auto d = parse_gauss_code("O1+ U1+\n()");
    MoveInstance add;
    add.kind = MoveKind::R2Add;
    add.circle = 0;
    add.gap = 1;
    add.circle_t = 1;
    add.gap_t = 0;
    add.sign = 1;
    add.pattern = R2Pattern::Interleaved;
    CHECK(serialize(apply_move(d, add)) == "O1+ O2+ O3- U1+\nU2+ U3-");
    add.pattern = R2Pattern::Nested;
    CHECK(serialize(apply_move(d, add)) == "O1+ O2+ O3- U1+\nU3- U2+");

    // same circle, same gap: block order decides which pair comes first
    add.circle_t = 0;
    add.gap_t = 1;
    add.order = PairOrder::SourceFirst;
    CHECK(serialize(apply_move(d, add)) == "O1+ O2+ O3- U3- U2+ U1+\n()");
    add.order = PairOrder::TargetFirst;
    CHECK(serialize(apply_move(d, add)) == "O1+ U3- U2+ O2+ O3- U1+\n()");
}

TEST_CASE("r2 removal requires the full pattern") {
    auto d = parse_gauss_code("O1+ O2- U1+ U2-");
    MoveInstance rem;
    rem.kind = MoveKind::R2Remove;
    rem.x = 1;
    rem.y = 2;
    CHECK(serialize(apply_move(d, rem)) == "()");
    auto same_sign = parse_gauss_code("O1+ O2+ U1+ U2+");
    CHECK_THROWS_AS(apply_move(same_sign, rem), DiagramError);
    auto nested = parse_gauss_code("O1+ O2- U2- U1+");
    CHECK(serialize(apply_move(nested, rem)) == "()");
    auto apart = parse_gauss_code("O1+ O3+ O2- U3+ U1+ U2-");
    CHECK_THROWS_AS(apply_move(apart, rem), DiagramError);
}

TEST_CASE("r3 matches both sides and is an involution") {
    auto d = parse_gauss_code("O1+ O2+ U1+ O3+ U2+ U3+");
    MoveInstance m;
    m.kind = MoveKind::R3;
    m.p1 = {0, 0};
    m.p2 = {0, 2};
    m.p3 = {0, 4};
    auto once = apply_move(d, m);
    CHECK(serialize(once) == "O2+ O1+ O3+ U1+ U3+ U2+");
    CHECK(serialize(apply_move(once, m)) == serialize(d));

    auto mixed_signs = parse_gauss_code("O1+ O2+ U1+ O3- U2+ U3-");
    CHECK_THROWS_AS(apply_move(mixed_signs, m), DiagramError);
}

TEST_CASE("enumerated moves apply cleanly and invert exactly") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto d = testutil::random_diagram(rng, 1 + static_cast<int>(rng() % 2), 5);
        auto moves = enumerate_moves(d, kAllKinds, d.chord_count() + 2);
        CHECK(std::is_sorted(moves.begin(), moves.end()));
        CHECK(std::adjacent_find(moves.begin(), moves.end()) == moves.end());
        for (const auto& m : moves) {
            auto after = apply_move(d, m);  // constructor re-validates
            auto back = apply_move(after, invert(d, m));
            CHECK(isomorphic(back, d));
            ++checked;
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("chord count deltas match the move kind") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        auto d = testutil::random_diagram(rng, 2, 4);
        for (const auto& m : enumerate_moves(d, kAllKinds, d.chord_count() + 2)) {
            int delta = apply_move(d, m).chord_count() - d.chord_count();
            switch (m.kind) {
                case MoveKind::Xi:
                case MoveKind::R3: CHECK(delta == 0); break;
                case MoveKind::R1Add: CHECK(delta == 1); break;
                case MoveKind::R1Remove: CHECK(delta == -1); break;
                case MoveKind::R2Add: CHECK(delta == 2); break;
                case MoveKind::R2Remove: CHECK(delta == -2); break;
            }
        }
    }
}

TEST_CASE("additions respect the chord budget") {
    auto d = parse_gauss_code("O1+ U1+");
    auto none = enumerate_moves(d, {MoveKind::R1Add, MoveKind::R2Add}, 1);
    CHECK(none.empty());
    auto only_r1 = enumerate_moves(d, {MoveKind::R1Add, MoveKind::R2Add}, 2);
    for (const auto& m : only_r1) CHECK(m.kind == MoveKind::R1Add);
}

TEST_CASE("move specs round trip") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto d = testutil::random_diagram(rng, 2, 4);
        for (const auto& m : enumerate_moves(d, kAllKinds, d.chord_count() + 2))
            CHECK(parse_move_spec(to_spec(m)) == m);
    }
    CHECK_THROWS_AS(parse_move_spec("zz:c=1"), DiagramError);
    CHECK_THROWS_AS(parse_move_spec("xi:c=0,i=0"), DiagramError);
    CHECK_THROWS_AS(parse_move_spec("xi:i=0"), DiagramError);
    CHECK_THROWS_AS(parse_move_spec("r1+:c=1,g=0,s=*"), DiagramError);
}

TEST_CASE("cross macro swaps adjacent endpoint pairs") {
    auto d = parse_gauss_code("O1+ U1+ O2- U2- O3+ U3+");
    MacroWindow w{0, 1, 1, PairOrder::SourceFirst};
    auto moves = expand_macro(d, MacroKind::Cross, MacroDir::Forward, w);
    CHECK(moves.size() == 2);
    CHECK(serialize(apply_moves(d, moves)) == "O1+ U2- O3+ U1+ O2- U3+");
}

TEST_CASE("shell slide macro moves a shell pair past an endpoint") {
    // x and y interleaved shells followed by a spare endpoint
    auto d = parse_gauss_code("O1+ O2- U1+ U2- O3+\nU3+");
    MacroWindow w{0, 0, 1, PairOrder::SourceFirst};
    REQUIRE(macro_matches(d, MacroKind::ShellSlide, MacroDir::Forward, w));
    auto moves = expand_macro(d, MacroKind::ShellSlide, MacroDir::Forward, w);
    CHECK(moves.size() == 2);
    auto after = apply_moves(d, moves);
    CHECK(serialize(after) == "O3+ O2- O1+ U2- U1+\nU3+");
    // the result matches the backward pattern at the same window
    CHECK(macro_matches(after, MacroKind::ShellSlide, MacroDir::Backward, w));
    auto back = apply_moves(after, expand_macro(after, MacroKind::ShellSlide,
                                                MacroDir::Backward, w));
    CHECK(isomorphic(back, d));
}

TEST_CASE("shell sign macro flips a shell against a fresh pair") {
    auto d = parse_gauss_code("O1- U2+ U1-\nO2+");
    MacroWindow w{0, 0, 1, PairOrder::SourceFirst};
    REQUIRE(macro_matches(d, MacroKind::ShellSign, MacroDir::Forward, w));
    auto after = apply_moves(d, expand_macro(d, MacroKind::ShellSign, MacroDir::Forward, w));
    CHECK(after.chord_count() == d.chord_count() + 2);
    // result carries the backward pattern, and unwinding restores the start
    REQUIRE(macro_matches(after, MacroKind::ShellSign, MacroDir::Backward, w));
    auto back = apply_moves(after, expand_macro(after, MacroKind::ShellSign,
                                                MacroDir::Backward, w));
    CHECK(isomorphic(back, d));
}

TEST_CASE("shell pair cancel macro removes opposite pairs") {
    auto d = parse_gauss_code("O9+ U9+\n()");
    MacroWindow w{0, 1, 1, PairOrder::SourceFirst};
    auto grown = apply_moves(d, expand_macro(d, MacroKind::ShellPairCancel,
                                             MacroDir::Backward, w));
    CHECK(grown.chord_count() == d.chord_count() + 4);
    REQUIRE(macro_matches(grown, MacroKind::ShellPairCancel, MacroDir::Forward, w));
    auto moves = expand_macro(grown, MacroKind::ShellPairCancel, MacroDir::Forward, w);
    CHECK(moves.size() == 4);
    CHECK(isomorphic(apply_moves(grown, moves), d));
}

TEST_CASE("shell triple macro trades a straddling chord for a swap") {
    auto d = parse_gauss_code("O1+ U2- O3+ U1+ O2- U3+");
    MacroWindow w{0, 0, 1, PairOrder::SourceFirst};
    REQUIRE(macro_matches(d, MacroKind::ShellTriple, MacroDir::Forward, w));
    auto moves = expand_macro(d, MacroKind::ShellTriple, MacroDir::Forward, w);
    CHECK(moves.size() == 2);
    auto after = apply_moves(d, moves);
    CHECK(serialize(after) == "O3+ U2- O2- U3+");  // straddled endpoints swapped
    // growing back at the same spot restores the start up to isomorphism
    MacroWindow back{0, 0, d.sign(1),
                     d.circle(0)[0].role == Role::Source ? PairOrder::SourceFirst
                                                         : PairOrder::TargetFirst};
    auto again = apply_moves(after, expand_macro(after, MacroKind::ShellTriple,
                                                 MacroDir::Backward, back));
    CHECK(isomorphic(again, d));
}

TEST_CASE("odd swap macro transposes neighbours on odd circles") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        GaussDiagram d = testutil::random_diagram(rng, 2, 5);
        int c = static_cast<int>(rng() % 2);
        int len = static_cast<int>(d.circle(c).size());
        if (len < 3 || len % 2 == 0) continue;
        int i = static_cast<int>(rng() % len);
        MacroWindow w{c, i, 1, PairOrder::SourceFirst};
        auto moves = expand_macro(d, MacroKind::OddSwap, MacroDir::Forward, w);
        CHECK(static_cast<int>(moves.size()) <= 3 * len);
        for (const auto& m : moves) CHECK(m.kind == MoveKind::Xi);
        auto got = apply_moves(d, moves);
        auto circles = d.circles();
        std::swap(circles[c][i], circles[c][(i + 1) % len]);
        CHECK(isomorphic(got, GaussDiagram(circles, d.chords())));
    }
    // even circles are rejected
    auto d = parse_gauss_code("O1+ U1+ O2+ U2+");
    CHECK(!macro_matches(d, MacroKind::OddSwap, MacroDir::Forward, {0, 0, 1,
                                                                    PairOrder::SourceFirst}));
}

TEST_CASE("exchange macros expand to endpoint-swap moves only") {
    auto d = parse_gauss_code("O4+ O1- U2+ U1- O3+ O5- U6+ U5- U3+\nO2+ U4+ O6+");
    for (auto [kind, window, len] :
         {std::tuple{MacroKind::Exchange1, 1, 3}, std::tuple{MacroKind::Exchange2, 0, 1},
          std::tuple{MacroKind::Exchange3, 0, 3}}) {
        MacroWindow w{0, window, 1, PairOrder::SourceFirst};
        REQUIRE(macro_matches(d, kind, MacroDir::Forward, w));
        auto moves = expand_macro(d, kind, MacroDir::Forward, w);
        CHECK(static_cast<int>(moves.size()) == len);
        for (const auto& m : moves) CHECK(m.kind == MoveKind::Xi);
        // applying twice is the identity: the macros are involutions
        auto once = apply_moves(d, moves);
        auto twice = apply_moves(once, expand_macro(once, kind, MacroDir::Forward, w));
        CHECK(isomorphic(twice, d));
    }
}

TEST_CASE("all matching macro windows expand and preserve the profile") {
    using enum MacroKind;
    std::mt19937_64 rng(25);
    int expanded = 0;
    for (int trial = 0; trial < 25; ++trial) {
        auto d = testutil::random_diagram(rng, 2, 5);
        auto profile = invariant_profile(d);
        for (auto k : {Cross, OddSwap, ShellSlide, ShellSign, ShellPairCancel, Exchange1,
                       Exchange2, Exchange3, ShellTriple}) {
            for (auto dir : {MacroDir::Forward, MacroDir::Backward}) {
                for (int c = 0; c < 2; ++c) {
                    int len = static_cast<int>(d.circle(c).size());
                    for (int i = 0; i <= len; ++i) {
                        MacroWindow w{c, i, rng() % 2 ? 1 : -1,
                                      rng() % 2 ? PairOrder::SourceFirst
                                                : PairOrder::TargetFirst};
                        if (!macro_matches(d, k, dir, w)) {
                            if (i < len)
                                CHECK_THROWS_AS(expand_macro(d, k, dir, w), DiagramError);
                            continue;
                        }
                        auto after = apply_moves(d, expand_macro(d, k, dir, w));
                        CHECK(profile_difference(invariant_profile(after), profile).empty());
                        ++expanded;
                    }
                }
            }
        }
    }
    CHECK(expanded > 200);
}
