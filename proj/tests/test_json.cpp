#include "ugggr/json_io.hpp"

#include <doctest.h>

using namespace ugggr;

TEST_SUITE("json") {

TEST_CASE("partition and polynomial forms") {
    CHECK(to_json(Partition{3, 1}).dump() == "[3,1]");
    CHECK(partition_from_json(json::parse("[2,1,1]")) == Partition{2, 1, 1});
    CHECK_THROWS(partition_from_json(json::parse("[1,2]")));
    CHECK_THROWS(partition_from_json(json::parse("{}")));
    QPoly q = QPoly::q();
    CHECK(to_json(q * q - 1).dump() == "[-1,0,1]");
    QPoly h = (q * q - q - 2) * QPoly(Rational(1, 2));
    CHECK(to_json(h).dump() == "[-1,\"-1/2\",\"1/2\"]");
    CHECK(qpoly_from_json(to_json(h)) == h);
}

TEST_CASE("datum schema") {
    auto j = json::parse(R"({"n":4,"slots":[{"size":1,"partition":[2,1],"label":"a1"},{"size":1,"partition":[1],"label":"a2"}]})");
    auto d = datum_from_json(j);
    CHECK(d.n == 4);
    CHECK(d.slots.size() == 2);
    CHECK(to_json(d) == j);
    CHECK(datum_from_json(to_json(d)) == d);
    CHECK_THROWS_AS(datum_from_json(json::parse(R"({"n":5,"slots":[{"size":1,"partition":[2,1]}]})")),
                    std::invalid_argument);
    // n is inferred when omitted
    CHECK(datum_from_json(json::parse(R"({"slots":[{"size":2,"partition":[1]}]})")).n == 2);
}

TEST_CASE("shape round trip") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& f : enumerate_families(n)) CHECK(shape_from_json(to_json(f)) == f);
}

TEST_CASE("branch term round trip") {
    for (const auto& f : enumerate_families(4))
        for (int l = 1; l <= 4; ++l)
            for (const auto& t : branch(representative(f), l, Mode::canonical)) {
                auto back = branch_term_from_json(to_json(t));
                CHECK(back.coeff == t.coeff);
                CHECK(back.datum == t.datum);
            }
    auto a = representative(enumerate_families(4).front());
    auto t = branch(a, 3, Mode::paper).at(0);
    CHECK(to_json(t)["exclusions"].dump() == R"({"b1":["a1","a2","a3","a4"]})");
}

TEST_CASE("table round trip") {
    for (Mode mode : {Mode::canonical, Mode::paper})
        for (const auto& lam : partitions_of(4)) {
            auto t = gggr_table(4, lam, mode);
            auto j = to_json(t);
            CHECK(j.at("mode") == to_string(mode));
            auto back = table_from_json(json::parse(j.dump()));
            CHECK(back.n == t.n);
            CHECK(back.orbit == t.orbit);
            CHECK(back.mode == t.mode);
            REQUIRE(back.entries.size() == t.entries.size());
            for (size_t i = 0; i < t.entries.size(); ++i) {
                CHECK(back.entries[i].shape == t.entries[i].shape);
                CHECK(back.entries[i].f == t.entries[i].f);
            }
        }
}

TEST_CASE("report form") {
    auto j = to_json(consistency_check(2, Mode::paper));
    CHECK(j.at("pass") == false);
    CHECK(j.at("identities").size() == 2);
    CHECK(j.at("sum_of_squares").contains("residual"));
}

}
