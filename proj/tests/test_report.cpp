#include "gradstar/errors.hpp"
#include "gradstar/report.hpp"

#include "doctest.h"

using namespace gradstar;

TEST_CASE("algebra descriptor round trip")
{
    const auto u = GradedStarAlgebra::ut3_z2();
    const auto j = to_json(descriptor_of(u));
    CHECK(j.dump() == R"({"m":3,"group":"Z_2","tuple":[[0],[1],[0]],"involution":"reflection"})");
    const auto back = descriptor_from_json(j).build();
    CHECK(same_degree_map(back.grading(), u.grading()));

    const auto f4 = GradedStarAlgebra::finest(4, InvolutionKind::symplectic);
    const auto d = descriptor_from_json(to_json(descriptor_of(f4)));
    CHECK(d.involution == InvolutionKind::symplectic);
    CHECK(same_degree_map(d.build().grading(), f4.grading()));

    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"m":3})")), ParseError);
    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"m":2,"group":"Z","tuple":[[0]]})")).build(), ParseError);
}

TEST_CASE("codimension report schema")
{
    const auto r = codimension(GradedStarAlgebra::finest(2, InvolutionKind::reflection), 2);
    const auto j = to_json(r);
    for (const auto* key : {"algebra", "n", "assignment-blocks", "total", "method", "discrepancies"})
        CHECK(j.contains(key));
    CHECK(j["total"] == 8);
    std::size_t ranks = 0;
    for (const auto& b : j["assignment-blocks"]) {
        for (const auto* key : {"degrees", "rows", "cols", "rank"})
            CHECK(b.contains(key));
        ranks += b["rank"].get<std::size_t>() * b["multiplicity"].get<std::size_t>();
    }
    CHECK(ranks == 8);
    CHECK(to_json(r).dump() == j.dump());
    const auto csv = to_csv(r);
    CHECK(csv.rfind("algebra,n,degrees,rows,cols,rank,multiplicity\n", 0) == 0);
}

TEST_CASE("count records")
{
    const std::vector<CountRecord> rs{{2, 2, 0, 4, "enumerator"}, {2, 2, 1, 4, "enumerator"}};
    CHECK(to_csv(rs) == "m,n,k,N_k,method\n2,2,0,4,enumerator\n2,2,1,4,enumerator\n");
    CHECK(to_json(rs[1]).dump() == R"({"m":2,"n":2,"k":1,"count":4,"method":"enumerator"})");
}

TEST_CASE("big integers become strings")
{
    const Integer big = Integer(1) << 80;
    CHECK(integer_json(big).is_string());
    CHECK(integer_json(42).is_number_integer());
}

TEST_CASE("csv quoting")
{
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
}
