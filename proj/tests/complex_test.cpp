#include <doctest.h>

#include <random>

#include "symtc/complex.hpp"
#include "symtc/errors.hpp"
#include "test_helpers.hpp"

using namespace symtc;

TEST_CASE("parse text format") {
    Complex c = parse_complex("0,1\n1,2\n0,2\n", "circle.cx");
    CHECK(c.vertex_count == 3);
    CHECK(c.maximal_simplices.size() == 3);
    auto grades = closure(c);
    REQUIRE(grades.size() == 2);
    CHECK(grades[0].size() == 3);
    CHECK(grades[1].size() == 3);
}

TEST_CASE("closure of a solid tetrahedron") {
    Complex c = parse_complex("0,1,2,3\n");
    auto grades = closure(c);
    REQUIRE(grades.size() == 4);
    CHECK(grades[0].size() == 4);
    CHECK(grades[1].size() == 6);
    CHECK(grades[2].size() == 4);
    CHECK(grades[3].size() == 1);
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(parse_complex("0,0,1\n"), InputError);
    CHECK_THROWS_AS(parse_complex(""), InputError);
    CHECK_THROWS_AS(parse_complex("# only a comment\n\n"), InputError);
    CHECK_THROWS_AS(parse_complex("0,-1\n"), InputError);
    CHECK_THROWS_AS(parse_complex("0,x\n"), InputError);
    CHECK_THROWS_AS(parse_complex("# vertices: 2\n0,1,2\n"), InputError);  // out of range
    // error messages carry file/line context
    try {
        parse_complex("0,1\n2,2\n", "bad.cx");
        CHECK(false);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("bad.cx:2") != std::string::npos);
    }
}

TEST_CASE("comments, blank lines, directives") {
    Complex c = parse_complex("# name: demo\n# vertices: 4\n\n0,1 # trailing comment\n2\n3\n");
    CHECK(c.vertex_count == 4);
    REQUIRE(c.name.has_value());
    CHECK(*c.name == "demo");
    CHECK(c.maximal_simplices.size() == 3);
}

TEST_CASE("json format round trip") {
    Complex c = parse_complex(R"({"vertices": 3, "simplices": [[0,1],[1,2],[0,2]], "name": "circle"})");
    CHECK(c.vertex_count == 3);
    CHECK(c.name == "circle");
    Complex again = parse_complex(serialize_complex_json(c));
    CHECK(again == c);
    CHECK(serialize_complex_json(again) == serialize_complex_json(c));
    CHECK_THROWS_AS(parse_complex("{\"simplices\": []}"), InputError);
}

TEST_CASE("generators") {
    Complex s1 = make_sphere(1);
    auto g1 = closure(s1);
    CHECK(g1[0].size() == 3);
    CHECK(g1[1].size() == 3);

    Complex s2 = make_sphere(2);
    auto g2 = closure(s2);
    CHECK(g2[0].size() == 4);
    CHECK(g2[1].size() == 6);
    CHECK(g2[2].size() == 4);

    Complex s0 = make_sphere(0);
    auto g0 = closure(s0);
    CHECK(g0.size() == 1);
    CHECK(g0[0].size() == 2);

    auto rp = closure(make_rp2());
    CHECK(rp[0].size() == 6);
    CHECK(rp[1].size() == 15);
    CHECK(rp[2].size() == 10);

    auto t = closure(make_torus());
    CHECK(t[0].size() == 9);
    CHECK(t[1].size() == 27);
    CHECK(t[2].size() == 18);

    CHECK(closure(make_point()).size() == 1);
    CHECK(closure(make_interval())[1].size() == 1);
    CHECK_THROWS_AS(make_sphere(-1), InputError);
}

TEST_CASE("generator dispatch") {
    CHECK(generate("sphere:2") == make_sphere(2));
    CHECK(generate("torus") == make_torus());
    CHECK_THROWS_AS(generate("sphere"), InputError);
    CHECK_THROWS_AS(generate("torus:3"), InputError);
    CHECK_THROWS_AS(generate("klein"), InputError);
    CHECK_THROWS_AS(generate("sphere:x"), InputError);
}

TEST_CASE("parse/serialize round trip is the identity") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        Complex c = symtc::testing::random_complex(rng);
        if (trial % 3 == 0) c.name = "t" + std::to_string(trial);
        Complex back = parse_complex(serialize_complex(c));
        CHECK(back == c);
        // the serializer output is a fixed point
        CHECK(serialize_complex(back) == serialize_complex(c));
        Complex jback = parse_complex(serialize_complex_json(c));
        CHECK(jback == c);
    }
    for (const char* name : {"sphere:0", "sphere:1", "sphere:3", "torus", "rp2", "point"}) {
        Complex c = generate(name);
        CHECK(parse_complex(serialize_complex(c)) == c);
        CHECK(parse_complex(serialize_complex_json(c)) == c);
    }
}
