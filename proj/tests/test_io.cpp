#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "squeeze/io.hpp"

using namespace squeeze;

TEST_CASE("ideal files") {
    MonomialIdeal I = read_ideal_text("# squeezed ball ideal\nx1*x3\nx1*x4\n\nx2*x4\n");
    CHECK(I.generators().size() == 3);
    CHECK(read_ideal_text(write_ideal_text(I)) == I);
    CHECK(read_ideal_text("1\n").is_unit());
    CHECK(read_ideal_text("").is_zero());
    CHECK_THROWS(read_ideal_text("x0\n"));
}

TEST_CASE("order ideal files") {
    std::string text = "m=3\n1\nx1\nx2\nx3\nx1*x3\nx2*x3\nx3^2\n";
    ShiftedOrderIdeal U = read_order_ideal_text(text);
    CHECK(U.variable_count() == 3);
    CHECK(U.monomials().size() == 7);
    CHECK(read_order_ideal_text(write_order_ideal_text(U)) == U);
    CHECK_THROWS(read_order_ideal_text("1\nx1\n"));            // missing header
    CHECK_THROWS(read_order_ideal_text("m=2\n1\nx1\n"));       // x2 missing
}

TEST_CASE("facet files") {
    std::string text = "n=4\n1 2 3\n2 3 4\n";
    SimplicialComplex c = read_facets_text(text);
    CHECK(c.vertex_count() == 4);
    CHECK(c.facets().size() == 2);
    CHECK(read_facets_text(write_facets_text(c)) == c);
    CHECK_THROWS(read_facets_text("n=2\n1 3\n"));
    CHECK_THROWS(read_facets_text("1 2\n"));
}

TEST_CASE("content hash is stable") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
    CHECK(fnv1a64_hex("squeeze") == fnv1a64_hex("squeeze"));
}
