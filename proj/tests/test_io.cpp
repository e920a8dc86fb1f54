#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "jp/io.hpp"
#include "jp/norms.hpp"
#include "jp/operators.hpp"

using jp::FiniteVector;
namespace jio = jp::io;

TEST_CASE("doubles are written with round-trip precision") {
    for (double v : {0.1, 1.0 / 3.0, -std::pow(2.0, -0.5), 1e-300, 1e300, 12345.678901234567,
                     3.0, 0.0}) {
        const std::string s = jio::format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("vector file round-trips byte-identically") {
    jio::VectorFile vf;
    vf.p = 2.5;
    vf.vectors = {FiniteVector(std::vector<double>{0.1, -1.0 / 3.0, 0.0, 5e-17}),
                  FiniteVector{}, jp::spike(3, jp::Exponent(2.5))};
    vf.meta["K"] = 3;
    vf.meta["eps"] = 0.4;
    vf.meta["mode"] = "manual";

    const std::string once = jio::serialize_vector_file(vf);
    const jio::VectorFile back = jio::parse_vector_file(once);
    CHECK(back.p == vf.p);
    REQUIRE(back.vectors.size() == vf.vectors.size());
    CHECK(back.vectors[0] == vf.vectors[0]);
    CHECK(back.vectors[2] == vf.vectors[2]);
    CHECK(back.meta["K"] == 3);
    CHECK(back.meta["eps"] == 0.4);

    const std::string twice = jio::serialize_vector_file(back);
    CHECK(once == twice);
}

TEST_CASE("empty vectors array still serialises cleanly") {
    jio::VectorFile vf;
    vf.p = 2.0;
    const std::string s = jio::serialize_vector_file(vf);
    const jio::VectorFile back = jio::parse_vector_file(s);
    CHECK(back.vectors.empty());
    CHECK(jio::serialize_vector_file(back) == s);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(jio::parse_vector_file("{"), jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("[]"), jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"vectors\": [[1]]}"), jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"p\": \"2\", \"vectors\": []}"), jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"p\": 2}"), jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"p\": 2, \"vectors\": [1]}"), jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"p\": 2, \"vectors\": [[\"x\"]]}"),
                    jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"p\": 2, \"vectors\": [[NaN]]}"), jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"p\": 2, \"vectors\": [[1e999]]}"),
                    jio::ParseError);
    CHECK_THROWS_AS(jio::parse_vector_file("{\"p\": 2, \"vectors\": [], \"meta\": 7}"),
                    jio::ParseError);
    CHECK_THROWS_AS(jio::read_vector_file("/nonexistent/path.json"), jio::ParseError);
}

TEST_CASE("report writers") {
    const jp::Exponent p2(2.0);

    const auto c = jp::construct::build(3, 1.0, p2, jp::construct::Mode::manual, {8, 8});
    std::ostringstream cs;
    jio::write_construction_report_csv(cs, c);
    CHECK(cs.str().find("k,n_k,m_k,gamma_k,eps_k,E_k,support_length\n") == 0);
    CHECK(cs.str().find("\n1,1,1,1,") != std::string::npos);
    CHECK(cs.str().find("\n3,8,64,") != std::string::npos);

    const auto rep = jp::certify::certify_linf_embedding(c.vectors, p2);
    std::ostringstream ds;
    jio::write_distortion_report_csv(ds, rep);
    CHECK(ds.str().find("pattern,norm\n") == 0);
    CHECK(ds.str().find("+++") != std::string::npos);
    CHECK(ds.str().find("distortion,") != std::string::npos);

    std::ostringstream ns;
    jio::write_norm_report_csv(
        ns, {jp::jp_norm_exact(FiniteVector(std::vector<double>{1, -1, 1}), p2)});
    CHECK(ns.str().find("0,3,9,0 1 2 3\n") != std::string::npos);
}
