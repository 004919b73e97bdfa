#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "runpaths/render.hpp"

using namespace runpaths;

TEST_CASE("csv quoting") {
    CHECK(render::csv_quote("plain") == "plain");
    CHECK(render::csv_quote("a,b") == "\"a,b\"");
    CHECK(render::csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(render::csv_quote("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("table csv layout") {
    tables::CountTable t = tables::build_s_table(2, -1, 1, 4);
    std::string csv = render::table_to_csv(t);
    // header with column indices, rows top-down, includes the negative row
    CHECK(csv == "m\\n,0,1,2\n1,1,1,0\n0,1,0,-1\n-1,1,-1,-1\n");
}

TEST_CASE("absent cells are empty in csv and null in json") {
    tables::CountTable grid;
    grid.kind = tables::TableKind::DyckUp;
    grid.r = 4;
    grid.n_min = 0;
    grid.m_min = 0;
    grid.cells = {{Int(1), std::nullopt}, {std::nullopt, Int(1)}};
    std::string csv = render::table_to_csv(grid);
    CHECK(csv == "m\\n,0,1\n1,,1\n0,1,\n");
    std::string json = render::table_to_json(grid);
    CHECK(json.find("null") != std::string::npos);
    CHECK(json.find("\"kind\": \"dyck-up\"") != std::string::npos);
}

TEST_CASE("polynomial json rendering") {
    polyseq::Polynomial p7 = polyseq::p_poly(7, 4);
    std::string json = render::poly_to_json(p7);
    CHECK(json.find("\"degree\": 7") != std::string::npos);
    CHECK(json.find("\"-4\"") != std::string::npos);  // constant term p_7(0)
    CHECK(json.find("\"1/5040\"") != std::string::npos);
    CHECK(render::poly_to_json(polyseq::Polynomial()).find("\"degree\": -1") !=
          std::string::npos);
}

TEST_CASE("series renders exact rationals") {
    series::TruncatedSeries s(
        std::vector<Rat>{Rat(1), make_rat(Int(-1), Int(2)), Rat(3)}, 2);
    CHECK(render::series_to_csv(s) == "n,coefficient\n0,1\n1,-1/2\n2,3\n");
    std::string json = render::series_to_json(s);
    CHECK(json.find("\"-1/2\"") != std::string::npos);
}

TEST_CASE("identical inputs render identically") {
    tables::CountTable a = tables::build_p_table(6, 6, 4);
    tables::CountTable b = tables::build_p_table(6, 6, 4);
    CHECK(render::table_to_csv(a) == render::table_to_csv(b));
    CHECK(render::table_to_json(a) == render::table_to_json(b));
}

TEST_CASE("report rendering") {
    CheckReport rep;
    rep.name = "demo";
    rep.checks_run = 2;
    rep.notes.push_back("informational");
    std::string text = render::report_to_text(rep);
    CHECK(text.find("demo: pass") != std::string::npos);
    rep.fail("a check", "n=1", "lhs=0 rhs=1");
    text = render::report_to_text(rep);
    CHECK(text.find("FAIL") != std::string::npos);
    std::string json = render::report_to_json(rep);
    CHECK(json.find("\"status\": \"refuted\"") != std::string::npos);
}
