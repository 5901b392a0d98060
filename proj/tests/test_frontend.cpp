#include <cstdio>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "quipot/dsl.hpp"
#include "quipot/report.hpp"

using namespace quipot;

namespace {

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parsing the worked example file") {
    auto doc = parse_document(qptest::read_file(qptest::data_file("example34.qp")));
    CHECK(doc.vertices == std::vector<std::string>{"1", "2", "3"});
    REQUIRE(doc.arrows.size() == 3);
    CHECK(doc.arrows[0].name == "a");
    CHECK(doc.arrows[0].degree == -1);
    CHECK(doc.n == 4);
    REQUIRE(doc.potential.size() == 1);
    CHECK(doc.potential[0].coeff == 1);
    CHECK(doc.potential[0].word == std::vector<std::string>{"a", "b", "c"});

    auto e = elaborate(doc);
    CHECK(e.n == 4);
    CHECK(e.quiver.arrow_count() == 3);
    CHECK(e.potential.terms().size() == 1);
}

TEST_CASE("print and reparse round-trips the document") {
    auto doc = parse_document(qptest::read_file(qptest::data_file("example34.qp")));
    std::string printed = print_document(doc);
    CHECK(parse_document(printed) == doc);
    CHECK(print_document(parse_document(printed)) == printed);
}

TEST_CASE("statements may span lines and accept comments") {
    auto doc = parse_document("vertex 1; vertex 2;\n"
                              "arrow f : 1\n  -> 2 # yes\n  deg -3;\n"
                              "n\n=\n5;\n"
                              "potential = 1/1 f# nope\n;\n# trailing\n");
    CHECK(doc.vertices.size() == 2);
    CHECK(doc.arrows[0].degree == -3);
    CHECK(doc.n == 5);
    CHECK(doc.potential.size() == 1);
}

TEST_CASE("diagrammatic order reverses potential words") {
    std::string base = "vertex 1; vertex 2; vertex 3;\n"
                       "arrow a : 1 -> 2 deg -1;\narrow b : 3 -> 1 deg 0;\n"
                       "arrow c : 2 -> 3 deg 0;\nn = 4;\n";
    auto standard = parse_document(base + "potential = 1 a b c;\n");
    auto flipped = parse_document(base + "potential = 1 c b a;\n", true);
    CHECK(standard == flipped);
    CHECK_NOTHROW(elaborate(flipped));
    // without the flag the reversed word does not compose
    auto broken = parse_document(base + "potential = 1 c b a;\n");
    CHECK_THROWS_AS(elaborate(broken), ParseError);
}

TEST_CASE("rational coefficients") {
    std::string text = "vertex 1;\narrow x : 1 -> 1 deg 0;\narrow y : 1 -> 1 deg 0;\nn = 3;\n"
                       "potential = -2/4 x y + 1 y x;\n";
    auto e = elaborate(parse_document(text));
    // yx rotates onto xy with no sign (all degrees 0): coefficients merge
    REQUIRE(e.potential.terms().size() == 1);
    CHECK(e.potential.terms().begin()->second == Rational(1, 2));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_document("vertex 1;\nbogus 2;\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 1);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
    try {
        parse_document("vertex 1;\narrow f : 1 -> 1 deg 1/2;\nn = 3;");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_document("vertex 1;"), ParseError);                 // missing n
    CHECK_THROWS_AS(parse_document("n = 3; n = 3;"), ParseError);             // duplicate n
    CHECK_THROWS_AS(parse_document("vertex 1; n = 3; potential = 1;"), ParseError);
    CHECK_THROWS_AS(parse_document("vertex 1;\narrow l : 1 -> 1 deg 0;\nn = 3;\n"
                                   "potential = 1/0 l;"),
                    ParseError);                                              // zero denominator
    CHECK_THROWS_AS(parse_document("vertex @;"), ParseError);                 // stray character
    CHECK_THROWS_AS(elaborate(parse_document("vertex 1; n = 2;")), ParseError);  // n < 3
}

TEST_CASE("elaboration diagnoses bad potential words") {
    std::string base = "vertex 1; vertex 2;\narrow f : 1 -> 2 deg 0;\n"
                       "arrow g : 2 -> 1 deg 0;\nn = 3;\n";
    CHECK_THROWS_AS(elaborate(parse_document(base + "potential = 1 f h;")), ParseError);
    CHECK_THROWS_AS(elaborate(parse_document(base + "potential = 1 f f;")), ParseError);
    CHECK_THROWS_AS(elaborate(parse_document(base + "potential = 1 f;")), ParseError);
    CHECK_NOTHROW(elaborate(parse_document(base + "potential = 1 f g;")));
}

TEST_CASE("cli: gamma output and exit codes") {
    std::string out;
    int rc = cli({"gamma", qptest::data_file("example34.qp")}, &out);
    CHECK(rc == 0);
    for (const char* line :
         {"|a*| = -1\n", "|b*| = -2\n", "|c*| = -2\n", "|t_1| = -3\n", "|t_2| = -3\n",
          "|t_3| = -3\n", "d(a*) = bc\n", "d(b*) = ca\n", "d(c*) = ab\n",
          "d(t_1) = bb* + a*a\n", "d(t_2) = aa* - c*c\n", "d(t_3) = cc* - b*b\n"}) {
        INFO(line);
        CHECK(out.find(line) != std::string::npos);
    }
}

TEST_CASE("cli: h0 verdict lines") {
    std::string out;
    CHECK(cli({"h0", qptest::data_file("example34.qp")}, &out) == 0);
    CHECK(out.find("verdict: finite\n") != std::string::npos);
    CHECK(out.find("dimension: 5\n") != std::string::npos);
    CHECK(out.find("basis: e_1 e_2 e_3 b c\n") != std::string::npos);
}

TEST_CASE("cli: exit codes distinguish failure kinds") {
    std::string err;
    CHECK(cli({"check", "/nonexistent/file.qp"}, nullptr, &err) == 3);
    CHECK(err.find("cannot open") != std::string::npos);

    TempFile bad("quipot_bad_degree.qp");
    {
        std::ofstream f(bad.path);
        f << "vertex 1;\narrow l : 1 -> 1 deg 0;\nn = 4;\npotential = 1 l l;\n";
    }
    // degree 0 cycle at n = 4 violates 3 - n = -1
    CHECK(cli({"check", bad.path}) == 1);
    CHECK(cli({"gamma", bad.path}) == 1);

    TempFile scope("quipot_scope.qp");
    {
        std::ofstream f(scope.path);
        f << "vertex 1; vertex 2;\narrow f : 1 -> 2 deg -1;\nn = 3;\n";
    }
    CHECK(cli({"check", scope.path}) == 0);   // valid, just outside the h0 scope
    CHECK(cli({"h0", scope.path}) == 3);

    CHECK(cli({"h0", qptest::data_file("example34.qp"), "--max-steps", "0"}) == 2);
    CHECK(cli({"orbit", "--n", "3", "--m", "2"}) == 0);
    CHECK(cli({"orbit", "--n", "3", "--m", "2", "--cy-exponent", "2"}) == 1);
    CHECK(cli({"orbit", "--n", "3", "--m", "2", "--type", "D"}) == 3);
    CHECK(cli({"nope"}) == 3);
    CHECK(cli({"--help"}) == 0);
}

TEST_CASE("cli: json reports are valid and carry the verdicts") {
    TempFile j1("quipot_rep1.json");
    CHECK(cli({"report", qptest::data_file("example34.qp"), "--json", j1.path}) == 0);
    auto parsed = nlohmann::json::parse(qptest::read_file(j1.path));
    CHECK(parsed["schema"] == 1);
    CHECK(parsed["command"] == "report");
    CHECK(parsed["version"] == kVersion);
    CHECK(parsed["input_sha256"] ==
          sha256_hex(qptest::read_file(qptest::data_file("example34.qp"))));
    CHECK(parsed["verdicts"]["check"]["d_squared_zero"] == true);
    CHECK(parsed["verdicts"]["h0"]["dimension"] == 5);
    CHECK(parsed["verdicts"]["h0"]["verdict"] == "finite");
    CHECK(parsed["bounds"]["max_steps"] == 10000);

    TempFile j2("quipot_orbit.json");
    CHECK(cli({"orbit", "--n", "3", "--m", "1", "--json", j2.path}) == 0);
    auto oj = nlohmann::json::parse(qptest::read_file(j2.path));
    CHECK(oj["verdicts"]["domain_size"] == 9);
    CHECK(oj["verdicts"]["cy"]["violations"] == 0);
    CHECK(oj["verdicts"]["tilting"]["endo_dim"] == 6);
}

TEST_CASE("sha256 known answers") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
