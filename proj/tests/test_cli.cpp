#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commands.hpp"
#include "foliation/corpus.hpp"
#include "foliation/document.hpp"
#include "foliation/parse.hpp"

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace foliation;
using nlohmann::json;

namespace {

FieldElem q(long a, long b = 1) { return FieldElem(make_rational(a, b)); }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "foliate");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    int code = foliate::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "foliate_test_cli";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("parse_form examples")
{
    DiffForm a = parse_form("(x - y) dx + x dy");
    CHECK(a.A == parse_poly("x - y"));
    CHECK(a.B == parse_poly("x"));
    DiffForm b = parse_form("x^2 dy - (y + x) dx");
    CHECK(b.A == -parse_poly("y + x"));
    CHECK(b.B == parse_poly("x^2"));
    DiffForm c = parse_form("  -3/2 x*y^2 dx+dy ");
    CHECK(c.A.coeff(1, 2) == q(-3, 2));
    CHECK(c.B == parse_poly("1"));
    CHECK(parse_form("2xy dx") == parse_form("2 x y dx"));
}

TEST_CASE("parse errors carry a position")
{
    try {
        parse_form("dx dy");
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.token() == 2);
        CHECK(std::string(e.what()).find("token 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_form("x dx +"), ParseError);
    CHECK_THROWS_AS(parse_form("(x dx"), ParseError);
    CHECK_THROWS_AS(parse_form("x^y dx"), ParseError);
    CHECK_THROWS_AS(parse_form("1.5 dx"), ParseError);
    CHECK_THROWS_AS(parse_form("x + y"), ParseError);
}

TEST_CASE("render round trip on the corpus")
{
    for (const auto& c : corpus::all_cases()) {
        CAPTURE(c.name);
        CHECK(parse_form(render(c.form)) == c.form);
    }
    for (const auto& name : corpus::names())
        CHECK(parse_form(render(corpus::by_name(name))) == corpus::by_name(name));
}

TEST_CASE("corpus registry")
{
    CHECK(corpus::by_name("linear", {{"lambda", "-1/2"}}) == parse_form("-1/2 x dy - y dx"));
    CHECK(corpus::by_name("model_sn", {{"k", "2"}, {"mu", "1/3"}}) == parse_form("x^3 dy - y(1 + 1/3 x^2) dx"));
    CHECK(corpus::by_name("omega_n", {{"n", "2"}}) == parse_form("(x/2 - y^2) dx + 2 x y dy"));
    CHECK(corpus::by_name("euler") == parse_form("x^2 dy - (y + x) dx"));
    CHECK(corpus::by_name("psi_pullback") == parse_form("(y^2 - 1) dx - 2 y x^2 dy"));
    CHECK_THROWS(corpus::by_name("nope"));
    CHECK_THROWS(corpus::by_name("omega_n", {{"n", "two"}}));
}

TEST_CASE("tree document content")
{
    TreeAnalysis a = analyze_tree(reduce(parse_form("(x - y) dx + x dy")));
    json d = tree_document(a);
    REQUIRE(d["components"].size() == 1);
    CHECK(d["components"][0]["chern"] == -1);
    CHECK(d["components"][0]["dicritical"] == false);
    REQUIRE(d["singularities"].size() == 1);
    CHECK(d["singularities"][0]["class"] == "saddle-node");
    CHECK(d["singularities"][0]["data"]["k"] == 1);
    CHECK(d["singularities"][0]["data"]["mu"]["coefficients"] == json::array({"-1"}));
    CHECK(d["singularities"][0]["cs"]["1"]["coefficients"] == json::array({"-1"}));
    CHECK(d["cs_check"]["pass"] == true);
    CHECK(d["strongly_presentable"] == true);
    CHECK(d["branches"].size() == 1);

    // exact coefficient vectors for points in Q(sqrt 2)
    json s = tree_document(analyze_tree(reduce(corpus::sqrt2_star())));
    bool quadratic = false;
    for (const auto& p : s["singularities"])
        if (p["location"]["field"]["degree"] == 2) {
            quadratic = true;
            CHECK(p["location"]["coefficients"].size() == 2);
            for (const auto& c : p["location"]["coefficients"])
                CHECK(c.is_string());
        }
    CHECK(quadratic);
}

TEST_CASE("tree documents are byte-stable")
{
    for (const auto& c : corpus::all_cases()) {
        CAPTURE(c.name);
        std::string a = tree_document(analyze_tree(reduce(c.centered()))).dump(2);
        std::string b = tree_document(analyze_tree(reduce(c.centered()))).dump(2);
        CHECK(a == b);
    }
}

TEST_CASE("DOT output")
{
    std::string d = tree_dot(analyze_tree(reduce(corpus::radial())));
    CHECK(d.find("shape=box") != std::string::npos);
    std::string c = tree_dot(analyze_tree(reduce(corpus::cusp())));
    CHECK(c.find("shape=ellipse") != std::string::npos);
    CHECK(c.find("--") != std::string::npos);
    CHECK(c.find("-3") != std::string::npos);
}

TEST_CASE("CSV output")
{
    std::string s = samples_csv({{0.5, cplx(1, 2), cplx(3, -4)}});
    CHECK(s == "t,re_x,im_x,re_y,im_y\n0.5,1,2,3,-4\n");
}

TEST_CASE("reduce command writes the tree and the dual graph")
{
    auto json_path = scratch("tree.json"), dot_path = scratch("tree.dot");
    Run r = invoke({"reduce", "--form", "(x - y) dx + x dy", "--out", json_path.string(), "--dot", dot_path.string()});
    CHECK(r.code == 0);
    json d = json::parse(slurp(json_path));
    CHECK(d["components"].size() == 1);
    CHECK(d["components"][0]["chern"] == -1);
    CHECK(d["singularities"][0]["class"] == "saddle-node");
    CHECK(slurp(dot_path).find("graph reduction") != std::string::npos);
}

TEST_CASE("corpus command")
{
    Run r = invoke({"corpus", "--case", "omega_n", "--n", "3"});
    CHECK(r.code == 0);
    json d = json::parse(r.out);
    CHECK(d["pass"] == true);
    CHECK(d["cases"][0]["cs_check"] == true);
    CHECK(d["cases"][0]["blowups"] == 3);
}

TEST_CASE("numeric commands")
{
    Run b = invoke({"beam-check", "--case", "model_sn", "--k", "1", "--delta", "1.0472", "--rays", "100"});
    CHECK(b.code == 0);
    CHECK(json::parse(b.out)["violation_count"] == 0);

    Run c = invoke({"cycles", "--c", "0.5"});
    CHECK(c.code == 0);
    json cj = json::parse(c.out);
    CHECK(cj["gamma_c"]["pass"] == true);
    CHECK(cj["psi_cycle"]["pass"] == true);
    CHECK(cj["psi_cycle"]["winding_y0"].is_null());

    auto csv = scratch("lift.csv");
    Run l = invoke({"lift", "--case", "euler", "--radius", "0.2", "--y0", "0.01", "--csv", csv.string()});
    CHECK(l.code == 0);
    CHECK(json::parse(l.out)["status"] == "complete");
    CHECK(slurp(csv).rfind("t,re_x,im_x,re_y,im_y\n", 0) == 0);

    Run h = invoke({"holonomy", "--case", "linear", "--lambda", "-1", "--radius", "1"});
    CHECK(h.code == 0);
    CHECK(json::parse(h.out)["points"].size() == 10);

    Run s = invoke({"sigma", "--case", "model_sn", "--rho", "0.5", "--r", "0.1", "--grid", "21", "--directions", "36"});
    CHECK(s.code == 0);
    CHECK(json::parse(s.out)["contains_origin"] == true);

    Run k = invoke({"classify", "--case", "euler", "--separatrix-order", "4"});
    CHECK(k.code == 0);
    CHECK(json::parse(k.out)["kind"] == "saddle-node");
}

TEST_CASE("exit codes")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"reduce", "--bogus"}).code == 2);
    CHECK(invoke({"reduce", "--case", "no_such_case"}).code == 2);
    CHECK(invoke({"reduce"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);

    Run bad = invoke({"reduce", "--form", "dx dy"});
    CHECK(bad.code == 1);
    json e = json::parse(bad.out);
    CHECK(e["error"].get<std::string>().find("token 2") != std::string::npos);

    Run regular = invoke({"reduce", "--form", "dx + x dy"});
    CHECK(regular.code == 1);
    CHECK(json::parse(regular.out).contains("error"));
}
