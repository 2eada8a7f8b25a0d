#include "helpers.hpp"

#include "protoric/frontend/commands.hpp"
#include "protoric/frontend/lexer.hpp"
#include "protoric/frontend/render.hpp"

#include "protoric/error.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace protoric;
using namespace protoric::frontend;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<fs::path> corpus(const std::string& kind)
{
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(fs::path(PROTORIC_CORPUS_DIR) / kind))
        if (e.path().extension() == ".twr")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

struct Expectation {
    int exit_code = 0;
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

// First line of a bad corpus file: `# expect: <exit> <line>:<col> <message>`.
Expectation expectation(const std::string& text)
{
    const std::string prefix = "# expect: ";
    REQUIRE(text.rfind(prefix, 0) == 0);
    std::istringstream in(text.substr(prefix.size(), text.find('\n') - prefix.size()));
    Expectation e;
    char colon = 0;
    in >> e.exit_code >> e.line >> colon >> e.column;
    std::getline(in >> std::ws, e.message);
    return e;
}

} // namespace

TEST_CASE("lexer")
{
    const auto r = lex("tower T { level 1 { generators (1,-2); } } # note\r\n");
    CHECK(r.diagnostics.empty());
    REQUIRE(r.tokens.size() >= 2);
    CHECK(r.tokens.front().kind == TokenKind::Ident);
    CHECK(r.tokens.back().kind == TokenKind::End);
    bool negative = false;
    for (const auto& t : r.tokens)
        negative = negative || (t.kind == TokenKind::Int && t.text == "-2");
    CHECK(negative);

    const auto arrow = lex("2 -> 1");
    REQUIRE(arrow.tokens.size() == 4);
    CHECK(arrow.tokens[1].kind == TokenKind::Arrow);

    const auto bad = lex("tower $");
    REQUIRE(bad.diagnostics.size() == 1);
    CHECK(bad.diagnostics[0].span.line == 1);
    CHECK(bad.diagnostics[0].span.column == 7);

    // Columns count code points, not bytes.
    const auto utf = lex("# é\ntower é");
    REQUIRE(utf.diagnostics.size() == 1);
    CHECK(utf.diagnostics[0].span.line == 2);
    CHECK(utf.diagnostics[0].span.column == 7);
}

TEST_CASE("parser")
{
    SUBCASE("family document")
    {
        const auto r = parse_tower("tower T { family double_cover depth 3; }");
        REQUIRE(r.document.has_value());
        REQUIRE(r.document->families.size() == 1);
        CHECK(r.document->families[0].family == TowerFamily::DoubleCover);
        CHECK(r.document->families[0].depth == 3);
    }
    SUBCASE("equation")
    {
        const auto r = parse_tower("tower T { level 1 { equation y^2 = x1*x2; } }");
        REQUIRE(r.document.has_value());
        const auto& spec = r.document->levels[0].spec;
        CHECK(spec.kind == SpecKind::Equation);
        CHECK(print_monomial(spec.lhs) == "y^2");
        CHECK(print_monomial(spec.rhs) == "x1*x2");
    }
    SUBCASE("missing comma")
    {
        const auto r = parse_tower("tower T {\n  level 1 { generators (1 0); }\n}");
        CHECK_FALSE(r.document.has_value());
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].kind == DiagnosticKind::Syntax);
        CHECK(r.diagnostics[0].span.line == 2);
        CHECK(r.diagnostics[0].span.column == 27);
        CHECK(r.diagnostics[0].span.length == 1);
    }
}

TEST_CASE("elaboration")
{
    SUBCASE("family")
    {
        const auto r = load_tower("tower T { family double_cover depth 3; }");
        REQUIRE(r.tower.has_value());
        CHECK(r.tower->tower.depth() == 3);
    }
    SUBCASE("equation images")
    {
        const auto r = load_tower("tower T { level 1 { equation y^2 = x1*x2; } }");
        REQUIRE(r.tower.has_value());
        const auto& e = *r.tower->equations[0];
        CHECK(e.variables == std::vector<std::string>{"y", "x1", "x2"});
        CHECK(e.exponent_difference == IntVec{2, -1, -1});
        CHECK((e.cokernel_map * e.exponent_difference).is_zero());
        REQUIRE(e.images.size() == 3);
        CHECK(semantically_equal(r.tower->tower.level(1),
                                 semigroup_from_generators(2, testing::vecs({{1, 0}, {2, -1}, {0, 1}}))));
    }
    SUBCASE("torsion")
    {
        const auto r = load_tower("tower T { level 1 { equation y^2 = x^4; } }");
        CHECK_FALSE(r.tower.has_value());
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].message.find("torsion detected") != std::string::npos);
    }
}

TEST_CASE("good corpus: parse, print, parse")
{
    const auto files = corpus("good");
    CHECK(files.size() == 10);
    for (const auto& f : files) {
        CAPTURE(f.filename().string());
        const auto first = parse_tower(slurp(f));
        REQUIRE(first.document.has_value());
        const std::string printed = print_document(*first.document);
        const auto second = parse_tower(printed);
        REQUIRE(second.document.has_value());
        CHECK(structurally_equal(*first.document, *second.document));
        CHECK(print_document(*second.document) == printed);
        CHECK(load_tower(slurp(f)).tower.has_value());
    }
}

TEST_CASE("good corpus covers every production")
{
    bool generators = false, rays = false, equation = false, ambient = false, connect = false, exponent = false;
    std::set<TowerFamily> families;
    for (const auto& f : corpus("good")) {
        const auto doc = parse_tower(slurp(f)).document;
        REQUIRE(doc.has_value());
        for (const auto& l : doc->levels) {
            generators = generators || l.spec.kind == SpecKind::Generators;
            rays = rays || l.spec.kind == SpecKind::Rays;
            equation = equation || l.spec.kind == SpecKind::Equation;
            ambient = ambient || l.ambient.has_value();
            for (const auto* m : {&l.spec.lhs, &l.spec.rhs})
                for (const auto& factor : m->factors)
                    exponent = exponent || factor.exponent != 1;
        }
        connect = connect || !doc->connects.empty();
        for (const auto& fam : doc->families)
            families.insert(fam.family);
    }
    CHECK(generators);
    CHECK(rays);
    CHECK(equation);
    CHECK(ambient);
    CHECK(connect);
    CHECK(exponent);
    CHECK(families.size() == 3);
}

TEST_CASE("bad corpus: every file fails where it says")
{
    const auto files = corpus("bad");
    CHECK(files.size() >= 20);
    for (const auto& f : files) {
        CAPTURE(f.filename().string());
        const std::string text = slurp(f);
        const Expectation e = expectation(text);
        const LoadedDocument doc = load_document(f.filename().string(), text);
        REQUIRE_FALSE(doc.load.tower.has_value());
        REQUIRE_FALSE(doc.load.diagnostics.empty());
        const Diagnostic& d = doc.load.diagnostics.front();
        CHECK(d.span.line == e.line);
        CHECK(d.span.column == e.column);
        CHECK(d.span.length >= 1);
        CHECK(d.message.find(e.message) != std::string::npos);
        CHECK(exit_code(load_failure(doc, OutputFormat::Text).status) == e.exit_code);
    }
}

TEST_CASE("rendering")
{
    CHECK(render_envelope(Json::object(), {}, std::nullopt) == "{\"diagnostics\":[],\"result\":{},\"tower\":null}\n");
    Json r = Json::object();
    r["zeta"] = 1;
    r["alpha"] = to_json(Integer("123456789012345678901234567890"));
    CHECK(r.dump() == "{\"alpha\":\"123456789012345678901234567890\",\"zeta\":1}");
    CHECK(to_json(Rational(3, 2)) == Json("3/2"));
    CHECK(to_json(Rational(4, 2)) == Json(2));
    CHECK(render_inequalities({IntVec{1, 2}, IntVec{1, 0}}) == "m1 >= 0; m1 + 2*m2 >= 0");
    CHECK(render_inequalities({IntVec{0, 1}, IntVec{0, -1}}) == "m2 = 0");
    CHECK(render_linear_form(IntVec{-1, 0, 3}) == "-m1 + 3*m3");
    CHECK(render_table({"a", "bb"}, {{"xxx", "y"}}) == "a    bb\nxxx  y\n");
}

TEST_CASE("commands")
{
    const LoadedDocument dc = load_document("dc.twr", "tower dc { family double_cover depth 3; }");
    SUBCASE("hilbert basis as JSON")
    {
        const auto out = run_level(dc, 2, "hilbert", kDefaultIdealDegree, OutputFormat::Json);
        CHECK(out.status == CommandStatus::Ok);
        const Json j = Json::parse(out.out);
        CHECK(j["result"].dump() == "{\"hilbert_basis\":[[0,1],[1,0],[2,-1]]}");
        CHECK(j["tower"] == "dc");
    }
    SUBCASE("inequalities as text")
    {
        CHECK(run_level(dc, 2, "inequalities", 4, OutputFormat::Text).out == "m1 >= 0; m1 + 2*m2 >= 0\n");
    }
    SUBCASE("usage errors")
    {
        CHECK(exit_code(run_level(dc, 7, "hilbert", 4, OutputFormat::Text).status) == 2);
        CHECK(exit_code(run_level(dc, 1, "volume", 4, OutputFormat::Text).status) == 2);
        CHECK(exit_code(run_pair("(1,2", "(1)", OutputFormat::Text).status) == 2);
    }
    SUBCASE("embedding needs a family rule to extend")
    {
        const LoadedDocument o = load_document("o.twr", "tower o { level 1 { generators (1); } }");
        CHECK(exit_code(run_embed(o, 3, OutputFormat::Text).status) == 1);
        CHECK(run_embed(dc, 5, OutputFormat::Text).status == CommandStatus::Ok);
    }
    SUBCASE("points")
    {
        CHECK(run_point(dc, 2, "(1,2,4)", "(1,0)", OutputFormat::Text).out.find("Lambda(1,0) = 2") !=
              std::string::npos);
        CHECK(exit_code(run_point(dc, 2, "(3,1,2)", std::nullopt, OutputFormat::Text).status) == 1);
    }
    SUBCASE("pairing")
    {
        const auto out = run_pair("(2,-1,5)", "(1,1)", OutputFormat::Json);
        CHECK(Json::parse(out.out)["result"]["pairing"] == 1);
    }
    SUBCASE("determinism")
    {
        CHECK(run_dualize(dc, OutputFormat::Json).out == run_dualize(dc, OutputFormat::Json).out);
        CHECK(run_demo("cauchy-algebra", OutputFormat::Text).out ==
              run_demo("cauchy-algebra", OutputFormat::Text).out);
        CHECK(exit_code(run_demo("nonsense", OutputFormat::Text).status) == 2);
    }
}

TEST_CASE("tuple and point parsing")
{
    CHECK(parse_int_tuple("( 1, -2 ,3)") == IntVec{1, -2, 3});
    CHECK_THROWS_AS(parse_int_tuple("(1,x)"), Error);
    CHECK(parse_rational_tuple("(1/2,-3)") == std::vector<Rational>{Rational(1, 2), Rational(-3)});
    CHECK_THROWS_AS(parse_rational_tuple("(1/0)"), Error);
    const PointSpec p = parse_point_spec("point level=2 values=(1,1,1)");
    CHECK(p.level == 2);
    CHECK(p.values.size() == 3);
    CHECK_THROWS_AS(parse_point_spec("point values=(1)"), Error);
}
