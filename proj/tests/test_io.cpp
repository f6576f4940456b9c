#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "braidual/catalog.hpp"
#include "braidual/duality.hpp"
#include "braidual/io.hpp"
#include "braidual/twist.hpp"
#include "support.hpp"

using namespace braidual;

namespace {

StructureFile file_of(StructureValue v) { return StructureFile{std::move(v), {}}; }

StructureFile catalog_file(const std::string& name) {
    if (is_catalog_name(name)) return file_of(catalog_hopf(name).data());
    return std::visit([](auto m) { return file_of(StructureValue(std::move(m))); }, catalog_module(name));
}

std::optional<ParseError> parse_error(const std::string& text) {
    try {
        parse_structure(text);
    } catch (const ParseError& e) {
        return e;
    }
    return std::nullopt;
}

const char* kGood =
    "braidual-structure 1\n"
    "kind braiding\n"
    "space s0 V plain -1\n"
    "labels s0 a b\n"
    "map braiding s0 s0 -> s0 s0\n"
    "0 0 1\n"
    "2 1 1\n"
    "1 2 1\n"
    "3 3 1\n"
    "end\n";

}  // namespace

TEST_CASE("emit then reparse is the identity on the catalog") {
    std::vector<std::string> names = catalog_names();
    for (const auto& m : catalog_module_names()) names.push_back(m);
    for (const auto& name : names) {
        CAPTURE(name);
        auto f = catalog_file(name);
        auto text = write_structure(f);
        auto g = parse_structure(text);
        CHECK(g.kind() == f.kind());
        CHECK(same_structure(f, g));
        CHECK(write_structure(g) == text);
    }
}

TEST_CASE("emit then reparse keeps derived structures") {
    auto bl = catalog_hopf("bline:q=2:deg=4").data();
    std::vector<StructureValue> values{
        dual_hopf(bl),
        twist(bl.bialgebra, 1, -1).data,
        bl.bialgebra.braiding,
        bl.bialgebra.algebra(),
        bl.bialgebra.coalgebra(),
    };
    for (const auto& v : values) {
        auto f = file_of(v);
        auto g = parse_structure(write_structure(f));
        CHECK(same_structure(f, g));
    }
    // Unknown columns survive.
    auto f = file_of(bl);
    auto g = std::get<HopfData>(parse_structure(write_structure(f)).value);
    CHECK(g.bialgebra.mult.unknown_count() == bl.bialgebra.mult.unknown_count());
    CHECK(g.bialgebra.mult.unknown_count() > 0);
}

TEST_CASE("same_structure sees single coefficients") {
    auto h = make_superline().data();
    auto k = h;
    k.bialgebra.mult.set(1, 3, Scalar(1, 2));
    CHECK_FALSE(same_structure(file_of(h), file_of(k)));
    CHECK_FALSE(same_structure(file_of(h), file_of(h.bialgebra)));
}

TEST_CASE("params round trip") {
    StructureFile f{make_group_bialgebra(2).data(), {{"origin", "hand"}}};
    auto g = parse_structure(write_structure(f));
    CHECK(g.params == f.params);
}

TEST_CASE("a hand written braiding parses") {
    auto f = parse_structure(kGood);
    REQUIRE(f.kind() == StructureKind::Braiding);
    auto b = std::get<Braiding>(f.value);
    CHECK(b.psi == flip(b.space, b.space));
    CHECK(b.space.label(1) == "b");
}

TEST_CASE("parse errors carry line and column") {
    std::string text = kGood;
    auto bogus = text;
    bogus.insert(bogus.find("space"), "bogus 3\n");
    auto e = parse_error(bogus);
    REQUIRE(e);
    CHECK(e->line() == 3);
    CHECK(e->column() == 1);
    CHECK(e->reason().find("bogus") != std::string::npos);

    auto scalar = text;
    scalar.replace(scalar.find("2 1 1"), 5, "2 1 x/");
    e = parse_error(scalar);
    REQUIRE(e);
    CHECK(e->line() == 7);
    CHECK(e->column() == 5);

    auto range = text;
    range.replace(range.find("3 3 1"), 5, "9 3 1");
    e = parse_error(range);
    REQUIRE(e);
    CHECK(e->line() == 9);

    auto open = text.substr(0, text.rfind("end"));
    e = parse_error(open);
    REQUIRE(e);
    CHECK(e->line() == 10);

    e = parse_error("kind hopf\n");
    REQUIRE(e);
    CHECK(e->line() == 1);

    e = parse_error("");
    REQUIRE(e);
    CHECK(oracle::thrown_kind([] { parse_structure("braidual-structure 2\n"); }) == ErrorKind::Parse);
}

TEST_CASE("a structure missing maps is rejected") {
    std::string text = "braidual-structure 1\nkind algebra\nspace s0 A plain -1\nlabels s0 1\n";
    auto e = parse_error(text);
    REQUIRE(e);
    CHECK(e->line() == 2);
}

TEST_CASE("reports render to text and json") {
    auto r = check_hopf(make_superline().data());
    auto text = report_text(r);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("Dcm") != std::string::npos);

    auto j = nlohmann::json::parse(report_json(r, {{"input", "superline"}}));
    CHECK(j["counts"]["pass"].get<std::size_t>() == r.count(Verdict::Pass));
    CHECK(j["counts"]["fail"].get<std::size_t>() == 0);
    std::set<std::string> seen;
    for (const auto& e : j["entries"]) {
        CHECK(is_registered(e["equation"].get<std::string>()));
        seen.insert(e["equation"].get<std::string>());
    }
    for (const char* eq : {"YBE", "AWm", "Dcm", "Sbraid", "assoc", "coassoc"}) CHECK(seen.count(eq));

    auto bad = twist(catalog_hopf("bline:q=2:deg=4").data().bialgebra, 1, 0).data;
    auto jf = nlohmann::json::parse(report_json(check_bialgebra(bad)));
    bool witnessed = false;
    for (const auto& e : jf["entries"])
        if (e["verdict"] == "Fail" && e["equation"] == "Dcm") witnessed = e.contains("witness");
    CHECK(witnessed);
}

TEST_CASE("filtered reports keep only the asked equations") {
    auto r = check_hopf(make_group_bialgebra(2).data()).filtered({"YBE", "Dcm"});
    CHECK_FALSE(r.empty());
    for (const auto& e : r.entries()) CHECK((e.equation == "YBE" || e.equation == "Dcm"));
}

TEST_CASE("params and provenance are not compared") {
    auto c = std::get<ComoduleData>(catalog_module("zn:2/regular-comodule"));
    auto d = c;
    d.cross.provenance = Provenance::InducedDualCirc;
    StructureFile f{c, {{"source", "catalog"}}};
    CHECK(same_structure(f, file_of(d)));
    CHECK(write_structure(f) != write_structure(file_of(d)));
}
