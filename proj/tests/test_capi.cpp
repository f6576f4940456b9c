#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "braidual/braidual.h"

namespace {

struct Held {
    bd_structure* s = nullptr;
    ~Held() { bd_structure_free(s); }
};
struct HeldReport {
    bd_report* r = nullptr;
    ~HeldReport() { bd_report_free(r); }
};

std::string written(const bd_structure* s) {
    char* text = nullptr;
    REQUIRE(bd_write(s, &text) == BD_OK);
    std::string out = text;
    bd_string_free(text);
    return out;
}

}  // namespace

TEST_CASE("catalog listing") {
    REQUIRE(bd_catalog_count() > 9);
    CHECK(std::string(bd_catalog_name(0)) == "zn:1");
    for (size_t i = 0; i < bd_catalog_count(); ++i) CHECK(bd_is_catalog_name(bd_catalog_name(i)));
    CHECK_FALSE(bd_is_catalog_name("zn:0x"));
    CHECK(bd_catalog_name(bd_catalog_count()) == nullptr);
}

TEST_CASE("every catalog entry loads, checks and reparses") {
    for (size_t i = 0; i < bd_catalog_count(); ++i) {
        std::string name = bd_catalog_name(i);
        CAPTURE(name);
        Held s, t;
        REQUIRE(bd_load(name.c_str(), &s.s) == BD_OK);
        REQUIRE(bd_parse(written(s.s).c_str(), &t.s) == BD_OK);
        int equal = 0;
        CHECK(bd_same(s.s, t.s, &equal) == BD_OK);
        CHECK(equal == 1);
        HeldReport r;
        REQUIRE(bd_check(s.s, -1, &r.r) == BD_OK);
        CHECK(bd_report_passed(r.r));
    }
}

TEST_CASE("structure metadata") {
    Held s;
    REQUIRE(bd_load("superline", &s.s) == BD_OK);
    CHECK(std::string(bd_structure_kind(s.s)) == "hopf");
    CHECK(bd_structure_dim(s.s) == 2);
    Held m;
    REQUIRE(bd_load("zn:3/regular-comodule", &m.s) == BD_OK);
    CHECK(std::string(bd_structure_kind(m.s)) == "comodule");
    CHECK(bd_structure_dim(m.s) == 3);
}

TEST_CASE("errors set status and message") {
    Held s;
    CHECK(bd_load("no-such-thing", &s.s) != BD_OK);
    CHECK(s.s == nullptr);
    CHECK(std::strlen(bd_last_error()) > 0);

    CHECK(bd_parse("braidual-structure 1\nkind hopf\nfrob 1\n", &s.s) == BD_ERR_PARSE);
    CHECK(bd_last_error_line() == 3);
    CHECK(bd_last_error_column() == 1);
    CHECK(std::string(bd_last_error()).find("frob") != std::string::npos);

    CHECK(bd_load("zn:65", &s.s) == BD_ERR_LIMIT);
    CHECK(bd_load("bline:q=0:deg=2", &s.s) == BD_ERR_INVALID);
    CHECK(bd_last_error_line() == 0);
    CHECK(std::string(bd_status_name(BD_ERR_NO_ANTIPODE)).size() > 0);
}

TEST_CASE("the dimension cap comes from the environment") {
    Held s;
    setenv("BRAIDUAL_MAX_DIM", "8", 1);
    CHECK(bd_load("zn:3", &s.s) == BD_ERR_LIMIT);
    unsetenv("BRAIDUAL_MAX_DIM");
    CHECK(bd_load("zn:3", &s.s) == BD_OK);
}

TEST_CASE("dualize, twist, convert") {
    Held h;
    REQUIRE(bd_load("superline", &h.s) == BD_OK);

    Held d;
    HeldReport r;
    REQUIRE(bd_dualize(h.s, BD_DUAL_HOPF, &d.s, &r.r) == BD_OK);
    CHECK(bd_report_passed(r.r));
    CHECK(bd_structure_dim(d.s) == 2);

    HeldReport pv;
    REQUIRE(bd_dualize(h.s, BD_DUAL_PAIR_VERIFY, nullptr, &pv.r) == BD_OK);
    CHECK(bd_report_passed(pv.r));

    Held t;
    HeldReport tr;
    REQUIRE(bd_twist(h.s, 1, -1, 0, &t.s, &tr.r) == BD_OK);
    CHECK(bd_report_passed(tr.r));

    Held bl, bt;
    HeldReport btr;
    REQUIRE(bd_load("bline:q=2:deg=4", &bl.s) == BD_OK);
    REQUIRE(bd_twist(bl.s, 1, 0, 0, &bt.s, &btr.r) == BD_OK);
    CHECK_FALSE(bd_report_passed(btr.r));
    CHECK(bd_twist(bl.s, 5, 0, 0, nullptr, nullptr) == BD_ERR_INVALID);

    Held c, m;
    HeldReport cr;
    REQUIRE(bd_load("zn:2/regular-comodule", &c.s) == BD_OK);
    REQUIRE(bd_convert(c.s, BD_COMODULE_TO_MODULE, &m.s, &cr.r) == BD_OK);
    CHECK(std::string(bd_structure_kind(m.s)) == "module");
    CHECK(bd_report_passed(cr.r));

    Held back;
    HeldReport rt;
    REQUIRE(bd_round_trip(c.s, &back.s, &rt.r) == BD_OK);
    int equal = 0;
    bd_same(c.s, back.s, &equal);
    CHECK(equal == 1);
    CHECK(bd_convert(h.s, BD_COMODULE_TO_MODULE, nullptr, nullptr) != BD_OK);
}

TEST_CASE("report access, filtering and rendering") {
    Held h;
    REQUIRE(bd_load("zn:2", &h.s) == BD_OK);
    HeldReport r;
    REQUIRE(bd_check(h.s, -1, &r.r) == BD_OK);
    size_t pass = 0, fail = 0, skipped = 0;
    bd_report_counts(r.r, &pass, &fail, &skipped);
    CHECK(pass == bd_report_size(r.r));
    CHECK(fail == 0);
    const char* eq = nullptr;
    bd_verdict v = BD_FAIL;
    REQUIRE(bd_report_entry(r.r, 0, &eq, &v) == BD_OK);
    CHECK(std::string(eq) == "YBE");
    CHECK(v == BD_PASS);
    CHECK(bd_report_entry(r.r, bd_report_size(r.r), &eq, &v) != BD_OK);

    HeldReport f;
    REQUIRE(bd_report_filter(r.r, "YBE,Dcm", &f.r) == BD_OK);
    for (size_t i = 0; i < bd_report_size(f.r); ++i) {
        bd_report_entry(f.r, i, &eq, &v);
        CHECK((std::string(eq) == "YBE" || std::string(eq) == "Dcm"));
    }
    HeldReport none;
    CHECK(bd_report_filter(r.r, "YBE,nonsense", &none.r) == BD_ERR_INVALID);

    char* text = nullptr;
    REQUIRE(bd_report_render(f.r, 1, "input=zn:2", &text) == BD_OK);
    std::string json = text;
    bd_string_free(text);
    CHECK(json.find("\"Dcm\"") != std::string::npos);
    CHECK(json.find("zn:2") != std::string::npos);
}

TEST_CASE("graded cutoff") {
    Held q;
    REQUIRE(bd_load("qplane:q=2:deg=3", &q.s) == BD_OK);
    HeldReport r;
    REQUIRE(bd_check(q.s, 2, &r.r) == BD_OK);
    CHECK(bd_report_passed(r.r));
    CHECK(bd_check(q.s, 4, nullptr) == BD_ERR_INVALID);
    Held z;
    REQUIRE(bd_load("zn:2", &z.s) == BD_OK);
    CHECK(bd_check(z.s, 1, nullptr) != BD_OK);
}
