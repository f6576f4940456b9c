#include "braidual/braidual.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <sstream>

#include "braidual/catalog.hpp"
#include "braidual/duality.hpp"
#include "braidual/io.hpp"
#include "braidual/twist.hpp"

using namespace braidual;

struct bd_structure {
    StructureFile f;
};

struct bd_report {
    CheckReport r;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_line = 0;
thread_local std::size_t g_column = 0;

bd_status status_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::ShapeMismatch: return BD_ERR_SHAPE;
    case ErrorKind::Singular: return BD_ERR_SINGULAR;
    case ErrorKind::NoAntipode: return BD_ERR_NO_ANTIPODE;
    case ErrorKind::PrecheckFailed: return BD_ERR_PRECHECK;
    case ErrorKind::AntipodeNotInvertible: return BD_ERR_ANTIPODE_NOT_INVERTIBLE;
    case ErrorKind::InvalidParameter: return BD_ERR_INVALID;
    case ErrorKind::Parse: return BD_ERR_PARSE;
    case ErrorKind::NotClosed: return BD_ERR_NOT_CLOSED;
    case ErrorKind::Validation: return BD_ERR_VALIDATION;
    case ErrorKind::Limit: return BD_ERR_LIMIT;
    case ErrorKind::Io: return BD_ERR_IO;
    }
    return BD_ERR_INTERNAL;
}

template <class F>
bd_status guarded(F&& f) {
    g_error.clear();
    g_line = g_column = 0;
    try {
        f();
        return BD_OK;
    } catch (const ParseError& e) {
        g_error = e.reason();
        g_line = e.line();
        g_column = e.column();
        return BD_ERR_PARSE;
    } catch (const Error& e) {
        g_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_error = e.what();
        return BD_ERR_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p) throw Error(ErrorKind::InvalidParameter, std::string("null ") + what);
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::uint64_t max_dim() {
    const char* env = std::getenv("BRAIDUAL_MAX_DIM");
    if (!env || !*env) return BRAIDUAL_DEFAULT_MAX_DIM;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end || v == 0) throw Error(ErrorKind::InvalidParameter, "BRAIDUAL_MAX_DIM must be a positive integer");
    return v;
}

Space acting(const StructureValue& v) {
    return std::visit(
        [](const auto& d) -> Space {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Braiding>) return d.space;
            else if constexpr (std::is_same_v<T, ModuleData>) return d.algebra.space();
            else if constexpr (std::is_same_v<T, ComoduleData>) return d.coalgebra.space();
            else return d.space();
        },
        v);
}

std::optional<Space> carrier(const StructureValue& v) {
    if (auto* m = std::get_if<ModuleData>(&v)) return m->carrier;
    if (auto* c = std::get_if<ComoduleData>(&v)) return c->carrier;
    return std::nullopt;
}

// Braidings live on V(x)V: the largest square tensor a structure stores.
void enforce_limit(const StructureValue& v) {
    std::uint64_t d = acting(v).dim();
    if (auto c = carrier(v)) d = std::max<std::uint64_t>(d, c->dim());
    if (d * d > max_dim())
        throw Error(ErrorKind::Limit, "tensor dimension " + std::to_string(d * d) +
                                          " exceeds BRAIDUAL_MAX_DIM=" + std::to_string(max_dim()));
}

bd_structure* wrap(StructureValue v, std::map<std::string, std::string> params = {}) {
    enforce_limit(v);
    return new bd_structure{StructureFile{std::move(v), std::move(params)}};
}

void give(bd_structure** out, StructureValue v) {
    if (out) *out = wrap(std::move(v));
}

void give(bd_report** out, CheckReport r) {
    need(out, "report pointer");
    *out = new bd_report{std::move(r)};
}

CheckReport check_value(const StructureValue& v) {
    return std::visit(
        [](const auto& d) -> CheckReport {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Braiding>) return check_braiding(d);
            else if constexpr (std::is_same_v<T, AlgebraData>) return check_algebra(d);
            else if constexpr (std::is_same_v<T, CoalgebraData>) return check_coalgebra(d);
            else if constexpr (std::is_same_v<T, BialgebraData>) return check_bialgebra(d);
            else if constexpr (std::is_same_v<T, HopfData>) return check_hopf(d);
            else if constexpr (std::is_same_v<T, ModuleData>)
                return d.carrier_algebra && d.coalgebra ? check_module_algebra(d) : check_module(d);
            else
                return d.carrier_algebra && d.algebra ? check_comodule_algebra(d) : check_comodule(d);
        },
        v);
}

BialgebraData bialgebra_of(const StructureValue& v) {
    if (auto* h = std::get_if<HopfData>(&v)) return h->bialgebra;
    if (auto* b = std::get_if<BialgebraData>(&v)) return *b;
    throw Error(ErrorKind::InvalidParameter, "expected a bialgebra or Hopf algebra");
}

HopfData hopf_with_inverse(const AlgebraData& a, const CoalgebraData& c) {
    BialgebraData b{a.braiding, a.mult, a.unit, c.comult, c.counit};
    LinMap s = solve_antipode(b);
    try {
        return {b, s, invert(s)};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Singular)
            throw Error(ErrorKind::AntipodeNotInvertible, "antipode is not invertible");
        throw;
    }
}

CheckReport dualize_module_kind(const StructureValue& v, bd_structure** out) {
    CheckReport r;
    if (auto* m = std::get_if<ModuleData>(&v)) {
        ComoduleData d = dualize_action(*m);
        r.append(check_comodule(d), "dual");
        r.append(check_adjoint(module_to_comodule(*m), d));
        give(out, d);
    } else if (auto* c = std::get_if<ComoduleData>(&v)) {
        ModuleData d = dualize_coaction(*c);
        r.append(check_module(d), "dual");
        r.append(check_adjoint(comodule_to_module(*c), d));
        if (c->side == Side::Right) r.append(check_bullet_braidings(*c));
        give(out, d);
    } else {
        throw Error(ErrorKind::InvalidParameter, "expected a module or comodule");
    }
    return r;
}

CheckReport checked(const ModuleData& m) {
    return m.carrier_algebra && m.coalgebra ? check_module_algebra(m) : check_module(m);
}
CheckReport checked(const ComoduleData& c) {
    return c.carrier_algebra && c.algebra ? check_comodule_algebra(c) : check_comodule(c);
}

}  // namespace

extern "C" {

const char* bd_status_name(bd_status s) {
    switch (s) {
    case BD_OK: return "ok";
    case BD_ERR_PARSE: return "parse";
    case BD_ERR_SHAPE: return "shape-mismatch";
    case BD_ERR_SINGULAR: return "singular";
    case BD_ERR_NO_ANTIPODE: return "no-antipode";
    case BD_ERR_PRECHECK: return "precheck-failed";
    case BD_ERR_ANTIPODE_NOT_INVERTIBLE: return "antipode-not-invertible";
    case BD_ERR_INVALID: return "invalid-parameter";
    case BD_ERR_NOT_CLOSED: return "not-closed";
    case BD_ERR_VALIDATION: return "validation";
    case BD_ERR_LIMIT: return "limit";
    case BD_ERR_IO: return "io";
    case BD_ERR_INTERNAL: return "internal";
    }
    return "?";
}

const char* bd_last_error(void) { return g_error.c_str(); }
size_t bd_last_error_line(void) { return g_line; }
size_t bd_last_error_column(void) { return g_column; }

static const std::vector<std::string>& all_names() {
    static const std::vector<std::string> names = [] {
        auto v = catalog_names();
        auto m = catalog_module_names();
        v.insert(v.end(), m.begin(), m.end());
        return v;
    }();
    return names;
}

size_t bd_catalog_count(void) { return all_names().size(); }

const char* bd_catalog_name(size_t i) {
    return i < all_names().size() ? all_names()[i].c_str() : nullptr;
}

int bd_is_catalog_name(const char* name) {
    if (!name) return 0;
    try {
        return is_catalog_name(name) || is_catalog_module_name(name);
    } catch (...) {
        return 0;
    }
}

bd_status bd_load(const char* name_or_path, bd_structure** out) {
    return guarded([&] {
        need(name_or_path, "name");
        need(out, "output pointer");
        std::string s = name_or_path;
        if (is_catalog_name(s)) {
            *out = wrap(catalog_hopf(s).data(), {{"source", s}});
        } else if (is_catalog_module_name(s)) {
            auto v = std::visit([](const auto& x) -> StructureValue { return x; }, catalog_module(s));
            *out = wrap(std::move(v), {{"source", s}});
        } else if (std::filesystem::exists(s)) {
            StructureFile f = read_structure_file(s);
            *out = wrap(std::move(f.value), std::move(f.params));
        } else {
            throw ParseError(1, 1, "'" + s + "' is neither a catalog name nor a readable file");
        }
    });
}

bd_status bd_parse(const char* text, bd_structure** out) {
    return guarded([&] {
        need(text, "text");
        need(out, "output pointer");
        StructureFile f = parse_structure(text);
        *out = wrap(std::move(f.value), std::move(f.params));
    });
}

bd_status bd_write(const bd_structure* s, char** text) {
    return guarded([&] {
        need(s, "structure");
        need(text, "output pointer");
        *text = dup(write_structure(s->f));
    });
}

bd_status bd_save(const bd_structure* s, const char* path) {
    return guarded([&] {
        need(s, "structure");
        need(path, "path");
        write_structure_file(path, s->f);
    });
}

void bd_structure_free(bd_structure* s) { delete s; }
void bd_string_free(char* s) { std::free(s); }

const char* bd_structure_kind(const bd_structure* s) {
    return s ? structure_kind_name(s->f.kind()) : "";
}

size_t bd_structure_dim(const bd_structure* s) { return s ? acting(s->f.value).dim() : 0; }

bd_status bd_same(const bd_structure* a, const bd_structure* b, int* equal) {
    return guarded([&] {
        need(a, "structure");
        need(b, "structure");
        need(equal, "output pointer");
        *equal = same_structure(a->f, b->f) ? 1 : 0;
    });
}

bd_status bd_check(const bd_structure* s, int cutoff, bd_report** report) {
    return guarded([&] {
        need(s, "structure");
        if (cutoff < 0) return give(report, check_value(s->f.value));
        auto* h = std::get_if<HopfData>(&s->f.value);
        if (!h) throw Error(ErrorKind::InvalidParameter, "a cutoff applies to Hopf algebras only");
        if (h->space().truncated() && cutoff > h->space().cutoff())
            throw Error(ErrorKind::InvalidParameter, "cutoff exceeds the truncation degree");
        give(report, check_hopf(restrict_degree(*h, cutoff)));
    });
}

bd_status bd_dualize(const bd_structure* s, bd_dualize_what what, bd_structure** out,
                     bd_report** report) {
    return guarded([&] {
        need(s, "structure");
        const StructureValue& v = s->f.value;
        if (std::holds_alternative<ModuleData>(v) || std::holds_alternative<ComoduleData>(v))
            return give(report, dualize_module_kind(v, out));
        const auto* hopf = std::get_if<HopfData>(&v);
        BialgebraData h = bialgebra_of(v);
        CheckReport r;
        switch (what) {
        case BD_DUAL_BIALGEBRA: {
            DualBialgebra d = dual_bialgebra(h);
            r.append(check_bialgebra(d.bialgebra), "dual");
            r.append(verify_dual_pairing(d.pairing, d.bialgebra, h), "pairing");
            give(out, d.bialgebra);
            break;
        }
        case BD_DUAL_HOPF: {
            if (!hopf) throw Error(ErrorKind::InvalidParameter, "--what hopf needs a Hopf algebra");
            HopfData d = dual_hopf(*hopf);
            r.append(check_hopf(d), "dual");
            r.append(verify_dual_pairing(dual_bialgebra(h).pairing, d, *hopf), "pairing");
            give(out, d);
            break;
        }
        case BD_DUAL_PAIR_VERIFY: {
            DualBialgebra d = dual_bialgebra(h);
            if (hopf)
                r.append(verify_dual_pairing(d.pairing, dual_hopf(*hopf), *hopf));
            else
                r.append(verify_dual_pairing(d.pairing, d.bialgebra, h));
            if (out) *out = nullptr;
            break;
        }
        case BD_DUAL_DOUBLE: {
            if (hopf) {
                r.append(double_dual_iso(*hopf));
                give(out, dual_hopf(dual_hopf(*hopf)));
            } else {
                r.append(double_dual_iso(h));
                give(out, dual_bialgebra(dual_bialgebra(h).bialgebra).bialgebra);
            }
            break;
        }
        default: throw Error(ErrorKind::InvalidParameter, "unknown dualize mode");
        }
        give(report, std::move(r));
    });
}

bd_status bd_twist(const bd_structure* s, int k, int n, int braiding_inverse, bd_structure** out,
                   bd_report** report) {
    return guarded([&] {
        need(s, "structure");
        BialgebraData h = bialgebra_of(s->f.value);
        auto mode = braiding_inverse ? TwistBraiding::PsiInv : TwistBraiding::Psi;
        BialgebraData t = twist(h, k, n, mode).data;
        const auto* hopf = std::get_if<HopfData>(&s->f.value);
        // S stays an antipode on H^(n,-n) under Psi, S^{-1} on H^(n-1,-n) under Psi^{-1}.
        if (hopf && !braiding_inverse && k == -n) {
            HopfData th{t, hopf->antipode, hopf->antipode_inv};
            give(report, check_hopf(th));
            give(out, th);
        } else if (hopf && braiding_inverse && k + n == -1 && hopf->antipode_inv) {
            HopfData th{t, *hopf->antipode_inv, hopf->antipode};
            give(report, check_hopf(th));
            give(out, th);
        } else {
            give(report, check_bialgebra(t));
            give(out, t);
        }
    });
}

bd_status bd_convert(const bd_structure* s, bd_direction d, bd_structure** out, bd_report** report) {
    return guarded([&] {
        need(s, "structure");
        const StructureValue& v = s->f.value;
        const auto* m = std::get_if<ModuleData>(&v);
        const auto* c = std::get_if<ComoduleData>(&v);
        auto want_module = [&] {
            if (!m) throw Error(ErrorKind::InvalidParameter, "this direction takes a module");
        };
        auto want_comodule = [&] {
            if (!c) throw Error(ErrorKind::InvalidParameter, "this direction takes a comodule");
        };
        switch (d) {
        case BD_COMODULE_TO_MODULE: {
            want_comodule();
            ModuleData r = comodule_to_module(*c);
            give(report, checked(r));
            give(out, r);
            break;
        }
        case BD_MODULE_TO_COMODULE: {
            want_module();
            ComoduleData r = module_to_comodule(*m);
            give(report, checked(r));
            give(out, r);
            break;
        }
        case BD_DUALIZE: give(report, dualize_module_kind(v, out)); break;
        case BD_FLIP_SIDE:
            if (m) {
                ModuleData r = flip_side(*m);
                give(report, checked(r));
                give(out, r);
            } else {
                want_comodule();
                ComoduleData r = flip_side(*c);
                give(report, checked(r));
                give(out, r);
            }
            break;
        case BD_ANTIPODE_FLIP:
            if (m) {
                if (!m->coalgebra)
                    throw Error(ErrorKind::InvalidParameter, "antipode flip needs the acting coalgebra");
                ModuleData r = antipode_flip(*m, hopf_with_inverse(m->algebra, *m->coalgebra));
                give(report, checked(r));
                give(out, r);
            } else {
                want_comodule();
                if (!c->algebra)
                    throw Error(ErrorKind::InvalidParameter, "antipode flip needs the coacting algebra");
                ComoduleData r = antipode_flip(*c, hopf_with_inverse(*c->algebra, c->coalgebra));
                give(report, checked(r));
                give(out, r);
            }
            break;
        case BD_NATURAL_ACTION: {
            BialgebraData h = bialgebra_of(v);
            auto [left, right] = natural_action(h);
            CheckReport r = check_natural_action(h);
            r.append(check_module_algebra(left), "left");
            r.append(check_module_algebra(right), "right");
            give(report, std::move(r));
            give(out, left);
            break;
        }
        default: throw Error(ErrorKind::InvalidParameter, "unknown conversion");
        }
    });
}

bd_status bd_round_trip(const bd_structure* s, bd_structure** out, bd_report** report) {
    return guarded([&] {
        need(s, "structure");
        const StructureValue& v = s->f.value;
        if (auto* c = std::get_if<ComoduleData>(&v)) {
            ComoduleRoundTrip rt = duality_round_trip(*c);
            give(report, rt.report);
            give(out, rt.result);
        } else if (auto* m = std::get_if<ModuleData>(&v)) {
            ModuleRoundTrip rt = duality_round_trip(*m);
            give(report, rt.report);
            give(out, rt.result);
        } else {
            throw Error(ErrorKind::InvalidParameter, "round trip takes a module or comodule");
        }
    });
}

int bd_report_passed(const bd_report* r) { return r && r->r.passed() ? 1 : 0; }
size_t bd_report_size(const bd_report* r) { return r ? r->r.entries().size() : 0; }

bd_status bd_report_entry(const bd_report* r, size_t i, const char** equation, bd_verdict* verdict) {
    return guarded([&] {
        need(r, "report");
        if (i >= r->r.entries().size()) throw Error(ErrorKind::InvalidParameter, "entry index out of range");
        const CheckEntry& e = r->r.entries()[i];
        if (equation) *equation = e.equation.c_str();
        if (verdict) *verdict = static_cast<bd_verdict>(e.verdict);
    });
}

void bd_report_counts(const bd_report* r, size_t* pass, size_t* fail, size_t* skipped) {
    if (pass) *pass = r ? r->r.count(Verdict::Pass) : 0;
    if (fail) *fail = r ? r->r.count(Verdict::Fail) : 0;
    if (skipped) *skipped = r ? r->r.count(Verdict::Skipped) : 0;
}

bd_status bd_report_filter(const bd_report* r, const char* csv, bd_report** out) {
    return guarded([&] {
        need(r, "report");
        need(csv, "equation list");
        std::set<std::string> ids;
        std::stringstream ss(csv);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            if (!is_registered(id)) throw Error(ErrorKind::InvalidParameter, "unknown equation id '" + id + "'");
            ids.insert(id);
        }
        give(out, r->r.filtered(ids));
    });
}

bd_status bd_report_render(const bd_report* r, int json, const char* meta_csv, char** text) {
    return guarded([&] {
        need(r, "report");
        need(text, "output pointer");
        std::map<std::string, std::string> meta;
        if (meta_csv) {
            std::stringstream ss(meta_csv);
            std::string kv;
            while (std::getline(ss, kv, ',')) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                meta[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
        }
        *text = dup(json ? report_json(r->r, meta) : report_text(r->r));
    });
}

void bd_report_free(bd_report* r) { delete r; }

}  // extern "C"
