#include "braidual/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace braidual {

const char* structure_kind_name(StructureKind k) {
    switch (k) {
    case StructureKind::Braiding: return "braiding";
    case StructureKind::Algebra: return "algebra";
    case StructureKind::Coalgebra: return "coalgebra";
    case StructureKind::Bialgebra: return "bialgebra";
    case StructureKind::Hopf: return "hopf";
    case StructureKind::Module: return "module";
    case StructureKind::Comodule: return "comodule";
    }
    return "?";
}

namespace {

using Named = std::vector<std::pair<std::string, LinMap>>;

void add_braiding(Named& out, const std::string& prefix, const Braiding& b) {
    out.emplace_back(prefix + "braiding", b.psi);
    out.emplace_back(prefix + "braiding_inv", b.psi_inv);
}

void add_algebra(Named& out, const std::string& prefix, const AlgebraData& a, bool braiding) {
    if (braiding) add_braiding(out, prefix, a.braiding);
    out.emplace_back(prefix + "mult", a.mult);
    out.emplace_back(prefix + "unit", a.unit);
}

void add_coalgebra(Named& out, const CoalgebraData& c, bool braiding) {
    if (braiding) add_braiding(out, "", c.braiding);
    out.emplace_back("comult", c.comult);
    out.emplace_back("counit", c.counit);
}

void add_cross(Named& out, const CrossBraiding& x) {
    out.emplace_back("cross", x.psi);
    out.emplace_back("cross_inv", x.psi_inv);
}

// Maps in file order, plus side/provenance directives.
Named named_maps(const StructureValue& v, std::vector<std::string>& extra) {
    Named out;
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Braiding>) {
                add_braiding(out, "", d);
            } else if constexpr (std::is_same_v<T, AlgebraData>) {
                add_algebra(out, "", d, true);
            } else if constexpr (std::is_same_v<T, CoalgebraData>) {
                add_coalgebra(out, d, true);
            } else if constexpr (std::is_same_v<T, BialgebraData>) {
                add_algebra(out, "", d.algebra(), true);
                add_coalgebra(out, d.coalgebra(), false);
            } else if constexpr (std::is_same_v<T, HopfData>) {
                add_algebra(out, "", d.bialgebra.algebra(), true);
                add_coalgebra(out, d.bialgebra.coalgebra(), false);
                out.emplace_back("antipode", d.antipode);
                if (d.antipode_inv) out.emplace_back("antipode_inv", *d.antipode_inv);
            } else if constexpr (std::is_same_v<T, ModuleData>) {
                extra.push_back(std::string("side ") + side_name(d.side));
                extra.push_back(std::string("provenance ") + provenance_name(d.cross.provenance));
                add_algebra(out, "", d.algebra, true);
                if (d.coalgebra) add_coalgebra(out, *d.coalgebra, false);
                out.emplace_back("action", d.action);
                add_cross(out, d.cross);
                if (d.carrier_algebra) add_algebra(out, "carrier_", *d.carrier_algebra, true);
            } else {
                extra.push_back(std::string("side ") + side_name(d.side));
                extra.push_back(std::string("provenance ") + provenance_name(d.cross.provenance));
                add_coalgebra(out, d.coalgebra, true);
                if (d.algebra) add_algebra(out, "", *d.algebra, false);
                out.emplace_back("coaction", d.coaction);
                add_cross(out, d.cross);
                if (d.carrier_algebra) add_algebra(out, "carrier_", *d.carrier_algebra, true);
            }
        },
        v);
    return out;
}

void check_token(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_of(" \t\r\n#") != std::string::npos)
        throw Error(ErrorKind::InvalidParameter, what + " '" + s + "' cannot be written as a token");
}

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

struct SpaceDecl {
    std::string name;
    bool dual = false;
    int cutoff = -1;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    std::optional<Space> built;
};

struct MapDecl {
    LinMap map;
    std::size_t line;
};

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    StructureFile run() {
        std::istringstream in(text_);
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_;
            auto t = tokenize(raw);
            if (t.empty()) continue;
            if (current_) {
                body(t);
                continue;
            }
            directive(t);
        }
        if (current_) fail(line_ + 1, 1, "map '" + current_name_ + "' is missing 'end'");
        if (!saw_header_) fail(1, 1, "missing 'braidual-structure 1' header");
        if (!kind_) fail(line_ + 1, 1, "missing 'kind' directive");
        return assemble();
    }

  private:
    [[noreturn]] void fail(std::size_t line, std::size_t col, const std::string& why) const {
        throw ParseError(line, col, why);
    }

    void expect(const std::vector<Token>& t, std::size_t n) const {
        if (t.size() != n)
            fail(line_, t.size() > n ? t[n].column : t.back().column + t.back().text.size(),
                 "'" + t[0].text + "' takes " + std::to_string(n - 1) + " argument(s)");
    }

    long integer(const Token& tok) const {
        try {
            std::size_t used = 0;
            long v = std::stol(tok.text, &used);
            if (used == tok.text.size()) return v;
        } catch (const std::exception&) {
        }
        fail(line_, tok.column, "expected an integer, got '" + tok.text + "'");
    }

    SpaceDecl& decl(const Token& tok) {
        auto it = spaces_.find(tok.text);
        if (it == spaces_.end()) fail(line_, tok.column, "unknown space id '" + tok.text + "'");
        return it->second;
    }

    Space space(const Token& tok) {
        SpaceDecl& d = decl(tok);
        if (!d.built) {
            if (d.labels.empty()) fail(line_, tok.column, "space '" + tok.text + "' has no labels");
            try {
                d.built = Space(d.name, d.labels, d.degrees, d.cutoff, d.dual);
            } catch (const Error& e) {
                fail(line_, tok.column, e.what());
            }
        }
        return *d.built;
    }

    void directive(const std::vector<Token>& t) {
        const std::string& w = t[0].text;
        if (w == "braidual-structure") {
            expect(t, 2);
            if (t[1].text != "1") fail(line_, t[1].column, "unsupported format version");
            saw_header_ = true;
            return;
        }
        if (!saw_header_) fail(line_, t[0].column, "expected 'braidual-structure 1' header");
        if (w == "kind") {
            expect(t, 2);
            for (int k = 0; k <= static_cast<int>(StructureKind::Comodule); ++k)
                if (t[1].text == structure_kind_name(static_cast<StructureKind>(k)))
                    kind_ = static_cast<StructureKind>(k);
            if (!kind_) fail(line_, t[1].column, "unknown kind '" + t[1].text + "'");
            kind_line_ = line_;
        } else if (w == "param") {
            expect(t, 3);
            params_[t[1].text] = t[2].text;
        } else if (w == "side") {
            expect(t, 2);
            if (t[1].text != "left" && t[1].text != "right")
                fail(line_, t[1].column, "side must be left or right");
            side_ = t[1].text == "left" ? Side::Left : Side::Right;
        } else if (w == "provenance") {
            expect(t, 2);
            bool found = false;
            for (auto p : {Provenance::Given, Provenance::InducedDual, Provenance::InducedDualCirc,
                           Provenance::DoubleDualBullet})
                if (t[1].text == provenance_name(p)) provenance_ = p, found = true;
            if (!found) fail(line_, t[1].column, "unknown provenance '" + t[1].text + "'");
        } else if (w == "space") {
            expect(t, 5);
            if (spaces_.count(t[1].text)) fail(line_, t[1].column, "space id declared twice");
            if (t[1].text == "K") fail(line_, t[1].column, "'K' is reserved");
            SpaceDecl d;
            d.name = t[2].text;
            if (t[3].text != "plain" && t[3].text != "dual")
                fail(line_, t[3].column, "expected 'plain' or 'dual'");
            d.dual = t[3].text == "dual";
            d.cutoff = static_cast<int>(integer(t[4]));
            spaces_[t[1].text] = std::move(d);
        } else if (w == "labels") {
            if (t.size() < 3) fail(line_, t[0].column, "'labels' needs a space id and labels");
            SpaceDecl& d = decl(t[1]);
            for (std::size_t i = 2; i < t.size(); ++i) d.labels.push_back(t[i].text);
        } else if (w == "degrees") {
            if (t.size() < 3) fail(line_, t[0].column, "'degrees' needs a space id and degrees");
            SpaceDecl& d = decl(t[1]);
            for (std::size_t i = 2; i < t.size(); ++i)
                d.degrees.push_back(static_cast<int>(integer(t[i])));
        } else if (w == "map") {
            if (t.size() < 4) fail(line_, t[0].column, "'map' needs a name, domain, '->' and codomain");
            current_name_ = t[1].text;
            if (maps_.count(current_name_)) fail(line_, t[1].column, "map declared twice");
            Shape dom, cod;
            bool arrow = false;
            for (std::size_t i = 2; i < t.size(); ++i) {
                if (t[i].text == "->") {
                    if (arrow) fail(line_, t[i].column, "second '->'");
                    arrow = true;
                } else if (t[i].text != "K") {
                    (arrow ? cod : dom).push_back(space(t[i]));
                }
            }
            if (!arrow) fail(line_, t[0].column, "missing '->'");
            current_ = MapDecl{LinMap(dom, cod), line_};
            seen_.clear();
        } else {
            fail(line_, t[0].column, "unknown directive '" + w + "'");
        }
    }

    void body(const std::vector<Token>& t) {
        LinMap& m = current_->map;
        if (t[0].text == "end") {
            expect(t, 1);
            maps_.emplace(current_name_, std::move(*current_));
            current_.reset();
            return;
        }
        if (t[0].text == "unknown") {
            expect(t, 2);
            long c = integer(t[1]);
            if (c < 0 || static_cast<std::uint64_t>(c) >= m.dom_dim())
                fail(line_, t[1].column, "column out of range");
            m.mark_unknown(static_cast<std::uint64_t>(c));
            return;
        }
        if (t.size() != 3) fail(line_, t[0].column, "expected 'out in value', 'unknown c' or 'end'");
        long r = integer(t[0]);
        long c = integer(t[1]);
        if (r < 0 || static_cast<std::uint64_t>(r) >= m.cod_dim())
            fail(line_, t[0].column, "row out of range");
        if (c < 0 || static_cast<std::uint64_t>(c) >= m.dom_dim())
            fail(line_, t[1].column, "column out of range");
        if (!seen_.insert({r, c}).second) fail(line_, t[0].column, "entry given twice");
        Scalar v;
        try {
            v = parse_scalar(t[2].text);
        } catch (const Error&) {
            fail(line_, t[2].column, "bad scalar '" + t[2].text + "'");
        }
        m.set(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c), v);
    }

    std::optional<LinMap> opt(const std::string& name) {
        auto it = maps_.find(name);
        if (it == maps_.end()) return std::nullopt;
        used_.insert(name);
        return it->second.map;
    }

    LinMap need(const std::string& name) {
        auto m = opt(name);
        if (!m) fail(kind_line_, 1, std::string("kind ") + structure_kind_name(*kind_) +
                                        " needs map '" + name + "'");
        return *m;
    }

    std::size_t line_of(const std::string& name) const {
        auto it = maps_.find(name);
        return it == maps_.end() ? kind_line_ : it->second.line;
    }

    void shape(const std::string& name, const Shape& dom, const Shape& cod) {
        auto it = maps_.find(name);
        if (it == maps_.end()) return;
        const LinMap& m = it->second.map;
        if (m.domain() != dom || m.codomain() != cod)
            fail(it->second.line, 1,
                 "map '" + name + "' must be " + shape_name(dom) + " -> " + shape_name(cod) +
                     ", got " + shape_name(m.domain()) + " -> " + shape_name(m.codomain()));
    }

    Space square(const std::string& name) {
        LinMap m = need(name);
        if (m.domain().size() != 2 || m.domain()[0] != m.domain()[1])
            fail(line_of(name), 1, "map '" + name + "' must act on S⊗S");
        return m.domain()[0];
    }

    Braiding braiding(const std::string& prefix) {
        Space s = square(prefix + "braiding");
        shape(prefix + "braiding", {s, s}, {s, s});
        shape(prefix + "braiding_inv", {s, s}, {s, s});
        LinMap psi = need(prefix + "braiding");
        auto inv = opt(prefix + "braiding_inv");
        if (!inv) {
            try {
                inv = invert(psi);
            } catch (const Error& e) {
                fail(line_of(prefix + "braiding"), 1, e.what());
            }
        }
        return {s, psi, *inv};
    }

    AlgebraData algebra(const Braiding& b, const std::string& prefix) {
        const Space& s = b.space;
        shape(prefix + "mult", {s, s}, {s});
        shape(prefix + "unit", {}, {s});
        return {b, need(prefix + "mult"), need(prefix + "unit")};
    }

    CoalgebraData coalgebra(const Braiding& b) {
        const Space& s = b.space;
        shape("comult", {s}, {s, s});
        shape("counit", {s}, {});
        return {b, need("comult"), need("counit")};
    }

    CrossBraiding cross(const Space& left, const Space& right) {
        shape("cross", {left, right}, {right, left});
        shape("cross_inv", {right, left}, {left, right});
        LinMap psi = need("cross");
        auto inv = opt("cross_inv");
        if (!inv) {
            try {
                inv = invert(psi);
            } catch (const Error& e) {
                fail(line_of("cross"), 1, e.what());
            }
        }
        return {left, right, psi, *inv, provenance_};
    }

    Space carrier_of(const std::string& name, bool from_codomain, std::size_t index) {
        LinMap m = need(name);
        const Shape& s = from_codomain ? m.codomain() : m.domain();
        if (s.size() <= index) fail(line_of(name), 1, "map '" + name + "' has the wrong arity");
        return s[index];
    }

    std::optional<AlgebraData> carrier_algebra(const Space& v) {
        if (!maps_.count("carrier_braiding")) return std::nullopt;
        Braiding b = braiding("carrier_");
        if (b.space != v) fail(line_of("carrier_braiding"), 1, "carrier algebra lives on another space");
        return algebra(b, "carrier_");
    }

    StructureFile assemble() {
        StructureFile out;
        out.params = params_;
        switch (*kind_) {
        case StructureKind::Braiding: out.value = braiding(""); break;
        case StructureKind::Algebra: out.value = algebra(braiding(""), ""); break;
        case StructureKind::Coalgebra: out.value = coalgebra(braiding("")); break;
        case StructureKind::Bialgebra:
        case StructureKind::Hopf: {
            Braiding b = braiding("");
            AlgebraData a = algebra(b, "");
            CoalgebraData c = coalgebra(b);
            BialgebraData h{b, a.mult, a.unit, c.comult, c.counit};
            if (*kind_ == StructureKind::Bialgebra) {
                out.value = h;
                break;
            }
            shape("antipode", {b.space}, {b.space});
            shape("antipode_inv", {b.space}, {b.space});
            out.value = HopfData{h, need("antipode"), opt("antipode_inv")};
            break;
        }
        case StructureKind::Module: {
            if (!side_) fail(kind_line_, 1, "module needs a 'side' directive");
            ModuleData m;
            m.side = *side_;
            Braiding b = braiding("");
            m.algebra = algebra(b, "");
            if (maps_.count("comult")) m.coalgebra = coalgebra(b);
            m.carrier = carrier_of("action", true, 0);
            const Space& h = b.space;
            const Space& v = m.carrier;
            if (m.side == Side::Left) {
                shape("action", {h, v}, {v});
                m.cross = cross(h, v);
            } else {
                shape("action", {v, h}, {v});
                m.cross = cross(v, h);
            }
            m.action = need("action");
            m.carrier_algebra = carrier_algebra(v);
            out.value = std::move(m);
            break;
        }
        case StructureKind::Comodule: {
            if (!side_) fail(kind_line_, 1, "comodule needs a 'side' directive");
            ComoduleData c;
            c.side = *side_;
            Braiding b = braiding("");
            c.coalgebra = coalgebra(b);
            if (maps_.count("mult")) c.algebra = algebra(b, "");
            c.carrier = carrier_of("coaction", false, 0);
            const Space& h = b.space;
            const Space& v = c.carrier;
            if (c.side == Side::Left) {
                shape("coaction", {v}, {h, v});
                c.cross = cross(v, h);
            } else {
                shape("coaction", {v}, {v, h});
                c.cross = cross(h, v);
            }
            c.coaction = need("coaction");
            c.carrier_algebra = carrier_algebra(v);
            out.value = std::move(c);
            break;
        }
        }
        for (const auto& [name, decl] : maps_)
            if (!used_.count(name))
                fail(decl.line, 1, "map '" + name + "' is not part of a " +
                                       structure_kind_name(*kind_));
        return out;
    }

    const std::string& text_;
    std::size_t line_ = 0;
    bool saw_header_ = false;
    std::optional<StructureKind> kind_;
    std::size_t kind_line_ = 1;
    std::optional<Side> side_;
    Provenance provenance_ = Provenance::Given;
    std::map<std::string, std::string> params_;
    std::map<std::string, SpaceDecl> spaces_;
    std::map<std::string, MapDecl> maps_;
    std::set<std::string> used_;
    std::optional<MapDecl> current_;
    std::string current_name_;
    std::set<std::pair<long, long>> seen_;
};

}  // namespace

StructureFile parse_structure(const std::string& text) { return Parser(text).run(); }

std::string write_structure(const StructureFile& f) {
    std::vector<std::string> extra;
    Named maps = named_maps(f.value, extra);
    std::vector<Space> spaces;
    auto id_of = [&](const Space& s) {
        for (std::size_t i = 0; i < spaces.size(); ++i)
            if (spaces[i] == s) return "s" + std::to_string(i);
        spaces.push_back(s);
        return "s" + std::to_string(spaces.size() - 1);
    };
    std::ostringstream body;
    for (const auto& [name, m] : maps) {
        body << "map " << name;
        if (m.domain().empty()) body << " K";
        for (const auto& s : m.domain()) body << ' ' << id_of(s);
        body << " ->";
        if (m.codomain().empty()) body << " K";
        for (const auto& s : m.codomain()) body << ' ' << id_of(s);
        body << '\n';
        for (std::uint64_t c = 0; c < m.dom_dim(); ++c)
            for (const auto& [r, v] : m.column(c)) body << r << ' ' << c << ' ' << to_string(v) << '\n';
        for (std::uint64_t c = 0; c < m.dom_dim(); ++c)
            if (m.unknown(c)) body << "unknown " << c << '\n';
        body << "end\n";
    }
    std::ostringstream out;
    out << "braidual-structure 1\n";
    out << "kind " << structure_kind_name(f.kind()) << '\n';
    for (const auto& e : extra) out << e << '\n';
    for (const auto& [k, v] : f.params) {
        check_token(k, "parameter name");
        check_token(v, "parameter value");
        out << "param " << k << ' ' << v << '\n';
    }
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const Space& s = spaces[i];
        check_token(s.name(), "space name");
        out << "space s" << i << ' ' << s.name() << ' ' << (s.is_dual() ? "dual" : "plain") << ' '
            << s.cutoff() << '\n';
        out << "labels s" << i;
        for (const auto& l : s.labels()) {
            check_token(l, "label");
            out << ' ' << l;
        }
        out << "\ndegrees s" << i;
        for (int d : s.degrees()) out << ' ' << d;
        out << '\n';
    }
    out << body.str();
    return out.str();
}

StructureFile read_structure_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

void write_structure_file(const std::string& path, const StructureFile& f) {
    std::string text = write_structure(f);
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

bool same_structure(const StructureFile& a, const StructureFile& b) {
    if (a.kind() != b.kind()) return false;
    std::vector<std::string> ea, eb;
    Named ma = named_maps(a.value, ea);
    Named mb = named_maps(b.value, eb);
    auto tagged = [](const std::string& e) { return e.rfind("provenance ", 0) == 0; };
    std::erase_if(ea, tagged);
    std::erase_if(eb, tagged);
    if (ea != eb || ma.size() != mb.size()) return false;
    for (std::size_t i = 0; i < ma.size(); ++i)
        if (ma[i].first != mb[i].first || ma[i].second != mb[i].second) return false;
    return true;
}

std::string report_text(const CheckReport& r) {
    std::ostringstream out;
    for (const auto& e : r.entries()) {
        std::string v = verdict_name(e.verdict);
        for (auto& ch : v) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << v << std::string(8 - v.size(), ' ') << e.equation;
        if (!e.context.empty()) out << "  [" << e.context << "]";
        if (e.verdict == Verdict::Skipped)
            out << "  " << e.skipped << " column(s)";
        else
            out << "  " << e.evaluated << " column(s)";
        if (e.witness)
            out << "  at " << e.witness->domain_label << " -> " << e.witness->codomain_label
                << ": lhs " << to_string(e.witness->lhs) << ", rhs " << to_string(e.witness->rhs);
        if (!e.note.empty()) out << "  (" << e.note << ")";
        out << '\n';
    }
    out << "summary: " << r.count(Verdict::Pass) << " pass, " << r.count(Verdict::Fail) << " fail, "
        << r.count(Verdict::Skipped) << " skipped\n";
    return out.str();
}

std::string report_json(const CheckReport& r, const std::map<std::string, std::string>& meta) {
    using nlohmann::json;
    json entries = json::array();
    for (const auto& e : r.entries()) {
        json j{{"equation", e.equation},
               {"context", e.context},
               {"verdict", verdict_name(e.verdict)},
               {"evaluated", e.evaluated},
               {"skipped", e.skipped}};
        if (!e.note.empty()) j["note"] = e.note;
        if (e.witness)
            j["witness"] = {{"domain_index", e.witness->domain_index},
                            {"codomain_index", e.witness->codomain_index},
                            {"domain_label", e.witness->domain_label},
                            {"codomain_label", e.witness->codomain_label},
                            {"lhs", to_string(e.witness->lhs)},
                            {"rhs", to_string(e.witness->rhs)}};
        entries.push_back(std::move(j));
    }
    json out{{"passed", r.passed()},
             {"counts",
              {{"pass", r.count(Verdict::Pass)},
               {"fail", r.count(Verdict::Fail)},
               {"skipped", r.count(Verdict::Skipped)}}},
             {"entries", std::move(entries)}};
    for (const auto& [k, v] : meta) out["meta"][k] = v;
    return out.dump(2) + "\n";
}

}  // namespace braidual
