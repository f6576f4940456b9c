#include "braidual/catalog.hpp"

#include <algorithm>
#include <map>
#include <regex>

namespace braidual {

namespace {

using Vec = std::map<std::uint64_t, Scalar>;

void check_q(const Scalar& q, int cutoff) {
    if (q == 0) throw Error(ErrorKind::InvalidParameter, "q must be nonzero");
    if (cutoff < 0 || cutoff > kMaxCutoff)
        throw Error(ErrorKind::InvalidParameter,
                    "cutoff must lie in [0, " + std::to_string(kMaxCutoff) + "]");
}

LinMap unit_of(const Space& h, std::size_t one) {
    LinMap u({}, {h});
    u.set(one, 0, 1);
    return u;
}

LinMap counit_from(const Space& h, const std::vector<Scalar>& values) {
    LinMap e({h}, {});
    for (std::size_t i = 0; i < h.dim(); ++i)
        if (values[i] != 0) e.set(0, i, values[i]);
    return e;
}

BraidedHopf finish(BialgebraData b) {
    LinMap s = solve_antipode(b);
    LinMap s_inv = invert(s);
    return BraidedHopf::make({std::move(b), std::move(s), std::move(s_inv)});
}

// Diagonal braiding Psi(e_i (x) e_j) = chi(i,j) e_j (x) e_i.
template <class Chi>
LinMap diagonal_braiding(const Space& h, Chi chi) {
    const std::size_t n = h.dim();
    LinMap psi({h, h}, {h, h});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) psi.set(j * n + i, i * n + j, chi(i, j));
    return psi;
}

// Delta(u) for every basis vector, built from the coproducts of generators
// through the braided tensor product of H with itself.
LinMap comult_from_generators(const Space& h, const LinMap& mult, const LinMap& psi,
                              const std::vector<std::pair<std::size_t, std::size_t>>& factor,
                              const std::vector<std::size_t>& order,
                              std::map<std::size_t, Vec> known) {
    const std::uint64_t n = h.dim();
    auto product = [&](const Vec& a, const Vec& b) {
        Vec out;
        for (const auto& [ia, ca] : a)
            for (const auto& [ib, cb] : b) {
                std::uint64_t a1 = ia / n, a2 = ia % n, b1 = ib / n, b2 = ib % n;
                for (const auto& [r, cp] : psi.column(a2 * n + b1)) {
                    std::uint64_t p = r / n, p2 = r % n;  // b1 moved left, a2 right
                    if (mult.unknown(a1 * n + p) || mult.unknown(p2 * n + b2))
                        throw Error(ErrorKind::NotClosed, "coproduct leaves truncation");
                    for (const auto& [x, cx] : mult.column(a1 * n + p))
                        for (const auto& [y, cy] : mult.column(p2 * n + b2))
                            out[x * n + y] += ca * cb * cp * cx * cy;
                }
            }
        return out;
    };
    for (std::size_t u : order) {
        if (known.count(u)) continue;
        auto [g, w] = factor[u];
        Scalar c = mult.at(u, g * n + w);
        Vec d = product(known.at(g), known.at(w));
        for (auto& [k, v] : d) v /= c;
        known[u] = std::move(d);
    }
    LinMap delta({h}, {h, h});
    for (const auto& [u, vec] : known)
        for (const auto& [k, v] : vec)
            if (v != 0) delta.set(k, u, v);
    return delta;
}

}  // namespace

Scalar q_binomial(const Scalar& q, int n, int k) {
    if (k < 0 || k > n) return 0;
    // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
    std::vector<std::vector<Scalar>> t(n + 1, std::vector<Scalar>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        t[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? scalar_pow(q, j) * t[i - 1][j] : Scalar(0));
    }
    return t[n][k];
}

BraidedHopf make_group_bialgebra(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidParameter, "group order must be >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
    Space h("KZ" + std::to_string(n), labels);
    const std::uint64_t d = n;
    LinMap m({h, h}, {h}), delta({h}, {h, h});
    for (std::uint64_t i = 0; i < d; ++i) {
        for (std::uint64_t j = 0; j < d; ++j) m.set((i + j) % d, i * d + j, 1);
        delta.set(i * d + i, i, 1);
    }
    return finish({Braiding::flip_on(h), m, unit_of(h, 0), delta,
                   counit_from(h, std::vector<Scalar>(n, 1))});
}

BraidedHopf make_superline() {
    Space h("SL", {"1", "x"}, {0, 1});
    LinMap psi = diagonal_braiding(h, [](std::size_t i, std::size_t j) {
        return Scalar(i == 1 && j == 1 ? -1 : 1);
    });
    LinMap m({h, h}, {h});
    m.set(0, 0, 1);
    m.set(1, 1, 1);
    m.set(1, 2, 1);
    LinMap delta({h}, {h, h});
    delta.set(0, 0, 1);
    delta.set(1, 1, 1);  // 1 (x) x
    delta.set(2, 1, 1);  // x (x) 1
    return finish({Braiding::from(psi), m, unit_of(h, 0), delta, counit_from(h, {1, 0})});
}

GradedStructure make_braided_line_truncated(const Scalar& q, int cutoff) {
    check_q(q, cutoff);
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (int i = 0; i <= cutoff; ++i) {
        labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
        degrees.push_back(i);
    }
    Space h("BL", labels, degrees, cutoff);
    const std::uint64_t n = h.dim();
    LinMap psi = diagonal_braiding(h, [&](std::size_t i, std::size_t j) {
        return scalar_pow(q, static_cast<long>(i * j));
    });
    LinMap m({h, h}, {h});
    LinMap delta({h}, {h, h});
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = 0; i + j < n; ++j) m.set(i + j, i * n + j, 1);
        for (std::uint64_t k = 0; k <= i; ++k)
            delta.set(k * n + (i - k), i, q_binomial(q, static_cast<int>(i), static_cast<int>(k)));
    }
    std::vector<Scalar> eps(n, 0);
    eps[0] = 1;
    BraidedHopf hopf = finish({Braiding::from(psi), mask_truncation(m), unit_of(h, 0),
                               mask_truncation(delta), counit_from(h, eps)});
    return {GradedFamily::BraidedLine, q, cutoff, std::move(hopf)};
}

GradedStructure make_quantum_plane_truncated(const Scalar& q, int cutoff) {
    check_q(q, cutoff);
    std::vector<std::pair<int, int>> mono;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    auto power_label = [](const char* v, int e) {
        return e == 0 ? std::string() : e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
    };
    for (int d = 0; d <= cutoff; ++d)
        for (int a = d; a >= 0; --a) {
            int b = d - a;
            mono.emplace_back(a, b);
            std::string l = power_label("x", a) + power_label("y", b);
            labels.push_back(l.empty() ? "1" : l);
            degrees.push_back(d);
        }
    Space h("QP", labels, degrees, cutoff);
    const std::uint64_t n = h.dim();
    std::map<std::pair<int, int>, std::uint64_t> index;
    for (std::uint64_t i = 0; i < n; ++i) index[mono[i]] = i;
    LinMap psi = diagonal_braiding(h, [&](std::size_t i, std::size_t j) {
        auto [a, b] = mono[i];
        auto [c, d] = mono[j];
        return scalar_pow(q, b * c - a * d);
    });
    LinMap m({h, h}, {h});
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
            auto [a, b] = mono[i];
            auto [c, d] = mono[j];
            auto it = index.find({a + c, b + d});
            if (it != index.end()) m.set(it->second, i * n + j, scalar_pow(q, b * c));
        }
    m = mask_truncation(m);
    std::map<std::size_t, Vec> known;
    known[0] = {{0, 1}};
    std::vector<std::pair<std::size_t, std::size_t>> factor(n);
    std::vector<std::size_t> order;
    for (std::uint64_t i = 1; i < n; ++i) {
        auto [a, b] = mono[i];
        if (a + b == 1) {
            known[i] = {{i * n, 1}, {i, 1}};
            continue;
        }
        std::size_t g = a > 0 ? index.at({1, 0}) : index.at({0, 1});
        std::size_t w = a > 0 ? index.at({a - 1, b}) : index.at({0, b - 1});
        factor[i] = {g, w};
        order.push_back(i);
    }
    LinMap delta = comult_from_generators(h, m, psi, factor, order, std::move(known));
    std::vector<Scalar> eps(n, 0);
    eps[0] = 1;
    BraidedHopf hopf = finish({Braiding::from(psi), m, unit_of(h, 0), mask_truncation(delta),
                               counit_from(h, eps)});
    return {GradedFamily::QuantumPlane, q, cutoff, std::move(hopf)};
}

HopfData restrict_degree(const HopfData& h, int cutoff) {
    const Space& full = h.space();
    Space s = full.restricted(cutoff);
    std::vector<std::uint64_t> keep;
    for (std::size_t i = 0; i < full.dim(); ++i)
        if (full.degree(i) <= cutoff) keep.push_back(i);
    std::map<std::uint64_t, std::uint64_t> pos;
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
    auto restrict_map = [&](const LinMap& f, std::size_t nd, std::size_t nc) {
        Shape dom(nd, s), cod(nc, s);
        LinMap out(dom, cod);
        const std::uint64_t fn = full.dim(), sn = s.dim();
        auto reindex = [&](std::uint64_t idx, std::size_t legs, std::uint64_t& res) {
            res = 0;
            std::uint64_t scale = 1, acc = 0;
            for (std::size_t l = 0; l < legs; ++l) {
                auto it = pos.find(idx % fn);
                if (it == pos.end()) return false;
                acc += it->second * scale;
                scale *= sn;
                idx /= fn;
            }
            res = acc;
            return true;
        };
        for (std::uint64_t c = 0; c < f.dom_dim(); ++c) {
            std::uint64_t nc_idx;
            if (!reindex(c, nd, nc_idx)) continue;
            if (f.unknown(c)) {
                out.mark_unknown(nc_idx);
                continue;
            }
            for (const auto& [r, v] : f.column(c)) {
                std::uint64_t nr;
                if (reindex(r, nc, nr)) out.set(nr, nc_idx, v);
            }
        }
        return mask_truncation(out);
    };
    const BialgebraData& b = h.bialgebra;
    LinMap psi = restrict_map(b.braiding.psi, 2, 2);
    LinMap psi_inv = restrict_map(b.braiding.psi_inv, 2, 2);
    psi.clear_unknown();
    psi_inv.clear_unknown();
    HopfData out{{Braiding{s, psi, psi_inv}, restrict_map(b.mult, 2, 1), restrict_map(b.unit, 0, 1),
                  restrict_map(b.comult, 1, 2), restrict_map(b.counit, 1, 0)},
                 restrict_map(h.antipode, 1, 1), std::nullopt};
    if (h.antipode_inv) out.antipode_inv = restrict_map(*h.antipode_inv, 1, 1);
    return out;
}

CheckReport check_graded_up_to(const GradedStructure& g, int cutoff) {
    if (cutoff < 0 || cutoff > g.cutoff)
        throw Error(ErrorKind::InvalidParameter, "cutoff exceeds the structure's truncation");
    return check_hopf(restrict_degree(g.hopf.data(), cutoff));
}

namespace {

struct GradedName {
    std::string family;
    Scalar q;
    int deg;
};

std::optional<GradedName> parse_graded(const std::string& name) {
    static const std::regex re(R"((bline|qplane):q=(-?[0-9]+(?:/[0-9]+)?):deg=([0-9]+))");
    std::smatch m;
    if (!std::regex_match(name, m, re)) return std::nullopt;
    return GradedName{m[1], parse_scalar(m[2].str()), std::stoi(m[3])};
}

}  // namespace

bool is_catalog_name(const std::string& name) {
    static const std::regex zn(R"(zn:[0-9]+)");
    return name == "superline" || std::regex_match(name, zn) || parse_graded(name).has_value();
}

BraidedHopf catalog_hopf(const std::string& name) {
    static const std::regex zn(R"(zn:([0-9]+))");
    std::smatch m;
    if (name == "superline") return make_superline();
    if (std::regex_match(name, m, zn)) {
        int n = std::stoi(m[1]);
        if (n > 64) throw Error(ErrorKind::Limit, "group order above 64");
        return make_group_bialgebra(n);
    }
    if (auto g = parse_graded(name)) {
        if (g->family == "bline") return make_braided_line_truncated(g->q, g->deg).hopf;
        return make_quantum_plane_truncated(g->q, g->deg).hopf;
    }
    throw ParseError(1, 1, "unknown catalog instance '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"zn:1",           "zn:2",           "zn:3",           "zn:4",
            "superline",      "bline:q=1:deg=4", "bline:q=2:deg=4", "qplane:q=1:deg=3",
            "qplane:q=2:deg=3"};
}

}  // namespace braidual

namespace braidual {

const std::vector<std::string>& module_kinds() {
    static const std::vector<std::string> k{
        "regular-module",   "regular-right-module",  "trivial-module", "regular-comodule",
        "regular-left-comodule", "trivial-comodule", "natural-module"};
    return k;
}

namespace {

std::pair<std::string, std::string> split_module_name(const std::string& name) {
    auto slash = name.rfind('/');
    if (slash == std::string::npos) return {name, ""};
    return {name.substr(0, slash), name.substr(slash + 1)};
}

}  // namespace

bool is_catalog_module_name(const std::string& name) {
    auto [base, kind] = split_module_name(name);
    return is_catalog_name(base) &&
           std::find(module_kinds().begin(), module_kinds().end(), kind) != module_kinds().end();
}

ModuleOrComodule catalog_module(const std::string& name) {
    auto [base, kind] = split_module_name(name);
    if (!is_catalog_module_name(name))
        throw ParseError(1, 1, "unknown catalog module '" + name + "'");
    BialgebraData h = catalog_hopf(base).data().bialgebra;
    const Space& s = h.space();
    auto self = CrossBraiding::self(h.braiding);
    if (kind == "regular-module")
        return ModuleData{Side::Left, h.algebra(), h.coalgebra(), s, h.mult, self, std::nullopt};
    if (kind == "regular-right-module")
        return ModuleData{Side::Right, h.algebra(), h.coalgebra(), s, h.mult, self, std::nullopt};
    if (kind == "regular-comodule")
        return ComoduleData{Side::Right, h.coalgebra(), h.algebra(), s, h.comult, self, h.algebra()};
    if (kind == "regular-left-comodule")
        return ComoduleData{Side::Left, h.coalgebra(), h.algebra(), s, h.comult, self, h.algebra()};
    if (kind == "natural-module") return natural_action(h).first;

    AlgebraData z2 = make_group_bialgebra(2).data().bialgebra.algebra();
    Space v = z2.space().renamed("T");
    auto re = [&](const LinMap& f, std::size_t nd, std::size_t nc) {
        return with_shapes(f, Shape(nd, v), Shape(nc, v));
    };
    AlgebraData b{{v, re(z2.braiding.psi, 2, 2), re(z2.braiding.psi_inv, 2, 2)},
                  re(z2.mult, 2, 1),
                  re(z2.unit, 0, 1)};
    if (kind == "trivial-module")
        return ModuleData{Side::Left, h.algebra(), h.coalgebra(), v, tensor(h.counit, id(v)),
                          CrossBraiding::flip_between(s, v), b};
    return ComoduleData{Side::Right, h.coalgebra(), h.algebra(), v, tensor(id(v), h.unit),
                        CrossBraiding::flip_between(s, v), b};
}

std::vector<std::string> catalog_module_names() {
    std::vector<std::string> out;
    for (const auto& base : catalog_names())
        for (const auto& k : module_kinds()) out.push_back(base + "/" + k);
    return out;
}

}  // namespace braidual
