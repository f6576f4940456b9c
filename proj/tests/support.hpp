#pragma once

// Plain dense helpers used as oracles: they never call compose/tensor/invert.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "braidual/braided.hpp"
#include "braidual/linmap.hpp"

namespace oracle {

using braidual::LinMap;
using braidual::Scalar;
using braidual::Shape;
using braidual::Space;
using Matrix = std::vector<std::vector<Scalar>>;

inline Matrix dense(const LinMap& f) {
    Matrix m(f.cod_dim(), std::vector<Scalar>(f.dom_dim(), Scalar(0)));
    for (std::uint64_t c = 0; c < f.dom_dim(); ++c)
        for (const auto& [r, v] : f.column(c)) m[r][c] = v;
    return m;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix out(n, std::vector<Scalar>(m, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < m; ++l) out[i][l] += a[i][j] * b[j][l];
        }
    return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    std::size_t ar = a.size(), ac = ar ? a[0].size() : 1;
    std::size_t br = b.size(), bc = br ? b[0].size() : 1;
    Matrix out(ar * br, std::vector<Scalar>(ac * bc, Scalar(0)));
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t j = 0; j < ac; ++j)
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    return out;
}

inline Matrix eye(std::size_t n) {
    Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline LinMap from_dense(const Shape& dom, const Shape& cod, const Matrix& m) {
    LinMap f(dom, cod);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c)
            if (m[r][c] != 0) f.set(r, c, m[r][c]);
    return f;
}

inline LinMap table(const Shape& dom, const Shape& cod,
                    const std::vector<std::tuple<std::uint64_t, std::uint64_t, Scalar>>& entries) {
    LinMap f(dom, cod);
    for (const auto& [r, c, v] : entries) f.set(r, c, v);
    return f;
}

// Coefficient of the output basis tensor `out` in f applied to basis tensor `in`.
inline Scalar coeff(const LinMap& f, const std::vector<std::size_t>& out,
                    const std::vector<std::size_t>& in) {
    return f.at(braidual::join_index(f.codomain(), out), braidual::join_index(f.domain(), in));
}

inline Scalar random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

inline LinMap random_map(const Shape& dom, const Shape& cod, std::mt19937& rng, int density = 2) {
    LinMap f(dom, cod);
    std::uniform_int_distribution<int> coin(0, density);
    for (std::uint64_t c = 0; c < f.dom_dim(); ++c)
        for (std::uint64_t r = 0; r < f.cod_dim(); ++r)
            if (coin(rng) == 0) f.set(r, c, random_rational(rng));
    return f;
}

// Index of a label in a space; -1 when absent.
inline int at_label(const Space& s, const std::string& label) {
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (s.label(i) == label) return static_cast<int>(i);
    return -1;
}

// Vectors in a tensor product as sums of basis tensors.
using Vec = std::map<std::vector<std::size_t>, Scalar>;

inline Vec basis(std::vector<std::size_t> idx) { return {{std::move(idx), Scalar(1)}}; }

inline Vec cleaned(Vec v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second == 0 ? v.erase(it) : std::next(it);
    return v;
}

inline Vec plus(Vec a, const Vec& b, const Scalar& s = 1) {
    for (const auto& [k, c] : b) a[k] += s * c;
    return cleaned(std::move(a));
}

// Applies f to the legs [pos, pos + #domain) of every term.
inline Vec apply_at(const LinMap& f, std::size_t pos, const Vec& v) {
    Vec out;
    const auto& dom = f.domain();
    const auto& cod = f.codomain();
    for (const auto& [idx, c] : v) {
        std::uint64_t col = 0;
        for (std::size_t k = 0; k < dom.size(); ++k) col = col * dom[k].dim() + idx[pos + k];
        for (const auto& [row, val] : f.column(col)) {
            std::vector<std::size_t> parts(cod.size());
            std::uint64_t r = row;
            for (std::size_t k = cod.size(); k-- > 0;) {
                parts[k] = r % cod[k].dim();
                r /= cod[k].dim();
            }
            std::vector<std::size_t> next(idx.begin(), idx.begin() + pos);
            next.insert(next.end(), parts.begin(), parts.end());
            next.insert(next.end(), idx.begin() + pos + dom.size(), idx.end());
            out[next] += c * val;
        }
    }
    return cleaned(std::move(out));
}

// All basis tensors of a shape.
inline std::vector<std::vector<std::size_t>> all_indices(const Shape& shape) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (const auto& s : shape) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& p : out)
            for (std::size_t i = 0; i < s.dim(); ++i) {
                auto q = p;
                q.push_back(i);
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

template <class F>
std::optional<braidual::ErrorKind> thrown_kind(F&& f) {
    try {
        f();
    } catch (const braidual::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace oracle
