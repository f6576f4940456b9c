#include "braidual/linmap.hpp"

#include <algorithm>
#include <numeric>

#include "braidual/error.hpp"

namespace braidual {

namespace {

void require_same(const Shape& a, const Shape& b, const char* what) {
    if (a != b)
        throw Error(ErrorKind::ShapeMismatch,
                    std::string(what) + ": " + shape_name(a) + " vs " + shape_name(b));
}

// Sorts by row, sums duplicates, drops zeros.
LinMap::Column normalize(std::vector<LinMap::Entry> buf) {
    std::sort(buf.begin(), buf.end(),
              [](const LinMap::Entry& x, const LinMap::Entry& y) { return x.first < y.first; });
    LinMap::Column out;
    for (auto& e : buf) {
        if (!out.empty() && out.back().first == e.first) {
            out.back().second += e.second;
            if (out.back().second == 0) out.pop_back();
        } else if (e.second != 0) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

LinMap::LinMap(Shape domain, Shape codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
    cod_dim_ = total_dim(codomain_);
    cols_.resize(total_dim(domain_));
}

Scalar LinMap::at(std::uint64_t row, std::uint64_t col) const {
    const auto& c = cols_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, std::uint64_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) return it->second;
    return 0;
}

void LinMap::set(std::uint64_t row, std::uint64_t col, const Scalar& value) {
    if (row >= cod_dim_ || col >= cols_.size())
        throw Error(ErrorKind::ShapeMismatch, "index out of range");
    auto& c = cols_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, std::uint64_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
        if (value == 0) c.erase(it);
        else it->second = value;
    } else if (value != 0) {
        c.insert(it, Entry(row, value));
    }
}

void LinMap::add(std::uint64_t row, std::uint64_t col, const Scalar& value) {
    if (value == 0) return;
    set(row, col, at(row, col) + value);
}

void LinMap::set_column(std::uint64_t col, Column entries) { cols_.at(col) = std::move(entries); }

void LinMap::mark_unknown(std::uint64_t col) {
    if (unknown_.empty()) unknown_.assign(cols_.size(), false);
    unknown_[col] = true;
}

bool LinMap::has_unknown() const {
    return std::find(unknown_.begin(), unknown_.end(), true) != unknown_.end();
}

std::uint64_t LinMap::unknown_count() const {
    return static_cast<std::uint64_t>(std::count(unknown_.begin(), unknown_.end(), true));
}

std::uint64_t LinMap::nnz() const {
    std::uint64_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

bool LinMap::is_zero() const { return nnz() == 0; }

bool LinMap::same_table(const LinMap& other) const {
    return cod_dim_ == other.cod_dim_ && cols_ == other.cols_;
}

bool LinMap::operator==(const LinMap& other) const {
    if (domain_ != other.domain_ || codomain_ != other.codomain_ || !same_table(other))
        return false;
    for (std::uint64_t c = 0; c < cols_.size(); ++c)
        if (unknown(c) != other.unknown(c)) return false;
    return true;
}

LinMap LinMap::identity(const Shape& shape) {
    LinMap m(shape, shape);
    for (std::uint64_t i = 0; i < m.dom_dim(); ++i) m.cols_[i].emplace_back(i, 1);
    return m;
}

LinMap id(const Space& s) { return LinMap::identity({s}); }

LinMap compose(const LinMap& g, const LinMap& f) {
    require_same(f.codomain(), g.domain(), "compose");
    LinMap out(f.domain(), g.codomain());
    std::vector<LinMap::Entry> buf;
    for (std::uint64_t c = 0; c < f.dom_dim(); ++c) {
        buf.clear();
        bool unknown = f.unknown(c);
        for (const auto& [r, v] : f.column(c)) {
            if (g.unknown(r)) unknown = true;
            for (const auto& [r2, w] : g.column(r)) buf.emplace_back(r2, v * w);
        }
        out.set_column(c, normalize(buf));
        if (unknown) out.mark_unknown(c);
    }
    return out;
}

LinMap tensor(const LinMap& f, const LinMap& g) {
    LinMap out(concat(f.domain(), g.domain()), concat(f.codomain(), g.codomain()));
    const std::uint64_t gd = g.dom_dim(), gc = g.cod_dim();
    for (std::uint64_t c1 = 0; c1 < f.dom_dim(); ++c1) {
        for (std::uint64_t c2 = 0; c2 < gd; ++c2) {
            LinMap::Column col;
            col.reserve(f.column(c1).size() * g.column(c2).size());
            for (const auto& [r1, v] : f.column(c1))
                for (const auto& [r2, w] : g.column(c2)) col.emplace_back(r1 * gc + r2, v * w);
            std::uint64_t c = c1 * gd + c2;
            out.set_column(c, std::move(col));
            if (f.unknown(c1) || g.unknown(c2)) out.mark_unknown(c);
        }
    }
    return out;
}

LinMap tensor(std::initializer_list<LinMap> maps) {
    auto it = maps.begin();
    LinMap out = *it;
    for (++it; it != maps.end(); ++it) out = tensor(out, *it);
    return out;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
    require_same(a.domain(), b.domain(), "add (domain)");
    require_same(a.codomain(), b.codomain(), "add (codomain)");
    LinMap out(a.domain(), a.codomain());
    for (std::uint64_t c = 0; c < a.dom_dim(); ++c) {
        std::vector<LinMap::Entry> buf(a.column(c).begin(), a.column(c).end());
        buf.insert(buf.end(), b.column(c).begin(), b.column(c).end());
        out.set_column(c, normalize(std::move(buf)));
        if (a.unknown(c) || b.unknown(c)) out.mark_unknown(c);
    }
    return out;
}

LinMap scaled(const LinMap& a, const Scalar& s) {
    LinMap out(a.domain(), a.codomain());
    if (s == 0) return out;
    for (std::uint64_t c = 0; c < a.dom_dim(); ++c) {
        LinMap::Column col = a.column(c);
        for (auto& e : col) e.second *= s;
        out.set_column(c, std::move(col));
        if (a.unknown(c)) out.mark_unknown(c);
    }
    return out;
}

LinMap operator-(const LinMap& a, const LinMap& b) { return a + scaled(b, -1); }

LinMap invert(const LinMap& f) {
    const std::uint64_t n = f.dom_dim();
    if (n != f.cod_dim())
        throw Error(ErrorKind::ShapeMismatch, "invert: map is not square");
    if (f.has_unknown()) throw Error(ErrorKind::Singular, "invert: map has Unknown columns");
    // Rows are nodes 0..n-1, columns n..2n-1; invert each connected block.
    UnionFind uf(2 * n);
    for (std::uint64_t c = 0; c < n; ++c)
        for (const auto& [r, v] : f.column(c)) uf.unite(r, n + c);
    std::vector<std::vector<std::uint64_t>> rows(2 * n), cols(2 * n);
    for (std::uint64_t r = 0; r < n; ++r) rows[uf.find(r)].push_back(r);
    for (std::uint64_t c = 0; c < n; ++c) cols[uf.find(n + c)].push_back(c);

    LinMap inv(f.codomain(), f.domain());
    for (std::uint64_t root = 0; root < 2 * n; ++root) {
        const auto& R = rows[root];
        const auto& C = cols[root];
        if (R.empty() && C.empty()) continue;
        if (R.size() != C.size()) throw Error(ErrorKind::Singular, "invert: rank deficient");
        const std::size_t k = R.size();
        std::vector<std::size_t> row_pos(n, 0);
        for (std::size_t i = 0; i < k; ++i) row_pos[R[i]] = i;
        // a (k x 2k): [block | I]
        std::vector<std::vector<Scalar>> a(k, std::vector<Scalar>(2 * k));
        for (std::size_t j = 0; j < k; ++j)
            for (const auto& [r, v] : f.column(C[j])) a[row_pos[r]][j] = v;
        for (std::size_t i = 0; i < k; ++i) a[i][k + i] = 1;
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            while (piv < k && a[piv][col] == 0) ++piv;
            if (piv == k) throw Error(ErrorKind::Singular, "invert: rank deficient");
            std::swap(a[piv], a[col]);
            Scalar p = a[col][col];
            for (auto& x : a[col]) x /= p;
            for (std::size_t i = 0; i < k; ++i) {
                if (i == col || a[i][col] == 0) continue;
                Scalar factor = a[i][col];
                for (std::size_t j = col; j < 2 * k; ++j) a[i][j] -= factor * a[col][j];
            }
        }
        // Row i of the inverse belongs to domain index C[i], column j to codomain index R[j].
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (a[i][k + j] != 0) inv.set(C[i], R[j], a[i][k + j]);
    }
    return inv;
}

LinMap permute_legs(const LinMap& f, const std::vector<int>& legs, std::size_t n_cod) {
    const std::size_t p = f.codomain().size();
    const std::size_t total = p + f.domain().size();
    if (legs.size() != total || n_cod > total)
        throw Error(ErrorKind::ShapeMismatch, "permute_legs: wrong leg count");
    Shape old_legs = concat(f.codomain(), f.domain());
    Shape cod, dom;
    for (std::size_t i = 0; i < total; ++i) {
        std::size_t k = static_cast<std::size_t>(legs[i]);
        bool was_cod = k < p, is_cod = i < n_cod;
        Space s = was_cod == is_cod ? old_legs[k] : old_legs[k].dual();
        (is_cod ? cod : dom).push_back(s);
    }
    LinMap out(dom, cod);
    auto new_position = [&](std::uint64_t r, std::uint64_t c) {
        auto parts = split_index(f.codomain(), r);
        auto dparts = split_index(f.domain(), c);
        parts.insert(parts.end(), dparts.begin(), dparts.end());
        std::uint64_t row = 0, col = 0;
        for (std::size_t i = 0; i < n_cod; ++i) row = row * cod[i].dim() + parts[legs[i]];
        for (std::size_t i = n_cod; i < total; ++i)
            col = col * dom[i - n_cod].dim() + parts[legs[i]];
        return std::pair<std::uint64_t, std::uint64_t>(row, col);
    };
    std::vector<std::vector<LinMap::Entry>> buf(out.dom_dim());
    for (std::uint64_t c = 0; c < f.dom_dim(); ++c) {
        for (const auto& [r, v] : f.column(c)) {
            auto [row, col] = new_position(r, c);
            buf[col].emplace_back(row, v);
        }
    }
    for (std::uint64_t c = 0; c < out.dom_dim(); ++c) out.set_column(c, normalize(std::move(buf[c])));
    if (f.has_unknown()) {
        // Only positions allowed by homogeneity can carry an Unknown value.
        for (std::uint64_t c = 0; c < f.dom_dim(); ++c) {
            if (!f.unknown(c)) continue;
            int deg = signed_degree(f.domain(), c);
            for (std::uint64_t r = 0; r < f.cod_dim(); ++r) {
                if (signed_degree(f.codomain(), r) != deg) continue;
                out.mark_unknown(new_position(r, c).second);
            }
        }
    }
    return out;
}

LinMap transpose(const LinMap& f) {
    const int p = static_cast<int>(f.codomain().size());
    const int q = static_cast<int>(f.domain().size());
    std::vector<int> legs;
    for (int i = 0; i < q; ++i) legs.push_back(p + i);
    for (int i = 0; i < p; ++i) legs.push_back(i);
    return permute_legs(f, legs, static_cast<std::size_t>(q));
}

LinMap power(const LinMap& f, const LinMap& f_inv, int k) {
    LinMap out = LinMap::identity(f.domain());
    const LinMap& base = k >= 0 ? f : f_inv;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) out = base * out;
    return out;
}

LinMap permutation(const Shape& shape, const std::vector<int>& perm) {
    if (perm.size() != shape.size())
        throw Error(ErrorKind::ShapeMismatch, "permutation: wrong length");
    Shape out_shape;
    for (int k : perm) out_shape.push_back(shape.at(static_cast<std::size_t>(k)));
    LinMap out(shape, out_shape);
    std::vector<std::size_t> target(shape.size());
    for (std::uint64_t c = 0; c < out.dom_dim(); ++c) {
        auto parts = split_index(shape, c);
        for (std::size_t i = 0; i < perm.size(); ++i) target[i] = parts[perm[i]];
        out.set_column(c, {{join_index(out_shape, target), Scalar(1)}});
    }
    return out;
}

LinMap flip(const Space& a, const Space& b) { return permutation({a, b}, {1, 0}); }

LinMap evaluation(const Space& v) {
    LinMap out({v.dual(), v}, {});
    for (std::size_t i = 0; i < v.dim(); ++i) out.set(0, i * v.dim() + i, 1);
    return out;
}

LinMap mask_truncation(LinMap f) {
    const Shape& cod = f.codomain();
    bool any_truncated = false;
    for (const auto& s : cod) any_truncated |= s.truncated();
    if (!any_truncated) return f;
    for (std::uint64_t c = 0; c < f.dom_dim(); ++c) {
        const int s = signed_degree(f.domain(), c);
        bool contained = true;
        for (std::size_t k = 0; k < cod.size() && contained; ++k) {
            if (!cod[k].truncated()) continue;
            const bool positive = !cod[k].is_dual();
            long bound = positive ? s : -s;
            for (std::size_t j = 0; j < cod.size(); ++j) {
                if (j == k || cod[j].is_dual() == cod[k].is_dual()) continue;
                if (cod[j].truncated()) {
                    contained = false;
                    break;
                }
                bound += cod[j].max_degree();
            }
            if (contained && bound > cod[k].cutoff()) contained = false;
        }
        if (!contained) f.mark_unknown(c);
    }
    return f;
}

LinMap with_shapes(const LinMap& f, Shape domain, Shape codomain) {
    if (total_dim(domain) != f.dom_dim() || total_dim(codomain) != f.cod_dim())
        throw Error(ErrorKind::ShapeMismatch, "with_shapes: dimension mismatch");
    LinMap out(std::move(domain), std::move(codomain));
    for (std::uint64_t c = 0; c < f.dom_dim(); ++c) {
        out.set_column(c, f.column(c));
        if (f.unknown(c)) out.mark_unknown(c);
    }
    return out;
}

}  // namespace braidual

namespace braidual {

std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar> b, bool* unique) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Scalar inv = Scalar(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    if (unique) *unique = pivot_col.size() == cols;
    std::vector<Scalar> x(cols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

Space product_space(const Shape& shape, const std::string& name) {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    int cutoff = -1;
    for (const auto& s : shape)
        if (s.truncated()) cutoff = std::max(cutoff, s.cutoff());
    for (std::uint64_t i = 0; i < total_dim(shape); ++i) {
        labels.push_back(index_label(shape, i));
        degrees.push_back(signed_degree(shape, i));
    }
    return Space(name, labels, degrees, cutoff);
}

}  // namespace braidual
