#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "braidual/scalar.hpp"
#include "braidual/space.hpp"

namespace braidual {

// Sparse linear map between tensor products, stored by column. A column may be
// marked Unknown: its true value lies outside a truncated codomain.
class LinMap {
  public:
    using Entry = std::pair<std::uint64_t, Scalar>;
    using Column = std::vector<Entry>;

    LinMap() = default;
    LinMap(Shape domain, Shape codomain);

    const Shape& domain() const { return domain_; }
    const Shape& codomain() const { return codomain_; }
    std::uint64_t dom_dim() const { return cols_.size(); }
    std::uint64_t cod_dim() const { return cod_dim_; }

    const Column& column(std::uint64_t c) const { return cols_[c]; }
    Scalar at(std::uint64_t row, std::uint64_t col) const;
    void set(std::uint64_t row, std::uint64_t col, const Scalar& value);
    void add(std::uint64_t row, std::uint64_t col, const Scalar& value);
    // Replaces a whole column; entries must be sorted and nonzero.
    void set_column(std::uint64_t col, Column entries);

    bool unknown(std::uint64_t col) const {
        return !unknown_.empty() && unknown_[col];
    }
    void mark_unknown(std::uint64_t col);
    bool has_unknown() const;
    std::uint64_t unknown_count() const;
    void clear_unknown() { unknown_.clear(); }

    std::uint64_t nnz() const;
    bool is_zero() const;

    // Same coefficients, same Unknown columns, same shapes.
    bool operator==(const LinMap& other) const;
    bool operator!=(const LinMap& other) const { return !(*this == other); }
    // Same dims and coefficients, shapes ignored.
    bool same_table(const LinMap& other) const;

    static LinMap identity(const Shape& shape);

  private:
    Shape domain_;
    Shape codomain_;
    std::uint64_t cod_dim_ = 0;
    std::vector<Column> cols_;
    std::vector<bool> unknown_;
};

LinMap id(const Space& s);
LinMap compose(const LinMap& g, const LinMap& f);
inline LinMap operator*(const LinMap& g, const LinMap& f) { return compose(g, f); }
LinMap tensor(const LinMap& f, const LinMap& g);
LinMap tensor(std::initializer_list<LinMap> maps);
LinMap operator+(const LinMap& a, const LinMap& b);
LinMap operator-(const LinMap& a, const LinMap& b);
LinMap scaled(const LinMap& a, const Scalar& s);

LinMap invert(const LinMap& f);
LinMap transpose(const LinMap& f);
// f^k for k >= 0, f_inv^(-k) for k < 0.
LinMap power(const LinMap& f, const LinMap& f_inv, int k);

// Legs are numbered codomain factors first, then domain factors. The result
// takes legs[0..n_cod) as codomain and the rest as domain; a leg that changes
// side is replaced by its dual space.
LinMap permute_legs(const LinMap& f, const std::vector<int>& legs, std::size_t n_cod);

// Permutes tensor factors: factor i of the output is factor perm[i] of the input.
LinMap permutation(const Shape& shape, const std::vector<int>& perm);
LinMap flip(const Space& a, const Space& b);
// Evaluation pairing V' (x) V -> K with <e^i, e_j> = delta_ij.
LinMap evaluation(const Space& v);
// Marks columns whose true output degree sector is not contained in the
// truncated codomain.
LinMap mask_truncation(LinMap f);
// Same coefficients with relabeled spaces of equal dims.
LinMap with_shapes(const LinMap& f, Shape domain, Shape codomain);

}  // namespace braidual

namespace braidual {

// Dense exact solve of A x = b. Empty optional when inconsistent; `unique`
// reports whether the solution space is a single point.
std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> a,
                                                std::vector<Scalar> b, bool* unique);

// One space whose basis is the tensor basis of the factors.
Space product_space(const Shape& shape, const std::string& name);

}  // namespace braidual
