#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace braidual {

// A finite space with a fixed basis. Graded spaces carry a natural degree per
// basis vector; truncated ones stand for the degree <= cutoff part of an
// infinite graded space. Duals flip the sign of degrees.
class Space {
  public:
    Space();
    Space(std::string name, std::vector<std::string> labels,
          std::vector<int> degrees = {}, int cutoff = -1, bool dual = false);

    static Space numbered(const std::string& name, std::size_t dim);

    const std::string& name() const { return d_->name; }
    std::size_t dim() const { return d_->labels.size(); }
    const std::vector<std::string>& labels() const { return d_->labels; }
    const std::string& label(std::size_t i) const { return d_->labels[i]; }
    const std::vector<int>& degrees() const { return d_->degrees; }
    int degree(std::size_t i) const { return d_->degrees[i]; }
    int signed_degree(std::size_t i) const {
        return d_->dual ? -d_->degrees[i] : d_->degrees[i];
    }
    int max_degree() const { return d_->max_degree; }
    bool truncated() const { return d_->cutoff >= 0; }
    int cutoff() const { return d_->cutoff; }
    bool is_dual() const { return d_->dual; }
    bool graded() const { return d_->max_degree > 0 || truncated(); }

    // Toggles between a space and its dual; dual() of dual() is the original.
    Space dual() const;
    Space renamed(const std::string& name) const;
    // Basis vectors of degree <= cutoff, as a new truncated space.
    Space restricted(int cutoff) const;

    bool operator==(const Space& other) const;
    bool operator!=(const Space& other) const { return !(*this == other); }

  private:
    struct Data {
        std::string name;
        std::vector<std::string> labels;
        std::vector<int> degrees;
        int cutoff = -1;
        bool dual = false;
        int max_degree = 0;
    };
    std::shared_ptr<const Data> d_;
};

using Shape = std::vector<Space>;

std::uint64_t total_dim(const Shape& shape);
std::vector<std::size_t> split_index(const Shape& shape, std::uint64_t index);
std::uint64_t join_index(const Shape& shape, const std::vector<std::size_t>& parts);
int signed_degree(const Shape& shape, std::uint64_t index);
std::string index_label(const Shape& shape, std::uint64_t index);
std::string shape_name(const Shape& shape);
Shape dual_shape(const Shape& shape);
Shape concat(const Shape& a, const Shape& b);

}  // namespace braidual
