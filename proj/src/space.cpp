#include "braidual/space.hpp"

#include <algorithm>
#include <set>

#include "braidual/error.hpp"

namespace braidual {

namespace {

std::string strip_suffix(const std::string& s, char c) {
    if (!s.empty() && s.back() == c) return s.substr(0, s.size() - 1);
    return s;
}

}  // namespace

Space::Space() : Space("K1", {"1"}) {}

Space::Space(std::string name, std::vector<std::string> labels, std::vector<int> degrees,
             int cutoff, bool dual) {
    if (labels.empty()) throw Error(ErrorKind::InvalidParameter, "space '" + name + "' has dim 0");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw Error(ErrorKind::InvalidParameter, "space '" + name + "' has repeated labels");
    if (degrees.empty()) degrees.assign(labels.size(), 0);
    if (degrees.size() != labels.size())
        throw Error(ErrorKind::InvalidParameter, "space '" + name + "' degree list has wrong length");
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->labels = std::move(labels);
    d->degrees = std::move(degrees);
    d->cutoff = cutoff;
    d->dual = dual;
    d->max_degree = *std::max_element(d->degrees.begin(), d->degrees.end());
    d_ = std::move(d);
}

Space Space::numbered(const std::string& name, std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
    return Space(name, labels);
}

Space Space::dual() const {
    std::vector<std::string> labels;
    labels.reserve(dim());
    for (const auto& l : d_->labels) labels.push_back(d_->dual ? strip_suffix(l, '*') : l + "*");
    std::string name = d_->dual ? strip_suffix(d_->name, '\'') : d_->name + "'";
    return Space(name, labels, d_->degrees, d_->cutoff, !d_->dual);
}

Space Space::renamed(const std::string& name) const {
    return Space(name, d_->labels, d_->degrees, d_->cutoff, d_->dual);
}

Space Space::restricted(int cutoff) const {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (d_->degrees[i] <= cutoff) {
            labels.push_back(d_->labels[i]);
            degrees.push_back(d_->degrees[i]);
        }
    }
    return Space(d_->name, labels, degrees, truncated() ? std::min(cutoff, d_->cutoff) : -1, d_->dual);
}

bool Space::operator==(const Space& other) const {
    if (d_ == other.d_) return true;
    return d_->name == other.d_->name && d_->labels == other.d_->labels &&
           d_->degrees == other.d_->degrees && d_->cutoff == other.d_->cutoff &&
           d_->dual == other.d_->dual;
}

std::uint64_t total_dim(const Shape& shape) {
    std::uint64_t n = 1;
    for (const auto& s : shape) n *= s.dim();
    return n;
}

std::vector<std::size_t> split_index(const Shape& shape, std::uint64_t index) {
    std::vector<std::size_t> parts(shape.size());
    for (std::size_t k = shape.size(); k-- > 0;) {
        parts[k] = index % shape[k].dim();
        index /= shape[k].dim();
    }
    return parts;
}

std::uint64_t join_index(const Shape& shape, const std::vector<std::size_t>& parts) {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < shape.size(); ++k) index = index * shape[k].dim() + parts[k];
    return index;
}

int signed_degree(const Shape& shape, std::uint64_t index) {
    int deg = 0;
    for (std::size_t k = shape.size(); k-- > 0;) {
        deg += shape[k].signed_degree(index % shape[k].dim());
        index /= shape[k].dim();
    }
    return deg;
}

std::string index_label(const Shape& shape, std::uint64_t index) {
    if (shape.empty()) return "1";
    auto parts = split_index(shape, index);
    std::string out;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        if (k) out += "⊗";
        out += shape[k].label(parts[k]);
    }
    return out;
}

std::string shape_name(const Shape& shape) {
    if (shape.empty()) return "K";
    std::string out;
    for (std::size_t k = 0; k < shape.size(); ++k) {
        if (k) out += "⊗";
        out += shape[k].name();
    }
    return out;
}

Shape dual_shape(const Shape& shape) {
    Shape out;
    for (const auto& s : shape) out.push_back(s.dual());
    return out;
}

Shape concat(const Shape& a, const Shape& b) {
    Shape out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace braidual
