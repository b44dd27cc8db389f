#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace avgen {

using Shape = std::vector<int64_t>;

inline int64_t numel_of(const Shape& s) {
    int64_t n = 1;
    for (int64_t d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "x" : "") << s[i];
    os << "]";
    return os.str();
}

struct DimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major tensor. The buffer is shared so reshapes and handle copies
// are cheap; mutation through a copied handle is visible to all holders.
template <class S>
class Tensor {
public:
    Tensor() : shape_{}, buf_(std::make_shared<std::vector<S>>()) {}
    explicit Tensor(Shape shape)
        : shape_(std::move(shape)),
          buf_(std::make_shared<std::vector<S>>(numel_of(shape_), S(0))) {}
    Tensor(Shape shape, std::vector<S> data)
        : shape_(std::move(shape)), buf_(std::make_shared<std::vector<S>>(std::move(data))) {
        if (numel_of(shape_) != static_cast<int64_t>(buf_->size()))
            throw DimError("tensor data length " + std::to_string(buf_->size()) +
                           " does not match shape " + shape_str(shape_));
    }

    static Tensor full(Shape shape, S v) {
        Tensor t(std::move(shape));
        std::fill(t.begin(), t.end(), v);
        return t;
    }
    static Tensor scalar(S v) { return Tensor(Shape{}, std::vector<S>{v}); }

    const Shape& shape() const { return shape_; }
    int64_t dim(int i) const { return shape_[static_cast<size_t>(i)]; }
    int ndim() const { return static_cast<int>(shape_.size()); }
    int64_t numel() const { return static_cast<int64_t>(buf_->size()); }

    S* data() { return buf_->data(); }
    const S* data() const { return buf_->data(); }
    S* begin() { return data(); }
    S* end() { return data() + numel(); }
    const S* begin() const { return data(); }
    const S* end() const { return data() + numel(); }

    S& operator[](int64_t i) { return (*buf_)[static_cast<size_t>(i)]; }
    S operator[](int64_t i) const { return (*buf_)[static_cast<size_t>(i)]; }

    // Shares the buffer; only the view shape changes.
    Tensor reshaped(Shape s) const {
        if (numel_of(s) != numel())
            throw DimError("reshape " + shape_str(shape_) + " -> " + shape_str(s));
        Tensor t;
        t.shape_ = std::move(s);
        t.buf_ = buf_;
        return t;
    }

    Tensor clone() const {
        Tensor t;
        t.shape_ = shape_;
        t.buf_ = std::make_shared<std::vector<S>>(*buf_);
        return t;
    }

    template <class S2>
    Tensor<S2> cast() const {
        Tensor<S2> t{shape_};
        for (int64_t i = 0; i < numel(); ++i) t[i] = static_cast<S2>((*buf_)[i]);
        return t;
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    S max_abs() const {
        S m = 0;
        for (S v : *buf_) m = std::max(m, std::abs(v));
        return m;
    }
    bool all_finite() const {
        for (S v : *buf_) if (!std::isfinite(v)) return false;
        return true;
    }

private:
    Shape shape_;
    std::shared_ptr<std::vector<S>> buf_;
};

template <class S>
inline void check_same_shape(const Tensor<S>& a, const Tensor<S>& b, const char* what) {
    if (!a.same_shape(b))
        throw DimError(std::string(what) + ": shape mismatch " + shape_str(a.shape()) +
                       " vs " + shape_str(b.shape()));
}

}  // namespace avgen
