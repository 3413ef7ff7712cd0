#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace staticflow {

/// Truncated power series in tau with double coefficients. All arithmetic is
/// closed at the stored order; products drop coefficients beyond it.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, 0.0) {}
    TruncatedSeries(std::initializer_list<double> coeffs) : c_(coeffs) {
        if (c_.empty()) throw std::invalid_argument("series: need at least the constant term");
    }
    explicit TruncatedSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series: need at least the constant term");
    }

    std::size_t order() const { return c_.size() - 1; }
    double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
    double& at(std::size_t k) { return c_.at(k); }
    const std::vector<double>& coeffs() const { return c_; }

    TruncatedSeries truncated(std::size_t order) const {
        TruncatedSeries out(order);
        for (std::size_t k = 0; k <= order && k < c_.size(); ++k) out.c_[k] = c_[k];
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::max(a.order(), b.order()));
        for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a[k] + b[k];
        return out;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::max(a.order(), b.order()));
        for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a[k] - b[k];
        return out;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::max(a.order(), b.order()));
        for (std::size_t k = 0; k < out.c_.size(); ++k) {
            double s = 0.0;
            for (std::size_t j = 0; j <= k; ++j) s += a[j] * b[k - j];
            out.c_[k] = s;
        }
        return out;
    }
    friend TruncatedSeries operator*(double s, const TruncatedSeries& a) {
        TruncatedSeries out = a;
        for (double& v : out.c_) v *= s;
        return out;
    }

    /// Division by a series with nonzero constant term.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (b[0] == 0.0) throw std::domain_error("series: division requires a unit constant term");
        TruncatedSeries out(std::max(a.order(), b.order()));
        for (std::size_t k = 0; k < out.c_.size(); ++k) {
            double s = a[k];
            for (std::size_t j = 0; j < k; ++j) s -= out.c_[j] * b[k - j];
            out.c_[k] = s / b[0];
        }
        return out;
    }

    /// d/dtau, order drops by one slot but stays stored at the same length.
    TruncatedSeries derivative() const {
        TruncatedSeries out(order());
        for (std::size_t k = 0; k + 1 < c_.size(); ++k)
            out.c_[k] = static_cast<double>(k + 1) * c_[k + 1];
        return out;
    }

    /// Multiplication by tau; the top coefficient falls off the truncation.
    TruncatedSeries shift_up() const {
        TruncatedSeries out(order());
        for (std::size_t k = 1; k < c_.size(); ++k) out.c_[k] = c_[k - 1];
        return out;
    }

    double evaluate(double tau) const {
        double v = 0.0;
        for (std::size_t k = c_.size(); k-- > 0;) v = v * tau + c_[k];
        return v;
    }

  private:
    std::vector<double> c_;
};

} // namespace staticflow
