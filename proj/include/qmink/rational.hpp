#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qmink {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_error : error {
    using error::error;
};
struct pole_error : error {
    using error::error;
};
struct sign_error : error {
    using error::error;
};
struct orientation_error : error {
    using error::error;
};
struct cap_error : error {
    using error::error;
};
struct consistency_error : error {
    using error::error;
};
struct singular_error : error {
    using error::error;
};

inline std::string rat_to_string(const Rat& r)
{
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1)
        os << "/" << denominator(r);
    return os.str();
}

/// Gaussian rational a + b*i. The constant field of every coefficient;
/// conjugation is exact (i -> -i).
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}
    GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o)
    {
        Rat r = re_ * o.re_ - im_ * o.im_;
        Rat i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o)
    {
        if (o.is_zero())
            throw division_error("division by zero Gaussian rational");
        Rat n = o.norm();
        Rat r = (re_ * o.re_ + im_ * o.im_) / n;
        Rat i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Total order used only for canonical tie-breaking, not a field order.
    friend bool operator<(const GaussRat& a, const GaussRat& b)
    {
        if (a.re_ != b.re_)
            return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    GaussRat pow(unsigned long e) const
    {
        GaussRat acc(1), base = *this;
        while (e) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// "3", "-3/2", "i", "-i", "2*i", "(1-2*i)"
    std::string str() const
    {
        if (im_ == 0)
            return rat_to_string(re_);
        if (re_ == 0) {
            if (im_ == 1)
                return "i";
            if (im_ == -1)
                return "-i";
            return rat_to_string(im_) + "*i";
        }
        std::string s = "(" + rat_to_string(re_);
        if (im_ > 0)
            s += im_ == 1 ? "+i" : "+" + rat_to_string(im_) + "*i";
        else
            s += im_ == -1 ? "-i" : "-" + rat_to_string(-im_) + "*i";
        return s + ")";
    }

private:
    Rat re_{0};
    Rat im_{0};
};

} // namespace qmink
