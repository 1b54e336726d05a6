#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "homveech/exact.hpp"

namespace homveech {

using exact::Int;
using exact::Rational;

// The quadratic order of square discriminant d^2, realized as the subring
// {(x, y) in Z x Z : x = y (mod d)} of Q (+) Q.  Its standard Z-basis is
// one = (1, 1) and w = (0, d), with w^2 = d*w.
class Order {
public:
    explicit Order(Int d);

    Int d() const { return d_; }
    Int discriminant() const { return exact::mul(d_, d_); }

    friend bool operator==(const Order& a, const Order& b) { return a.d_ == b.d_; }
    friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }

private:
    Int d_;
};

// An element (x, y) of O_{d^2}, stored componentwise; the standard-basis
// coordinates (u, v) with value u*one + v*w are derived views.
class QuadInt {
public:
    QuadInt(Order order, Int x, Int y);  // throws NotInOrder unless x = y (mod d)

    static QuadInt from_coords(Order order, Int u, Int v);
    static QuadInt zero(Order order) { return QuadInt(order, 0, 0); }
    static QuadInt one(Order order) { return QuadInt(order, 1, 1); }
    static QuadInt w(Order order) { return QuadInt(order, 0, order.d()); }
    static QuadInt integer(Order order, Int k) { return QuadInt(order, k, k); }

    const Order& order() const { return order_; }
    Int x() const { return x_; }
    Int y() const { return y_; }
    Int u() const { return x_; }
    Int v() const { return (y_ - x_) / order_.d(); }

    QuadInt conjugate() const { return QuadInt(order_, y_, x_); }
    Int norm() const { return exact::mul(x_, y_); }
    Int trace() const { return exact::add(x_, y_); }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    // Zero divisors of Z x Z inside the order: exactly one component vanishes.
    bool is_zero_divisor() const { return !is_zero() && (x_ == 0 || y_ == 0); }
    bool is_regular() const { return x_ != 0 && y_ != 0; }

    friend QuadInt operator+(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator-(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator*(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator-(const QuadInt& a);

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.order_ == b.order_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QuadInt& a, const QuadInt& b) { return !(a == b); }

    // "u+vw" form, e.g. "2-w", "3", "-9+2w".
    std::string to_string() const;

private:
    Order order_;
    Int x_;
    Int y_;
};

std::ostream& operator<<(std::ostream& os, const QuadInt& z);

// Componentwise exact quotient c / a, present iff the quotient exists and
// lies in the order.  a must be regular.
std::optional<QuadInt> divides(const QuadInt& a, const QuadInt& c);

// Membership test from trace and norm alone: z = (x, y) with rational
// components lies in O_{d^2} iff tr, N are integers and tr = 2v, N = v^2
// (mod d) for some v.  Valid only for squarefree d.
bool member_by_trace_norm(Order order, const Rational& x, const Rational& y);

}  // namespace homveech
