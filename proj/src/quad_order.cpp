#include "homveech/quad_order.hpp"

#include <ostream>
#include <sstream>

namespace homveech {

Order::Order(Int d) : d_(d) {
    if (d < 2) throw PreconditionViolated("Order requires d >= 2");
}

QuadInt::QuadInt(Order order, Int x, Int y) : order_(order), x_(x), y_(y) {
    if (exact::mod_floor(exact::sub(x, y), order.d()) != 0)
        throw NotInOrder("(" + std::to_string(x) + "," + std::to_string(y) + ") not in O_{" +
                         std::to_string(order.d()) + "^2}: x != y (mod d)");
}

QuadInt QuadInt::from_coords(Order order, Int u, Int v) {
    return QuadInt(order, u, exact::add(u, exact::mul(v, order.d())));
}

namespace {
void require_same_order(const QuadInt& a, const QuadInt& b) {
    if (a.order() != b.order())
        throw OrderMismatch("mixing elements of O_{" + std::to_string(a.order().d()) +
                            "^2} and O_{" + std::to_string(b.order().d()) + "^2}");
}
}  // namespace

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    require_same_order(a, b);
    return QuadInt(a.order_, exact::add(a.x_, b.x_), exact::add(a.y_, b.y_));
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    require_same_order(a, b);
    return QuadInt(a.order_, exact::sub(a.x_, b.x_), exact::sub(a.y_, b.y_));
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    require_same_order(a, b);
    return QuadInt(a.order_, exact::mul(a.x_, b.x_), exact::mul(a.y_, b.y_));
}

QuadInt operator-(const QuadInt& a) {
    return QuadInt(a.order_, exact::neg(a.x_), exact::neg(a.y_));
}

std::string QuadInt::to_string() const {
    Int uu = u(), vv = v();
    std::ostringstream os;
    if (vv == 0) {
        os << uu;
    } else {
        if (uu != 0) {
            os << uu;
            os << (vv > 0 ? "+" : "-");
        } else if (vv < 0) {
            os << "-";
        }
        Int av = vv < 0 ? -vv : vv;
        if (av != 1) os << av;
        os << "w";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadInt& z) {
    return os << z.to_string();
}

std::optional<QuadInt> divides(const QuadInt& a, const QuadInt& c) {
    require_same_order(a, c);
    if (!a.is_regular()) throw ZeroDivisor("divides: divisor has a zero component");
    if (c.x() % a.x() != 0 || c.y() % a.y() != 0) return std::nullopt;
    Int qx = c.x() / a.x();
    Int qy = c.y() / a.y();
    if (exact::mod_floor(exact::sub(qx, qy), a.order().d()) != 0) return std::nullopt;
    return QuadInt(a.order(), qx, qy);
}

bool member_by_trace_norm(Order order, const Rational& x, const Rational& y) {
    Int d = order.d();
    if (!exact::is_squarefree(d))
        throw PreconditionViolated("member_by_trace_norm requires squarefree d");
    Rational tr = x + y;
    Rational nm = x * y;
    if (!tr.is_integer() || !nm.is_integer()) return false;
    Int t = exact::mod_floor(tr.num, d);
    Int n = exact::mod_floor(nm.num, d);
    for (Int v = 0; v < d; ++v) {
        if (exact::mod_floor(2 * v, d) == t && exact::mod_floor(v * v, d) == n) return true;
    }
    return false;
}

}  // namespace homveech
