#include "homveech/origami.hpp"

#include <algorithm>

namespace homveech {

std::string to_string(SpinClass s) {
    switch (s) {
        case SpinClass::Even: return "even";
        case SpinClass::Odd: return "odd";
        case SpinClass::None: return "none";
    }
    return "?";
}

std::string to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::A: return "A";
        case OrbitClass::B: return "B";
        case OrbitClass::Single: return "E";
    }
    return "?";
}

namespace {
Int checked_arm_sum(Int m, Int n) {
    if (m < 2 || n < 2)
        throw InvalidShape("L(" + std::to_string(m) + "," + std::to_string(n) +
                           "): both arms must have length >= 2");
    return exact::sub(exact::add(m, n), 1);
}
}  // namespace

Origami::Origami(Int m, Int n) : m_(m), n_(n), d_(checked_arm_sum(m, n)), order_(d_) {}

Origami Origami::canonical_representative(Int d, OrbitClass cls) {
    if (d < 3) throw InvalidShape("no genus-two L-shape with d < 3");
    switch (cls) {
        case OrbitClass::Single:
            if (d % 2 == 1) throw PreconditionViolated("single-orbit class requires even d");
            return Origami(d - 1, 2);
        case OrbitClass::A:
            if (d % 2 == 0) throw PreconditionViolated("class A requires odd d");
            return Origami(d - 1, 2);
        case OrbitClass::B:
            if (d % 2 == 0 || d == 3)
                throw PreconditionViolated("class B requires odd d > 3");
            return Origami(d - 2, 3);
    }
    throw PreconditionViolated("unknown orbit class");
}

bool Origami::is_canonical_representative() const {
    return (n_ == 2 && m_ == d_ - 1) || (n_ == 3 && m_ == d_ - 2 && m_ % 2 == 1);
}

OrbitClass Origami::orbit_class() const {
    if (d_ % 2 == 0) return OrbitClass::Single;
    if (d_ == 3 || (m_ % 2 == 0 && n_ % 2 == 0)) return OrbitClass::A;
    return OrbitClass::B;
}

SpinClass Origami::spin() const {
    switch (orbit_class()) {
        case OrbitClass::A: return SpinClass::Even;
        case OrbitClass::B: return SpinClass::Odd;
        case OrbitClass::Single: return SpinClass::None;
    }
    return SpinClass::None;
}

Int Origami::integral_weierstrass_count() const {
    if (d_ == 3) return 1;
    if (d_ % 2 == 0) return 2;
    return orbit_class() == OrbitClass::A ? 1 : 3;
}

SpinClass Origami::complementary_spin() const {
    if (d_ % 2 == 0 || d_ == 3)
        throw PreconditionViolated("complementary spin defined only for odd d > 3");
    return spin() == SpinClass::Even ? SpinClass::Odd : SpinClass::Even;
}

QuadInt Origami::eta_plus() const {
    return QuadInt::integer(order_, n_) - QuadInt::w(order_);
}

QuadInt Origami::eta_minus() const {
    return QuadInt::integer(order_, m_) - QuadInt::w(order_);
}

// --- theta characteristics ------------------------------------------------

ThetaChar translate(const ThetaChar& a, const ThetaChar& b) {
    return ThetaChar{{(a.eps[0] + b.eps[0]) % 2, (a.eps[1] + b.eps[1]) % 2},
                     {(a.epsp[0] + b.epsp[0]) % 2, (a.epsp[1] + b.epsp[1]) % 2}};
}

const std::array<ThetaChar, 6>& odd_theta_chars() {
    static const std::array<ThetaChar, 6> chars = {{
        {{0, 1}, {0, 1}},
        {{0, 1}, {1, 1}},
        {{1, 1}, {0, 1}},
        {{1, 0}, {1, 0}},
        {{1, 0}, {1, 1}},
        {{1, 1}, {1, 0}},
    }};
    return chars;
}

int translate_count(const ThetaChar& t) {
    if (!t.odd()) throw NotOdd("translate_count: characteristic is even");
    int count = 0;
    for (const ThetaChar& c : odd_theta_chars()) {
        ThetaChar moved = translate(c, t);
        if (moved.column(1) == std::array<int, 2>{0, 0}) ++count;
    }
    return count;
}

// --- homology -------------------------------------------------------------

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int acc = 0;
            for (int k = 0; k < 4; ++k) acc = exact::add(acc, exact::mul(a.e[i][k], b.e[k][j]));
            r.e[i][j] = acc;
        }
    return r;
}

Mat4 mat4_transpose(const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = a.e[j][i];
    return r;
}

Mat4 intersection_form() {
    Mat4 j;
    j.e = {{{0, 0, 0, 1}, {0, 0, 1, 1}, {0, -1, 0, 0}, {-1, -1, 0, 0}}};
    return j;
}

Int symplectic_pairing(const std::array<Int, 4>& x, const std::array<Int, 4>& y) {
    Mat4 j = intersection_form();
    Int acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            acc = exact::add(acc, exact::mul(x[i], exact::mul(j.e[i][k], y[k])));
    return acc;
}

std::array<Int, 4> c1_vector(const Origami& o) { return {o.m() - 1, 1, 0, 0}; }
std::array<Int, 4> d1_vector(const Origami& o) { return {0, 0, o.n() - 1, 1}; }
std::array<Int, 4> c2_vector(const Origami& o) { return {o.n(), -1, 0, 0}; }
std::array<Int, 4> d2_vector(const Origami& o) { return {0, 0, -o.m(), 1}; }

Mat4 diag11_homology_action(const Origami& o) {
    Int m = o.m(), n = o.n();
    Mat4 act;
    // columns: images of a_1, a_m, b_1, b_n
    std::array<std::array<Int, 4>, 4> cols = {{
        {m, 1, n - 1, 1},
        {(m - 1) * n, n + 1, (n - 1) * n, n},
        {-(m - 1), -1, -(n - 2), -1},
        {-(m - 1) * m, -m, -(n - 1) * m, -(m - 1)},
    }};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) act.e[i][j] = cols[j][i];
    return act;
}

Mat4 horizontal_twist_homology_action(const Origami& o) {
    Int m = o.m(), n = o.n();
    Mat4 act;
    std::array<std::array<Int, 4>, 4> cols = {{
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 1, 1, 0},
        {n * (m - 1), 1, 0, 1},
    }};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) act.e[i][j] = cols[j][i];
    return act;
}

namespace {

std::array<Int, 4> apply4(const Mat4& m, const std::array<Int, 4>& v) {
    std::array<Int, 4> r{};
    for (int i = 0; i < 4; ++i) {
        Int acc = 0;
        for (int k = 0; k < 4; ++k) acc = exact::add(acc, exact::mul(m.e[i][k], v[k]));
        r[i] = acc;
    }
    return r;
}

std::array<Int, 4> combine(Int alpha, const std::array<Int, 4>& c, Int beta,
                           const std::array<Int, 4>& d) {
    std::array<Int, 4> r{};
    for (int i = 0; i < 4; ++i)
        r[i] = exact::add(exact::mul(alpha, c[i]), exact::mul(beta, d[i]));
    return r;
}

// Restriction of the action to the symplectic summand spanned by (c, d):
// alpha = (x, d)/d, beta = (c, x)/d for x the image, checked exact.
struct Restriction {
    Int a, b, c, d;
};

Restriction restrict_to_summand(const Mat4& act, const std::array<Int, 4>& c,
                                const std::array<Int, 4>& d, Int pairing) {
    auto read = [&](const std::array<Int, 4>& basis_vec, Int& alpha, Int& beta) {
        std::array<Int, 4> x = apply4(act, basis_vec);
        Int num_alpha = symplectic_pairing(x, d);
        Int num_beta = symplectic_pairing(c, x);
        if (num_alpha % pairing != 0 || num_beta % pairing != 0)
            throw SummandNotPreserved("image has non-integral coordinates in the summand");
        alpha = num_alpha / pairing;
        beta = num_beta / pairing;
        if (x != combine(alpha, c, beta, d))
            throw SummandNotPreserved("image leaves the symplectic summand");
    };
    Restriction r{};
    read(c, r.a, r.c);
    read(d, r.b, r.d);
    return r;
}

}  // namespace

Mat2O assemble_pair(const Mat4& action, const Origami& o) {
    Mat4 j = intersection_form();
    if (mat4_mul(mat4_mul(mat4_transpose(action), j), action) != j)
        throw NotSymplectic("homology action does not preserve the intersection form");

    Int d = o.d();
    Restriction a1 = restrict_to_summand(action, c1_vector(o), d1_vector(o), d);
    Restriction a2 = restrict_to_summand(action, c2_vector(o), d2_vector(o), d);

    // Kani conjugation of the second factor by R = diag(-1, 1).
    Restriction b{a2.a, exact::neg(a2.b), exact::neg(a2.c), a2.d};

    Order ord = o.order();
    Mat2O result{QuadInt(ord, a1.a, b.a), QuadInt(ord, a1.b, b.b), QuadInt(ord, a1.c, b.c),
                 QuadInt(ord, a1.d, b.d)};
    OrderRing r{ord};
    if (!r.eq(det(r, result), r.one()))
        throw NotUnimodular("assembled pair has determinant != 1");
    return result;
}

// --- cylinder decompositions ----------------------------------------------

namespace {

Mat2Z f_first_component(const Origami& o) {
    Int m = o.m(), n = o.n(), d = o.d();
    if (n == 3 && m % 2 == 1)
        return {1 - 2 * (d - 2), 4, -(d - 2) * (d - 2), 1 + 2 * (d - 2)};
    if (n == 2) {
        if (m % 4 == 2)
            return {1 - 3 * m / 2, 3, -3 * m * m / 4, 1 + 3 * m / 2};
        if (m % 4 == 0)
            return {1 - 3 * m, 6, -3 * m * m / 2, 1 + 3 * m};
        return {1 - 6 * m, 12, -3 * m * m, 1 + 6 * m};
    }
    throw NotApplicable("no steep-direction twist for L(" + std::to_string(m) + "," +
                        std::to_string(n) + ")");
}

Int f_shear_exponent(const Origami& o) {
    Int m = o.m(), n = o.n();
    if (n == 3 && m % 2 == 1) return 2 * m;
    if (n == 2) {
        if (m % 4 == 2) return 3 * m / 2;
        if (m % 4 == 0) return 3 * m;
        return 6 * m;
    }
    throw NotApplicable("no steep-direction twist");
}

}  // namespace

CylinderDecomposition cylinder_decomposition(const Origami& o, Direction dir) {
    Int m = o.m(), n = o.n(), d = o.d();
    switch (dir) {
        case Direction::Horizontal:
            return {{{m, 1, Rational::of(1, m)}, {1, n - 1, Rational::of(n - 1, 1)}},
                    m,
                    {1, m, 0, 1}};
        case Direction::Vertical:
            return {{{n, 1, Rational::of(1, n)}, {1, m - 1, Rational::of(m - 1, 1)}},
                    n,
                    {1, 0, n, 1}};
        case Direction::Diag11:
            return {{{d, 1, Rational::of(1, d)}}, d, {1 - d, d, -d, 1 + d}};
        case Direction::Steep2m:
            // The steep direction contributes only its parabolic; cylinder
            // inventories are kept for the axis and diagonal cuts.
            return {{}, f_shear_exponent(o), f_first_component(o)};
    }
    throw NotApplicable("unknown direction");
}

// --- generator catalog ------------------------------------------------------

const CatalogEntry& GeneratorCatalog::by_label(const std::string& label) const {
    for (const CatalogEntry& e : entries)
        if (e.label == label) return e;
    throw Error("no catalog entry labeled " + label);
}

std::vector<Mat2O> GeneratorCatalog::matrices() const {
    std::vector<Mat2O> out;
    out.reserve(entries.size());
    for (const CatalogEntry& e : entries) out.push_back(e.matrix);
    return out;
}

namespace {

QuadInt entry(Order ord, const std::string& label, const char* pos, Int x, Int y) {
    try {
        return QuadInt(ord, x, y);
    } catch (const NotInOrder&) {
        throw ValidationFailed("catalog matrix " + label + " entry " + pos + " = (" +
                               std::to_string(x) + "," + std::to_string(y) +
                               ") is not in O_{d^2} for d=" + std::to_string(ord.d()));
    }
}

CatalogEntry make_entry(Order ord, const std::string& label, Int ax, Int ay, Int bx, Int by,
                        Int cx, Int cy, Int dx, Int dy) {
    CatalogEntry e{label,
                   {entry(ord, label, "1,1", ax, ay), entry(ord, label, "1,2", bx, by),
                    entry(ord, label, "2,1", cx, cy), entry(ord, label, "2,2", dx, dy)},
                   {ax, bx, cx, dx}};
    OrderRing r{ord};
    if (!r.eq(det(r, e.matrix), r.one()))
        throw ValidationFailed("catalog matrix " + label + " has determinant " +
                               det(r, e.matrix).to_string() + " != 1");
    return e;
}

Int half(Int x) { return exact::div_exact(x, 2, "catalog entry"); }
Int quarter(Int x) { return exact::div_exact(x, 4, "catalog entry"); }

}  // namespace

GeneratorCatalog generator_catalog(const Origami& o) {
    Order ord = o.order();
    Int m = o.m(), n = o.n(), d = o.d();
    GeneratorCatalog cat;

    if (m == 2 && n == 2) {
        cat.entries.push_back(make_entry(ord, "Z", 1, 1, 0, 0, 2, -1, 1, 1));
        cat.entries.push_back(make_entry(ord, "S", 0, 0, 1, 1, -1, -1, 0, 0));
        return cat;
    }

    cat.entries.push_back(make_entry(ord, "T", 1, 1, n, n - d, 0, 0, 1, 1));
    cat.entries.push_back(make_entry(ord, "Z", 1, 1, 0, 0, m, m - d, 1, 1));
    cat.entries.push_back(make_entry(ord, "E", 1 - d, 1, d, 0, -d, 0, 1 + d, 1));

    if (n == 3 && m % 2 == 1) {
        cat.entries.push_back(make_entry(ord, "F",
                                         1 - 2 * (d - 2), 5 - d,
                                         4, 4 - d,
                                         -(d - 2) * (d - 2), d - 4,
                                         1 + 2 * (d - 2), d - 3));
    } else if (n == 2) {
        if (m % 4 == 2) {
            cat.entries.push_back(make_entry(ord, "F",
                                             1 - half(3 * m), 2 - half(m),
                                             3, -(m - 2),
                                             -quarter(3 * m * m), quarter(m - 2),
                                             1 + half(3 * m), half(m)));
        } else if (m % 4 == 0) {
            cat.entries.push_back(make_entry(ord, "F",
                                             1 - 3 * m, 3 - m,
                                             6, -2 * (m - 2),
                                             -half(3 * m * m), half(m - 2),
                                             1 + 3 * m, m - 1));
        } else {
            cat.entries.push_back(make_entry(ord, "F",
                                             1 - 6 * m, 5 - 2 * m,
                                             12, -4 * (m - 2),
                                             -3 * m * m, m - 2,
                                             1 + 6 * m, 2 * m - 3));
        }
    }
    return cat;
}

}  // namespace homveech
