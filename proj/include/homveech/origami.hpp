#pragma once

#include <array>
#include <string>
#include <vector>

#include "homveech/sl2.hpp"

namespace homveech {

enum class SpinClass { Even, Odd, None };
enum class OrbitClass { A, B, Single };

std::string to_string(SpinClass s);
std::string to_string(OrbitClass c);

// The L-shaped square-tiled surface L(m, n) of genus two, glued from
// d = m + n - 1 unit squares.  For odd d the SL2(Z)-orbit is determined by
// the spin structure: class A (even spin, one integral Weierstrass point)
// iff m, n are both even or d = 3; class B (odd spin, three points) iff
// m, n are both odd with d > 3.  Even d gives a single orbit.
class Origami {
public:
    Origami(Int m, Int n);  // InvalidShape unless m, n >= 2

    // The shape the generator arguments are run on: L(d-1, 2) for even d
    // and for class A, L(d-2, 3) for class B.  Only on these does the
    // printed generator set provably realize the full predicted indices.
    static Origami canonical_representative(Int d, OrbitClass cls);

    Int m() const { return m_; }
    Int n() const { return n_; }
    Int d() const { return d_; }
    const Order& order() const { return order_; }

    OrbitClass orbit_class() const;
    SpinClass spin() const;
    Int integral_weierstrass_count() const;
    SpinClass complementary_spin() const;  // PreconditionViolated unless d odd, d > 3

    bool is_canonical_representative() const;

    QuadInt eta_plus() const;   // n - w
    QuadInt eta_minus() const;  // m - w

private:
    Int m_;
    Int n_;
    Int d_;
    Order order_;
};

// --- theta characteristics ------------------------------------------------

// A 2x2 binary array with rows eps, eps'; odd iff eps . eps' is odd.
struct ThetaChar {
    std::array<int, 2> eps;
    std::array<int, 2> epsp;

    int parity() const { return (eps[0] * epsp[0] + eps[1] * epsp[1]) % 2; }
    bool odd() const { return parity() == 1; }
    std::array<int, 2> column(int j) const { return {eps[j], epsp[j]}; }

    friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
};

ThetaChar translate(const ThetaChar& a, const ThetaChar& b);  // componentwise mod 2

// The six odd theta characteristics.
const std::array<ThetaChar, 6>& odd_theta_chars();

// Number of odd characteristics whose translate by t has second column
// (0, 0): 1 when the first column of t is (1, 1), otherwise 3.
int translate_count(const ThetaChar& t);  // NotOdd unless t is odd

// --- homology -------------------------------------------------------------

struct Mat4 {
    std::array<std::array<Int, 4>, 4> e{};  // columns are images of basis vectors

    friend bool operator==(const Mat4&, const Mat4&) = default;
};

Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat4 mat4_transpose(const Mat4& a);

// The intersection pairings on the ordered homology basis (a_1, a_m, b_1, b_n):
// (a_1, b_n) = (a_m, b_1) = (a_m, b_n) = 1 and all other pairings vanish.
Mat4 intersection_form();

Int symplectic_pairing(const std::array<Int, 4>& x, const std::array<Int, 4>& y);

// Pullback symplectic bases of the two homology summands:
// c_1 = (m-1) a_1 + a_m, d_1 = (n-1) b_1 + b_n and
// c_2 = n a_1 - a_m,     d_2 = -m b_1 + b_n, each pairing to d.
std::array<Int, 4> c1_vector(const Origami& o);
std::array<Int, 4> d1_vector(const Origami& o);
std::array<Int, 4> c2_vector(const Origami& o);
std::array<Int, 4> d2_vector(const Origami& o);

// Homology action (columns = images of a_1, a_m, b_1, b_n) of the parabolic
// fixing the diagonal direction (1, 1).
Mat4 diag11_homology_action(const Origami& o);

// Homology action of the horizontal cylinder twist.
Mat4 horizontal_twist_homology_action(const Origami& o);

// Reads the restriction of a symplectic homology action to the two
// summands and assembles the entry pairs into a matrix over O_{d^2}; the
// second factor enters conjugated by R = diag(-1, 1).
Mat2O assemble_pair(const Mat4& action, const Origami& o);

// --- cylinder decompositions ----------------------------------------------

enum class Direction { Horizontal, Vertical, Diag11, Steep2m };

struct CylinderData {
    Int circumference;
    Int height;
    Rational modulus;  // height / circumference
};

struct CylinderDecomposition {
    std::vector<CylinderData> cylinders;  // empty for Steep2m (twist data only)
    Int shear_exponent;                   // alpha, the lcm of the inverse moduli
    Mat2Z twist;                          // the parabolic Veech element
};

CylinderDecomposition cylinder_decomposition(const Origami& o, Direction dir);

// --- generator catalog ------------------------------------------------------

struct CatalogEntry {
    std::string label;  // "T", "Z", "E", "F" (or "Z", "S" for L(2,2))
    Mat2O matrix;
    Mat2Z first_component;
};

struct GeneratorCatalog {
    std::vector<CatalogEntry> entries;

    const CatalogEntry& by_label(const std::string& label) const;
    std::vector<Mat2O> matrices() const;
};

// Homology Veech group generators of L(m, n): the two axis twists
// T = (1, n-w; 0, 1) and Z = (1, 0; m-w, 1), the diagonal twist E, and the
// steep-direction twist F when the shape admits one (n = 2, or n = 3 with
// m odd).  L(2, 2) instead uses its known generating pair {Z, S}.  Every
// entry is validated for determinant 1 and membership in O_{d^2};
// a failure reports the offending entry via ValidationFailed.
GeneratorCatalog generator_catalog(const Origami& o);

}  // namespace homveech
