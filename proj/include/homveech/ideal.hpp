#pragma once

#include <span>
#include <string>
#include <vector>

#include "homveech/quad_order.hpp"

namespace homveech {

// Raw Z-module triple produced by Hermite reduction: the lattice
// n*Z (+) (a + m*w)*Z in the standard basis, with n, m >= 1 and 0 <= a < n.
struct ModuleTriple {
    Int n;
    Int a;
    Int m;

    friend bool operator==(const ModuleTriple&, const ModuleTriple&) = default;
};

// Unique Z-module form of the span of the given generators, computed by
// 2-column Hermite reduction on standard-basis coordinates.  Throws
// ZeroModule when all generators vanish and DegenerateRank when the span
// has rank 1.
ModuleTriple module_hnf(Order order, std::span<const QuadInt> generators);

// Ideal criterion for a full-rank module triple: m | n, m | a (a = m*b)
// and n | m*N(b + w) with N(b + w) = b*(b + d).
bool is_ideal(Order order, const ModuleTriple& t);

// A nonzero ideal of O_{d^2} in canonical form [n; a + m*w].
class IdealHNF {
public:
    IdealHNF(Order order, Int n, Int a, Int m);  // canonicalizes a mod n; throws NotAnIdeal

    const Order& order() const { return order_; }
    Int n() const { return n_; }
    Int a() const { return a_; }
    Int m() const { return m_; }
    Int b() const { return a_ / m_; }
    Int norm() const { return exact::mul(m_, n_); }

    QuadInt first_generator() const { return QuadInt::integer(order_, n_); }
    QuadInt second_generator() const { return QuadInt::from_coords(order_, a_, m_); }

    bool is_unit_ideal() const { return n_ == 1 && m_ == 1; }

    bool contains(const QuadInt& z) const;
    bool contains(const IdealHNF& other) const;  // other is a subset of *this

    IdealHNF conjugate() const;

    // "[n;a+mw]" with the coefficient 1 elided, e.g. "[2;0+w]", "[3;0+3w]".
    std::string literal() const;

    friend bool operator==(const IdealHNF& a, const IdealHNF& b) {
        return a.order_ == b.order_ && a.n_ == b.n_ && a.a_ == b.a_ && a.m_ == b.m_;
    }
    friend bool operator!=(const IdealHNF& a, const IdealHNF& b) { return !(a == b); }

private:
    Order order_;
    Int n_;
    Int a_;
    Int m_;
};

std::ostream& operator<<(std::ostream& os, const IdealHNF& a);

IdealHNF unit_ideal(Order order);

// Principal ideal (z); requires N(z) != 0.
IdealHNF principal(const QuadInt& z);
IdealHNF principal_rational(Order order, Int k);  // (k * one), k != 0

IdealHNF multiply(const IdealHNF& a, const IdealHNF& b);
IdealHNF power(const IdealHNF& a, int e);  // e >= 0

// Ideal sum a + b, the gcd in the containment ordering.
IdealHNF sum_gcd(const IdealHNF& a, const IdealHNF& b);

// The prime ideals of norm p above a rational prime p: the single ideal
// [p; w] when p | d, otherwise [p; w] and [p; a + w] with a = -d (mod p).
std::vector<IdealHNF> primes_above(Order order, Int p);

struct RamifiedPart {
    Int p;               // p | d
    Int rational_exp;    // exponent of the irreducible principal ideal (p)
    bool extra_prime;    // one extra factor [p; w], per [p,w]^2 = (p)[p,w]
};

struct SplitPart {
    IdealHNF prime;      // [p; w]
    Int exp;
    IdealHNF conj_prime; // [p; a + w], the conjugate
    Int conj_exp;
};

struct IdealFactorization {
    Order order;
    std::vector<RamifiedPart> ramified;  // ascending p
    std::vector<SplitPart> split;        // ascending p
};

IdealHNF recombine(const IdealFactorization& f);

// Factors an ideal; split-prime exponents are found by repeated containment
// tests, ramified parts as (p)^e or (p)^e*[p;w].  Throws
// FactorizationAmbiguous when recombining the factors does not reproduce
// the input (possible only for ideals not coprime to d).
IdealFactorization factor(const IdealHNF& a);

// All canonical ideals with norm <= max_norm, sorted by (norm, n, m, a).
std::vector<IdealHNF> enumerate_ideals(Order order, Int max_norm);

}  // namespace homveech
