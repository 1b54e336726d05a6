#pragma once

#include <optional>
#include <vector>

#include "homveech/ideal.hpp"

namespace homveech {

inline constexpr Int kDefaultEnumerationBound = 1'000'000;

// Canonical residue r + s*w with 0 <= r < n, 0 <= s < m; compared in
// (s, r)-major order, which drives projective-point canonicalization.
struct QuotElem {
    Int r = 0;
    Int s = 0;

    friend bool operator==(const QuotElem&, const QuotElem&) = default;
    friend bool operator<(const QuotElem& a, const QuotElem& b) {
        return a.s != b.s ? a.s < b.s : a.r < b.r;
    }
};

struct ProjPoint {
    QuotElem x;
    QuotElem y;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

// The finite ring O_D / a.  All arithmetic is on canonical residues; the
// unit table is built once at construction (when the cardinality is within
// the enumeration bound) and never mutated afterwards, so a constructed
// ring is safe to share across threads.
class QuotRing {
public:
    explicit QuotRing(IdealHNF modulus, Int enumeration_bound = kDefaultEnumerationBound);

    const IdealHNF& modulus() const { return modulus_; }
    Int cardinality() const { return card_; }

    QuotElem reduce(const QuadInt& z) const;
    QuadInt lift(const QuotElem& e) const;

    QuotElem zero() const { return {0, 0}; }
    QuotElem one() const { return reduce(QuadInt::one(modulus_.order())); }
    QuotElem add(const QuotElem& a, const QuotElem& b) const;
    QuotElem sub(const QuotElem& a, const QuotElem& b) const;
    QuotElem mul(const QuotElem& a, const QuotElem& b) const;
    QuotElem neg(const QuotElem& a) const;
    bool eq(const QuotElem& a, const QuotElem& b) const { return a == b; }
    using Elem = QuotElem;

    Int encode(const QuotElem& e) const { return e.s * modulus_.n() + e.r; }
    QuotElem decode(Int idx) const { return {idx % modulus_.n(), idx / modulus_.n()}; }

    bool is_unit(const QuotElem& e) const;
    std::optional<QuotElem> try_invert(const QuotElem& e) const;
    const std::vector<QuotElem>& units() const;  // BoundExceeded if over bound
    Int unit_count() const { return static_cast<Int>(units().size()); }

    // (x, y) generates the unit ideal together with the modulus.
    bool unimodular(const QuotElem& x, const QuotElem& y) const;

    // Canonical representative of the unit-scaling orbit of (x, y); empty
    // when the pair is not unimodular.
    std::optional<ProjPoint> proj_canonical(const QuotElem& x, const QuotElem& y) const;

    // #P^1 by full scan over pairs (the brute-force route; the closed form
    // is congruence_indices().gamma0_index).
    Int proj_line_count() const;

private:
    QuotElem reduce_coords(Int u, Int v) const;

    IdealHNF modulus_;
    Int card_;
    Int bound_;
    std::vector<bool> unit_table_;   // empty when card_ > bound_
    std::vector<QuotElem> units_;
};

struct CongruenceIndices {
    Int gamma0_index;       // [SL2(O_D) : Gamma_0(a)] = #P^1(O_D/a)
    Int gamma0_to_gamma1;   // [Gamma_0(a) : Gamma_1(a)] = N(a)
    Int gamma1_to_gamma;    // [Gamma_1(a) : Gamma(a)] = phi(a)
    Int sl2_quotient_order; // [SL2(O_D) : Gamma(a)] = #SL2(O_D/a)

    Int phi() const { return gamma1_to_gamma; }
};

// Closed-form index formulas: gamma0 = N * prod (1 + 1/p)^{c_p} and
// #SL2 = N^3 * prod (1 - 1/p^2)^{c_p}, where c_p = 2 iff p does not divide
// the discriminant and a is contained in (p), else 1.
CongruenceIndices congruence_indices(const IdealHNF& a);

// Classical [SL2(Z) : Gamma_0(n)] = n * prod_{p | n} (1 + 1/p).
Int sl2z_gamma0_index(Int n);

}  // namespace homveech
