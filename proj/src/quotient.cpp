#include "homveech/quotient.hpp"

#include <algorithm>

namespace homveech {

QuotRing::QuotRing(IdealHNF modulus, Int enumeration_bound)
    : modulus_(std::move(modulus)),
      card_(modulus_.norm()),
      bound_(enumeration_bound) {
    if (card_ > bound_) return;  // arithmetic still works; unit queries throw
    unit_table_.assign(static_cast<std::size_t>(card_), false);
    for (Int idx = 0; idx < card_; ++idx) {
        QuotElem e = decode(idx);
        // e is a unit iff the ideal generated by its lift together with the
        // modulus is the whole ring.
        const QuadInt gens[] = {
            lift(e),
            lift(e) * QuadInt::w(modulus_.order()),
            modulus_.first_generator(),
            modulus_.second_generator(),
        };
        ModuleTriple t = module_hnf(modulus_.order(), gens);
        if (t.n == 1 && t.m == 1) {
            unit_table_[static_cast<std::size_t>(idx)] = true;
            units_.push_back(e);
        }
    }
}

QuotElem QuotRing::reduce_coords(Int u, Int v) const {
    Int m = modulus_.m(), n = modulus_.n(), a = modulus_.a();
    Int s = exact::mod_floor(v, m);
    u = exact::sub(u, exact::mul((v - s) / m, a));
    return {exact::mod_floor(u, n), s};
}

QuotElem QuotRing::reduce(const QuadInt& z) const {
    if (z.order() != modulus_.order()) throw OrderMismatch("reduce: element from wrong order");
    return reduce_coords(z.u(), z.v());
}

QuadInt QuotRing::lift(const QuotElem& e) const {
    return QuadInt::from_coords(modulus_.order(), e.r, e.s);
}

QuotElem QuotRing::add(const QuotElem& a, const QuotElem& b) const {
    return reduce_coords(exact::add(a.r, b.r), exact::add(a.s, b.s));
}

QuotElem QuotRing::sub(const QuotElem& a, const QuotElem& b) const {
    return reduce_coords(exact::sub(a.r, b.r), exact::sub(a.s, b.s));
}

QuotElem QuotRing::mul(const QuotElem& a, const QuotElem& b) const {
    // (u1 + v1 w)(u2 + v2 w) = u1 u2 + (u1 v2 + v1 u2 + v1 v2 d) w
    Int d = modulus_.order().d();
    Int u = exact::mul(a.r, b.r);
    Int v = exact::add(exact::add(exact::mul(a.r, b.s), exact::mul(a.s, b.r)),
                       exact::mul(exact::mul(a.s, b.s), d));
    return reduce_coords(u, v);
}

QuotElem QuotRing::neg(const QuotElem& a) const {
    return reduce_coords(exact::neg(a.r), exact::neg(a.s));
}

bool QuotRing::is_unit(const QuotElem& e) const {
    if (unit_table_.empty())
        throw BoundExceeded("quotient ring of norm " + std::to_string(card_) +
                            " exceeds enumeration bound " + std::to_string(bound_));
    return unit_table_[static_cast<std::size_t>(encode(e))];
}

std::optional<QuotElem> QuotRing::try_invert(const QuotElem& e) const {
    if (!is_unit(e)) return std::nullopt;
    QuotElem id = one();
    for (Int idx = 0; idx < card_; ++idx) {
        QuotElem x = decode(idx);
        if (mul(e, x) == id) return x;
    }
    return std::nullopt;  // unreachable for a genuine unit
}

const std::vector<QuotElem>& QuotRing::units() const {
    if (unit_table_.empty())
        throw BoundExceeded("quotient ring of norm " + std::to_string(card_) +
                            " exceeds enumeration bound " + std::to_string(bound_));
    return units_;
}

bool QuotRing::unimodular(const QuotElem& x, const QuotElem& y) const {
    const QuadInt gens[] = {
        lift(x), lift(x) * QuadInt::w(modulus_.order()),
        lift(y), lift(y) * QuadInt::w(modulus_.order()),
        modulus_.first_generator(), modulus_.second_generator(),
    };
    ModuleTriple t = module_hnf(modulus_.order(), gens);
    return t.n == 1 && t.m == 1;
}

std::optional<ProjPoint> QuotRing::proj_canonical(const QuotElem& x, const QuotElem& y) const {
    if (!unimodular(x, y)) return std::nullopt;
    bool first = true;
    ProjPoint best{};
    for (const QuotElem& t : units()) {
        ProjPoint cand{mul(t, x), mul(t, y)};
        if (first || cand < best) {
            best = cand;
            first = false;
        }
    }
    return best;
}

Int QuotRing::proj_line_count() const {
    if (card_ > 3000)
        throw BoundExceeded("proj_line_count: pair scan too large for norm " +
                            std::to_string(card_));
    std::vector<bool> seen(static_cast<std::size_t>(card_ * card_), false);
    Int count = 0;
    for (Int ix = 0; ix < card_; ++ix) {
        for (Int iy = 0; iy < card_; ++iy) {
            if (seen[static_cast<std::size_t>(ix * card_ + iy)]) continue;
            QuotElem x = decode(ix), y = decode(iy);
            if (!unimodular(x, y)) continue;
            ++count;
            for (const QuotElem& t : units()) {
                Int jx = encode(mul(t, x)), jy = encode(mul(t, y));
                seen[static_cast<std::size_t>(jx * card_ + jy)] = true;
            }
        }
    }
    return count;
}

namespace {
// Local factor exponent: 2 iff p splits and a is inside (p).
int c_exponent(const IdealHNF& a, Int p) {
    if (a.order().d() % p == 0) return 1;
    return principal_rational(a.order(), p).contains(a) ? 2 : 1;
}
}  // namespace

CongruenceIndices congruence_indices(const IdealHNF& a) {
    Int norm = a.norm();
    Int gamma0 = norm;
    Int phi = norm;
    Int sl2 = exact::mul(exact::mul(norm, norm), norm);
    for (auto [p, v] : exact::factorize(norm)) {
        int c = c_exponent(a, p);
        for (int i = 0; i < c; ++i) {
            gamma0 = exact::mul(exact::div_exact(gamma0, p, "gamma0 index"), p + 1);
            phi = exact::mul(exact::div_exact(phi, p, "phi"), p - 1);
            sl2 = exact::mul(exact::div_exact(sl2, exact::mul(p, p), "sl2 order"),
                             exact::sub(exact::mul(p, p), 1));
        }
    }
    return CongruenceIndices{gamma0, norm, phi, sl2};
}

Int sl2z_gamma0_index(Int n) {
    if (n < 1) throw PreconditionViolated("sl2z_gamma0_index: n >= 1 required");
    Int idx = n;
    for (auto [p, v] : exact::factorize(n))
        idx = exact::mul(exact::div_exact(idx, p, "sl2z index"), p + 1);
    return idx;
}

}  // namespace homveech
