#include "homveech/ideal.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace homveech {

ModuleTriple module_hnf(Order order, std::span<const QuadInt> generators) {
    if (generators.empty()) throw ZeroModule("module_hnf: no generators");
    bool all_zero = true;
    for (const QuadInt& g : generators) {
        if (g.order() != order) throw OrderMismatch("module_hnf: generator from wrong order");
        if (!g.is_zero()) all_zero = false;
    }
    if (all_zero) throw ZeroModule("module_hnf: all generators are zero");

    // Pivot (a, m): an element of the span whose w-coordinate is
    // gcd of all w-coordinates.
    Int m = 0, a = 0;
    for (const QuadInt& g : generators) {
        Int v = g.v();
        if (v == 0) continue;
        if (m == 0) {
            m = v;
            a = g.u();
        } else {
            auto e = exact::ext_gcd(m, v);
            a = exact::add(exact::mul(e.x, a), exact::mul(e.y, g.u()));
            m = e.g;
        }
    }
    if (m < 0) {
        m = exact::neg(m);
        a = exact::neg(a);
    }
    if (m == 0) throw DegenerateRank("module_hnf: span lies in Z*one (rank 1)");

    // Span \cap Z*one = n*Z, n = gcd of the residuals after killing the
    // w-coordinate with the pivot.
    Int n = 0;
    for (const QuadInt& g : generators) {
        Int s = g.v() / m;  // exact: m = gcd of all v
        Int residual = exact::sub(g.u(), exact::mul(s, a));
        n = exact::gcd(n, residual);
    }
    if (n == 0) throw DegenerateRank("module_hnf: span has rank 1");
    a = exact::mod_floor(a, n);
    return ModuleTriple{n, a, m};
}

bool is_ideal(Order order, const ModuleTriple& t) {
    if (t.n < 1 || t.m < 1) return false;
    if (t.n % t.m != 0 || t.a % t.m != 0) return false;
    Int b = t.a / t.m;
    Int nb = exact::mul(b, exact::add(b, order.d()));  // N(b + w)
    return exact::mul(t.m, nb) % t.n == 0;
}

IdealHNF::IdealHNF(Order order, Int n, Int a, Int m) : order_(order), n_(n), a_(0), m_(m) {
    if (n < 1 || m < 1) throw NotAnIdeal("[" + std::to_string(n) + ";" + std::to_string(a) + "+" +
                                         std::to_string(m) + "w]: n, m must be >= 1");
    a_ = exact::mod_floor(a, n);
    if (!is_ideal(order, ModuleTriple{n_, a_, m_}))
        throw NotAnIdeal(literal() + " fails the ideal criterion for d=" +
                         std::to_string(order.d()));
}

bool IdealHNF::contains(const QuadInt& z) const {
    if (z.order() != order_) throw OrderMismatch("ideal containment across orders");
    Int v = z.v();
    if (v % m_ != 0) return false;
    Int s = v / m_;
    return exact::sub(z.u(), exact::mul(s, a_)) % n_ == 0;
}

bool IdealHNF::contains(const IdealHNF& other) const {
    return contains(other.first_generator()) && contains(other.second_generator());
}

IdealHNF IdealHNF::conjugate() const {
    // [n; a + mw]^sigma = [n; (a + md) - mw], recanonicalized.
    const QuadInt gens[] = {
        first_generator(),
        QuadInt::from_coords(order_, exact::add(a_, exact::mul(m_, order_.d())), exact::neg(m_)),
    };
    ModuleTriple t = module_hnf(order_, gens);
    return IdealHNF(order_, t.n, t.a, t.m);
}

std::string IdealHNF::literal() const {
    std::ostringstream os;
    os << "[" << n_ << ";" << a_ << "+";
    if (m_ != 1) os << m_;
    os << "w]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IdealHNF& a) {
    return os << a.literal();
}

IdealHNF unit_ideal(Order order) {
    return IdealHNF(order, 1, 0, 1);
}

IdealHNF principal(const QuadInt& z) {
    if (z.norm() == 0)
        throw ZeroDivisorIdeal("principal ideal of " + z.to_string() + " with N = 0");
    const QuadInt gens[] = {z, z * QuadInt::w(z.order())};
    ModuleTriple t = module_hnf(z.order(), gens);
    return IdealHNF(z.order(), t.n, t.a, t.m);
}

IdealHNF principal_rational(Order order, Int k) {
    return principal(QuadInt::integer(order, k));
}

IdealHNF multiply(const IdealHNF& a, const IdealHNF& b) {
    if (a.order() != b.order()) throw OrderMismatch("ideal product across orders");
    const QuadInt ga1 = a.first_generator(), ga2 = a.second_generator();
    const QuadInt gb1 = b.first_generator(), gb2 = b.second_generator();
    const QuadInt gens[] = {ga1 * gb1, ga1 * gb2, ga2 * gb1, ga2 * gb2};
    ModuleTriple t = module_hnf(a.order(), gens);
    return IdealHNF(a.order(), t.n, t.a, t.m);
}

IdealHNF power(const IdealHNF& a, int e) {
    IdealHNF r = unit_ideal(a.order());
    for (int i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

IdealHNF sum_gcd(const IdealHNF& a, const IdealHNF& b) {
    if (a.order() != b.order()) throw OrderMismatch("ideal sum across orders");
    const QuadInt gens[] = {a.first_generator(), a.second_generator(), b.first_generator(),
                            b.second_generator()};
    ModuleTriple t = module_hnf(a.order(), gens);
    return IdealHNF(a.order(), t.n, t.a, t.m);
}

std::vector<IdealHNF> primes_above(Order order, Int p) {
    if (!exact::is_prime(p)) throw PreconditionViolated("primes_above: p must be prime");
    std::vector<IdealHNF> out;
    for (Int a = 0; a < p; ++a) {
        if (exact::mul(a, exact::add(a, order.d())) % p == 0)
            out.emplace_back(order, p, a, 1);
    }
    return out;
}

IdealHNF recombine(const IdealFactorization& f) {
    IdealHNF r = unit_ideal(f.order);
    for (const RamifiedPart& part : f.ramified) {
        r = multiply(r, power(principal_rational(f.order, part.p), static_cast<int>(part.rational_exp)));
        if (part.extra_prime) r = multiply(r, IdealHNF(f.order, part.p, 0, 1));
    }
    for (const SplitPart& part : f.split) {
        r = multiply(r, power(part.prime, static_cast<int>(part.exp)));
        r = multiply(r, power(part.conj_prime, static_cast<int>(part.conj_exp)));
    }
    return r;
}

namespace {
Int containment_exponent(const IdealHNF& a, const IdealHNF& p, Int max_exp) {
    Int e = 0;
    IdealHNF pk = p;
    while (e < max_exp && pk.contains(a)) {
        ++e;
        pk = multiply(pk, p);
    }
    return e;
}
}  // namespace

IdealFactorization factor(const IdealHNF& a) {
    IdealFactorization f{a.order(), {}, {}};
    Int d = a.order().d();
    for (auto [p, v] : exact::factorize(a.norm())) {
        if (d % p == 0) {
            // Only (p)^e and (p)^e*[p;w] are expressible; the recombination
            // check below rejects anything else.
            f.ramified.push_back(RamifiedPart{p, v / 2, v % 2 == 1});
        } else {
            auto primes = primes_above(a.order(), p);
            Int e0 = containment_exponent(a, primes[0], v);
            Int e1 = containment_exponent(a, primes[1], v);
            f.split.push_back(SplitPart{primes[0], e0, primes[1], e1});
        }
    }
    if (recombine(f) != a)
        throw FactorizationAmbiguous("ideal " + a.literal() +
                                     " is not a product of the supported prime shapes");
    return f;
}

std::vector<IdealHNF> enumerate_ideals(Order order, Int max_norm) {
    std::vector<IdealHNF> out;
    Int d = order.d();
    for (Int m = 1; exact::mul(m, m) <= max_norm; ++m) {
        for (Int q = 1; exact::mul(exact::mul(m, m), q) <= max_norm; ++q) {
            Int n = exact::mul(m, q);
            for (Int b = 0; b < q; ++b) {
                if (exact::mul(b, exact::add(b, d)) % q == 0)
                    out.emplace_back(order, n, exact::mul(m, b), m);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const IdealHNF& x, const IdealHNF& y) {
        return std::tuple(x.norm(), x.n(), x.m(), x.a()) <
               std::tuple(y.norm(), y.n(), y.m(), y.a());
    });
    return out;
}

}  // namespace homveech
