#include "homveech/sl2.hpp"

#include <algorithm>

namespace homveech {

FpRing::Elem FpRing::inv(Elem a) const {
    if (a % k == 0) throw Error("FpRing: inverse of zero");
    Int r = 1, base = exact::mod_floor(a, k), e = k - 2;
    while (e > 0) {
        if (e & 1) r = exact::mod_floor(exact::mul(r, base), k);
        e >>= 1;
        base = exact::mod_floor(exact::mul(base, base), k);
    }
    return r;
}

Mat2Q reduce_mat(const Mat2O& A, const QuotRing& ring) {
    return {ring.reduce(A.a), ring.reduce(A.b), ring.reduce(A.c), ring.reduce(A.d)};
}

bool in_gamma_family(const Mat2O& A, const IdealHNF& a, GammaFamily family) {
    OrderRing r{a.order()};
    if (!r.eq(det(r, A), r.one())) throw NotUnimodular("in_gamma_family: determinant != 1");
    QuadInt one = QuadInt::one(a.order());
    switch (family) {
        case GammaFamily::Gamma0:
            return a.contains(A.c);
        case GammaFamily::Gamma1:
            return a.contains(A.c) && a.contains(A.a - one) && a.contains(A.d - one);
        case GammaFamily::Principal:
            return a.contains(A.c) && a.contains(A.b) && a.contains(A.a - one) &&
                   a.contains(A.d - one);
    }
    return false;
}

bool pairwise_incongruent(std::span<const Mat2O> words, const IdealHNF& a) {
    OrderRing r{a.order()};
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            Mat2O q = mul(r, words[i], inverse(r, words[j]));
            if (a.contains(q.c)) return false;
        }
    }
    return true;
}

std::vector<Mat2Q> elementary_generators(const QuotRing& ring) {
    Order ord = ring.modulus().order();
    QuadInt one = QuadInt::one(ord), w = QuadInt::w(ord), zero = QuadInt::zero(ord);
    std::vector<Mat2O> lifted = {
        {one, one, zero, one},   // E_12(1)
        {one, w, zero, one},     // E_12(w)
        {one, zero, one, one},   // E_21(1)
        {one, zero, w, one},     // E_21(w)
    };
    std::vector<Mat2Q> out;
    out.reserve(lifted.size());
    for (const Mat2O& g : lifted) out.push_back(reduce_mat(g, ring));
    return out;
}

OrbitResult orbit_of_base(const QuotRing& ring, std::span<const Mat2Q> generators) {
    std::vector<Mat2Q> gens;
    for (const Mat2Q& g : generators) {
        if (!ring.eq(det(ring, g), ring.one()))
            throw NotUnimodular("orbit: generator with determinant != 1");
        gens.push_back(g);
        gens.push_back(inverse(ring, g));
    }

    auto base = ring.proj_canonical(ring.one(), ring.zero());
    if (!base) throw Error("orbit: base point (1, 0) not unimodular");

    std::set<ProjPoint> seen;
    std::queue<ProjPoint> frontier;
    seen.insert(*base);
    frontier.push(*base);
    while (!frontier.empty()) {
        ProjPoint pt = frontier.front();
        frontier.pop();
        for (const Mat2Q& g : gens) {
            QuotElem nx = ring.add(ring.mul(g.a, pt.x), ring.mul(g.b, pt.y));
            QuotElem ny = ring.add(ring.mul(g.c, pt.x), ring.mul(g.d, pt.y));
            auto canon = ring.proj_canonical(nx, ny);
            if (!canon) throw Error("orbit: image of a projective point not unimodular");
            if (seen.insert(*canon).second) frontier.push(*canon);
        }
    }
    OrbitResult res;
    res.size = static_cast<Int>(seen.size());
    res.points.assign(seen.begin(), seen.end());
    return res;
}

namespace {

struct ZModP1 {
    Int k;
    std::vector<Int> units;

    explicit ZModP1(Int kk) : k(kk) {
        for (Int t = 0; t < k; ++t)
            if (exact::gcd(t, k) == 1 || k == 1) units.push_back(t);
    }

    bool unimodular(Int x, Int y) const { return exact::gcd(exact::gcd(x, y), k) == 1 || k == 1; }

    std::pair<Int, Int> canonical(Int x, Int y) const {
        std::pair<Int, Int> best{-1, -1};
        for (Int t : units) {
            std::pair<Int, Int> cand{exact::mod_floor(t * x, k), exact::mod_floor(t * y, k)};
            if (best.first < 0 || cand < best) best = cand;
        }
        return best;
    }
};

}  // namespace

Int p1_orbit_zmod(Int k, std::span<const Mat2Z> generators) {
    if (k < 1) throw PreconditionViolated("p1_orbit_zmod: k >= 1 required");
    ZModRing r{k};
    ZModP1 line(k);
    std::vector<Mat2Z> gens;
    ZRing zr;
    for (const Mat2Z& g : generators) {
        if (det(zr, g) != 1) throw NotUnimodular("p1_orbit_zmod: determinant != 1");
        gens.push_back(g);
        gens.push_back(inverse(zr, g));
    }
    std::set<std::pair<Int, Int>> seen;
    std::queue<std::pair<Int, Int>> frontier;
    auto base = line.canonical(r.one(), 0);
    seen.insert(base);
    frontier.push(base);
    while (!frontier.empty()) {
        auto [x, y] = frontier.front();
        frontier.pop();
        for (const Mat2Z& g : gens) {
            Int nx = r.add(r.mul(exact::mod_floor(g.a, k), x), r.mul(exact::mod_floor(g.b, k), y));
            Int ny = r.add(r.mul(exact::mod_floor(g.c, k), x), r.mul(exact::mod_floor(g.d, k), y));
            auto canon = line.canonical(nx, ny);
            if (seen.insert(canon).second) frontier.push(canon);
        }
    }
    return static_cast<Int>(seen.size());
}

Int p1_zmod_count(Int k) {
    if (k < 1) throw PreconditionViolated("p1_zmod_count: k >= 1 required");
    ZModP1 line(k);
    std::set<std::pair<Int, Int>> reps;
    for (Int x = 0; x < k; ++x)
        for (Int y = 0; y < k; ++y)
            if (line.unimodular(x, y)) reps.insert(line.canonical(x, y));
    if (k == 1) return 1;
    return static_cast<Int>(reps.size());
}

bool is_unipotent(const FpRing& f, const MatFp& x) {
    MatFp n = {f.sub(x.a, f.one()), x.b, x.c, f.sub(x.d, f.one())};
    MatFp n2 = mul(f, n, n);
    return f.eq(n2.a, 0) && f.eq(n2.b, 0) && f.eq(n2.c, 0) && f.eq(n2.d, 0);
}

namespace {
MatFp scale(const FpRing& f, const MatFp& m, Int c) {
    return {f.mul(c, m.a), f.mul(c, m.b), f.mul(c, m.c), f.mul(c, m.d)};
}
MatFp mat_add(const FpRing& f, const MatFp& a, const MatFp& b) {
    return {f.add(a.a, b.a), f.add(a.b, b.b), f.add(a.c, b.c), f.add(a.d, b.d)};
}
}  // namespace

MatFp nori_log(const FpRing& f, const MatFp& x) {
    if (f.p() <= 2) throw PreconditionViolated("nori_log: requires p > 2");
    if (!is_unipotent(f, x)) throw NotUnipotent("nori_log: x is not unipotent");
    MatFp one_minus_x = {f.sub(f.one(), x.a), f.neg(x.b), f.neg(x.c), f.sub(f.one(), x.d)};
    MatFp acc = {0, 0, 0, 0};
    MatFp power = identity(f);
    for (Int i = 1; i <= f.p() - 1; ++i) {
        power = mul(f, power, one_minus_x);
        acc = mat_add(f, acc, scale(f, power, f.neg(f.inv(i))));
    }
    return acc;
}

MatFp nori_exp(const FpRing& f, const MatFp& z) {
    MatFp acc = {0, 0, 0, 0};
    MatFp power = identity(f);
    Int inv_fact = 1;
    for (Int i = 0; i <= f.p() - 1; ++i) {
        if (i > 0) {
            power = mul(f, power, z);
            inv_fact = f.mul(inv_fact, f.inv(i));
        }
        acc = mat_add(f, acc, scale(f, power, inv_fact));
    }
    return acc;
}

MatFp nori_one_param(const FpRing& f, const MatFp& x, Int t) {
    return nori_exp(f, scale(f, nori_log(f, x), exact::mod_floor(t, f.p())));
}

Int nori_order_check(Int p, std::span<const MatFp> unipotent_generators) {
    FpRing f(p);
    for (const MatFp& g : unipotent_generators)
        if (!is_unipotent(f, g)) throw NotUnipotent("nori_order_check: non-unipotent generator");
    Int order = closure_order(f, unipotent_generators,
                              exact::add(exact::mul(exact::mul(p, p), p), 1));
    Int p3_minus_p = exact::sub(exact::mul(exact::mul(p, p), p), p);
    if (order != 1 && order != p && order != p3_minus_p)
        throw CorollaryViolated("unipotent closure of order " + std::to_string(order) +
                                " over F_" + std::to_string(p) +
                                " is outside {1, p, p^3 - p}");
    return order;
}

}  // namespace homveech
