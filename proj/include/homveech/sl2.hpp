#pragma once

#include <concepts>
#include <cstdint>
#include <queue>
#include <set>
#include <span>
#include <unordered_set>
#include <vector>

#include "homveech/quotient.hpp"

namespace homveech {

template <class R>
concept RingLike = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b) {
    { r.add(a, b) } -> std::same_as<typename R::Elem>;
    { r.sub(a, b) } -> std::same_as<typename R::Elem>;
    { r.mul(a, b) } -> std::same_as<typename R::Elem>;
    { r.neg(a) } -> std::same_as<typename R::Elem>;
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.eq(a, b) } -> std::convertible_to<bool>;
};

template <class R>
concept FiniteRingLike = RingLike<R> && requires(const R& r, const typename R::Elem& a, Int i) {
    { r.cardinality() } -> std::convertible_to<Int>;
    { r.encode(a) } -> std::convertible_to<Int>;
    { r.decode(i) } -> std::same_as<typename R::Elem>;
};

// O_{d^2} as a ring context for matrices.
struct OrderRing {
    Order ord;
    using Elem = QuadInt;

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem zero() const { return QuadInt::zero(ord); }
    Elem one() const { return QuadInt::one(ord); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

// Plain checked integers (SL2(Z) components, twist matrices).
struct ZRing {
    using Elem = Int;

    Elem add(Elem a, Elem b) const { return exact::add(a, b); }
    Elem sub(Elem a, Elem b) const { return exact::sub(a, b); }
    Elem mul(Elem a, Elem b) const { return exact::mul(a, b); }
    Elem neg(Elem a) const { return exact::neg(a); }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool eq(Elem a, Elem b) const { return a == b; }
};

// Z/kZ with canonical residues, k >= 1 (composite allowed).
struct ZModRing {
    Int k;
    using Elem = Int;

    Elem add(Elem a, Elem b) const { return exact::mod_floor(exact::add(a, b), k); }
    Elem sub(Elem a, Elem b) const { return exact::mod_floor(exact::sub(a, b), k); }
    Elem mul(Elem a, Elem b) const { return exact::mod_floor(exact::mul(a, b), k); }
    Elem neg(Elem a) const { return exact::mod_floor(exact::neg(a), k); }
    Elem zero() const { return 0; }
    Elem one() const { return k == 1 ? 0 : 1; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Int cardinality() const { return k; }
    Int encode(Elem a) const { return a; }
    Elem decode(Int i) const { return i; }
};

// Prime field F_p.
struct FpRing : ZModRing {
    explicit FpRing(Int p) : ZModRing{p} {
        if (!exact::is_prime(p)) throw PreconditionViolated("FpRing: p must be prime");
    }
    Int p() const { return k; }
    Elem inv(Elem a) const;  // Fermat
};

template <RingLike R>
struct Mat2 {
    using Elem = typename R::Elem;
    Elem a, b, c, d;  // reading order
};

using Mat2O = Mat2<OrderRing>;
using Mat2Z = Mat2<ZRing>;
using Mat2Q = Mat2<QuotRing>;
using MatFp = Mat2<FpRing>;

template <RingLike R>
Mat2<R> identity(const R& r) {
    return {r.one(), r.zero(), r.zero(), r.one()};
}

template <RingLike R>
Mat2<R> mul(const R& r, const Mat2<R>& A, const Mat2<R>& B) {
    return {r.add(r.mul(A.a, B.a), r.mul(A.b, B.c)), r.add(r.mul(A.a, B.b), r.mul(A.b, B.d)),
            r.add(r.mul(A.c, B.a), r.mul(A.d, B.c)), r.add(r.mul(A.c, B.b), r.mul(A.d, B.d))};
}

template <RingLike R>
typename R::Elem det(const R& r, const Mat2<R>& A) {
    return r.sub(r.mul(A.a, A.d), r.mul(A.b, A.c));
}

template <RingLike R>
bool mat_eq(const R& r, const Mat2<R>& A, const Mat2<R>& B) {
    return r.eq(A.a, B.a) && r.eq(A.b, B.b) && r.eq(A.c, B.c) && r.eq(A.d, B.d);
}

// Adjugate inverse; valid only for determinant 1 (no division anywhere).
template <RingLike R>
Mat2<R> inverse(const R& r, const Mat2<R>& A) {
    if (!r.eq(det(r, A), r.one())) throw NotUnimodular("inverse: determinant is not 1");
    return {A.d, r.neg(A.b), r.neg(A.c), A.a};
}

template <RingLike R>
Mat2<R> pow(const R& r, Mat2<R> A, Int e) {
    if (e < 0) {
        A = inverse(r, A);
        e = exact::neg(e);
    }
    Mat2<R> acc = identity(r);
    while (e > 0) {
        if (e & 1) acc = mul(r, acc, A);
        e >>= 1;
        if (e > 0) A = mul(r, A, A);
    }
    return acc;
}

Mat2Q reduce_mat(const Mat2O& A, const QuotRing& ring);

enum class GammaFamily { Principal, Gamma0, Gamma1 };

bool in_gamma_family(const Mat2O& A, const IdealHNF& a, GammaFamily family);

// Distinct right Gamma_0(a)-cosets: the lower-left entry of W_i * W_j^{-1}
// lies outside a for every i != j.
bool pairwise_incongruent(std::span<const Mat2O> words, const IdealHNF& a);

// The four elementary generators E_12(1), E_12(w), E_21(1), E_21(w)
// reduced into the quotient.
std::vector<Mat2Q> elementary_generators(const QuotRing& ring);

// Finite ring with precomputed operation tables, elements as indices.
// Turns quotient-ring arithmetic in closure searches into table lookups.
template <FiniteRingLike R>
struct TabledRing {
    using Elem = Int;
    Int card;
    std::vector<std::int32_t> add_t, mul_t, neg_t;
    Int zero_i, one_i;

    explicit TabledRing(const R& ring) : card(ring.cardinality()) {
        add_t.resize(static_cast<std::size_t>(card * card));
        mul_t.resize(static_cast<std::size_t>(card * card));
        neg_t.resize(static_cast<std::size_t>(card));
        for (Int i = 0; i < card; ++i) {
            auto a = ring.decode(i);
            neg_t[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(ring.encode(ring.neg(a)));
            for (Int j = 0; j < card; ++j) {
                auto b = ring.decode(j);
                add_t[static_cast<std::size_t>(i * card + j)] =
                    static_cast<std::int32_t>(ring.encode(ring.add(a, b)));
                mul_t[static_cast<std::size_t>(i * card + j)] =
                    static_cast<std::int32_t>(ring.encode(ring.mul(a, b)));
            }
        }
        zero_i = ring.encode(ring.zero());
        one_i = ring.encode(ring.one());
    }

    Elem add(Elem a, Elem b) const { return add_t[static_cast<std::size_t>(a * card + b)]; }
    Elem mul(Elem a, Elem b) const { return mul_t[static_cast<std::size_t>(a * card + b)]; }
    Elem neg(Elem a) const { return neg_t[static_cast<std::size_t>(a)]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem zero() const { return zero_i; }
    Elem one() const { return one_i; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Int cardinality() const { return card; }
    Int encode(Elem a) const { return a; }
    Elem decode(Int i) const { return i; }
};

// Breadth-first closure under left multiplication by the generators and
// their inverses.  The result is a set cardinality, independent of
// traversal order.  Throws BoundExceeded past `bound` elements.
template <FiniteRingLike R>
Int closure_order_impl(const R& ring, std::span<const Mat2<R>> generators, Int bound) {
    const Int card = ring.cardinality();
    std::vector<Mat2<R>> gens;
    for (const auto& g : generators) {
        if (!ring.eq(det(ring, g), ring.one()))
            throw NotUnimodular("closure: generator with determinant != 1");
        gens.push_back(g);
        gens.push_back(inverse(ring, g));
    }

    auto key = [&](const Mat2<R>& M) -> std::uint64_t {
        const auto uc = static_cast<std::uint64_t>(card);
        return ((static_cast<std::uint64_t>(ring.encode(M.a)) * uc +
                 static_cast<std::uint64_t>(ring.encode(M.b))) *
                    uc +
                static_cast<std::uint64_t>(ring.encode(M.c))) *
                   uc +
               static_cast<std::uint64_t>(ring.encode(M.d));
    };

    const bool dense = card <= 100;  // card^4 bits <= 12.5 MB
    std::vector<bool> seen_dense;
    std::unordered_set<std::uint64_t> seen_sparse;
    if (dense) seen_dense.assign(static_cast<std::size_t>(card * card * card * card), false);
    if (!dense && card > 65535)
        throw BoundExceeded("closure: ring cardinality too large for exact keys");

    auto visit = [&](const Mat2<R>& M) -> bool {
        std::uint64_t k = key(M);
        if (dense) {
            if (seen_dense[k]) return false;
            seen_dense[k] = true;
            return true;
        }
        return seen_sparse.insert(k).second;
    };

    Int count = 0;
    std::queue<Mat2<R>> frontier;
    Mat2<R> id = identity(ring);
    visit(id);
    ++count;
    frontier.push(id);
    while (!frontier.empty()) {
        Mat2<R> M = frontier.front();
        frontier.pop();
        for (const auto& g : gens) {
            Mat2<R> P = mul(ring, g, M);
            if (visit(P)) {
                if (++count > bound)
                    throw BoundExceeded("closure exceeds bound " + std::to_string(bound));
                frontier.push(P);
            }
        }
    }
    return count;
}

template <FiniteRingLike R>
Int closure_order(const R& ring, std::span<const Mat2<R>> generators, Int bound) {
    if (ring.cardinality() <= 1024) {
        TabledRing<R> tabled(ring);
        std::vector<Mat2<TabledRing<R>>> tgens;
        tgens.reserve(generators.size());
        for (const auto& g : generators)
            tgens.push_back({ring.encode(g.a), ring.encode(g.b), ring.encode(g.c),
                             ring.encode(g.d)});
        return closure_order_impl(tabled, std::span<const Mat2<TabledRing<R>>>(tgens), bound);
    }
    return closure_order_impl(ring, generators, bound);
}

struct OrbitResult {
    Int size;
    std::vector<ProjPoint> points;  // canonical forms, sorted
};

// Orbit of the base point (1 : 0) under the generated group acting by
// M * (x : y) = (a x + b y : c x + d y).  The orbit size is the measured
// Gamma_0-level index of the generated subgroup.
OrbitResult orbit_of_base(const QuotRing& ring, std::span<const Mat2Q> generators);

// Orbit of (1 : 0) in P^1(Z/kZ) under integer matrices taken mod k.
Int p1_orbit_zmod(Int k, std::span<const Mat2Z> generators);
Int p1_zmod_count(Int k);  // full scan, the brute-force companion of sl2z_gamma0_index

// --- Nori one-parameter subgroups over F_p -------------------------------

bool is_unipotent(const FpRing& f, const MatFp& x);

// log x = -sum_{i=1}^{p-1} (1-x)^i / i  (the series; it truncates after the
// first term for 2x2 unipotents since (1-x)^2 = 0).
MatFp nori_log(const FpRing& f, const MatFp& x);  // NotUnipotent

// exp z = sum_{i=0}^{p-1} z^i / i!
MatFp nori_exp(const FpRing& f, const MatFp& z);

// x(t) = exp(t * log x); satisfies x(t) x(s) = x(t+s) and x(1) = x.
MatFp nori_one_param(const FpRing& f, const MatFp& x, Int t);

// Closure order of unipotent generators, asserted to be 1, p or p^3 - p.
Int nori_order_check(Int p, std::span<const MatFp> unipotent_generators);

}  // namespace homveech
