// End-to-end acceptance suite.  Each criterion prints a single PASS/FAIL
// line; the binary exits nonzero when any criterion fails.  All checks are
// exact integer identities, so there are no tolerances anywhere.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "homveech/cli.hpp"
#include "homveech/noncongruence.hpp"

using namespace homveech;

namespace {

int failures = 0;
std::ostringstream detail;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        detail << "    FAILED: " << what << "\n";
    }
}

void criterion(int number, const std::string& title, const std::function<void()>& body) {
    int before = failures;
    detail.str("");
    try {
        body();
    } catch (const std::exception& e) {
        ++failures;
        detail << "    exception: " << e.what() << "\n";
    }
    bool ok = failures == before;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << "\n";
    if (!ok) std::cout << detail.str();
    std::cout.flush();
}

std::string at(const Origami& o, const IdealHNF& a) {
    std::ostringstream os;
    os << "L(" << o.m() << "," << o.n() << ") @ " << a.literal();
    return os.str();
}

// ---------------------------------------------------------------------------

void criterion1_end_to_end() {
    const std::vector<std::pair<Int, Int>> shapes = {{2, 2}, {3, 2}, {4, 2}, {3, 3},
                                                     {6, 2}, {5, 3}, {7, 2}};
    for (auto [m, n] : shapes) {
        Origami o(m, n);
        VerifyRangeResult res = verify_range(o, 60, kDefaultEnumerationBound, 4, 0);
        for (const IndexReport& r : res.reports)
            check(r.status == VerifyStatus::Match,
                  at(o, r.ideal) + ": predicted " + std::to_string(r.predicted.index) +
                      ", measured " +
                      (r.measured ? std::to_string(*r.measured) : std::string("-")));
    }

    // spot values
    auto spot = [&](Int m, Int n, const IdealHNF& a, Int expected) {
        Origami o(m, n);
        Int got = measured_index(o, a);
        check(got == expected, at(o, a) + " = " + std::to_string(got) + ", expected " +
                                   std::to_string(expected));
        check(predicted_index(o, a).index == expected,
              at(o, a) + " prediction != " + std::to_string(expected));
    };
    spot(2, 2, identify_p2(Order(3)), 2);
    spot(4, 2, identify_p2(Order(5)), 2);
    spot(4, 2, identify_p2(Order(5)).conjugate(), 3);
    spot(3, 3, identify_p2(Order(5)).conjugate(), 2);
    spot(3, 3, identify_p2(Order(5)), 3);
    spot(3, 2, principal_rational(Order(4), 2), 4);
}

void criterion2_index_formulas_vs_brute_force() {
    for (Int d : {3, 4, 5, 8, 9}) {
        Order ord(d);
        for (const IdealHNF& a : enumerate_ideals(ord, 50)) {
            QuotRing ring(a);
            CongruenceIndices ci = congruence_indices(a);

            Int units_brute = 0;
            QuotElem id = ring.one();
            for (Int i = 0; i < ring.cardinality(); ++i) {
                QuotElem e = ring.decode(i);
                for (Int j = 0; j < ring.cardinality(); ++j) {
                    if (ring.mul(e, ring.decode(j)) == id) {
                        ++units_brute;
                        break;
                    }
                }
            }
            check(units_brute == ci.phi(),
                  "unit count for " + a.literal() + " (d=" + std::to_string(d) + ")");

            check(ring.proj_line_count() == ci.gamma0_index,
                  "#P1 for " + a.literal() + " (d=" + std::to_string(d) + ")");

            auto gens = elementary_generators(ring);
            Int closure = closure_order(ring, std::span<const Mat2Q>(gens), 2'000'000);
            check(closure == ci.sl2_quotient_order,
                  "SL2 closure for " + a.literal() + " (d=" + std::to_string(d) + ")");
        }
    }

    // concrete anchor: d=5, (3) -> 4 / 16 / 576
    Order o5(5);
    CongruenceIndices anchor = congruence_indices(principal_rational(o5, 3));
    check(anchor.phi() == 4 && anchor.gamma0_index == 16 && anchor.sl2_quotient_order == 576,
          "anchor values for d=5, (3)");
}

void criterion3_ramification() {
    for (Int d : {3, 4, 5, 6, 8, 9, 15}) {
        Order ord(d);
        for (Int p : exact::primes_up_to(50)) {
            auto above = primes_above(ord, p);
            IdealHNF pp = principal_rational(ord, p);
            if (d % p == 0) {
                check(above.size() == 1, "split count at p=" + std::to_string(p) +
                                             ", d=" + std::to_string(d));
                const IdealHNF& q = above[0];
                IdealHNF q2 = multiply(q, q);
                check(q2 == multiply(pp, q) && q2 != pp,
                      "[p;w]^2 = (p)[p;w] != (p) at p=" + std::to_string(p) +
                          ", d=" + std::to_string(d));
                check(q.contains(pp) && q != pp && pp.contains(q2) && pp != q2 &&
                          q2.contains(principal_rational(ord, exact::mul(p, p))),
                      "containment chain at p=" + std::to_string(p) + ", d=" + std::to_string(d));
            } else {
                check(above.size() == 2 && above[0] != above[1] &&
                          above[0].conjugate() == above[1] &&
                          multiply(above[0], above[1]) == pp,
                      "split primes at p=" + std::to_string(p) + ", d=" + std::to_string(d));
                for (const IdealHNF& q : above)
                    check(q.norm() == p, "norm of prime above " + std::to_string(p));
            }
        }
    }
}

void criterion4_generator_catalog() {
    Mat4 j = intersection_form();
    for (Int m = 2; m <= 12; ++m) {
        for (Int n = 2; n <= 12; ++n) {
            Origami o(m, n);
            Order ord = o.order();
            OrderRing r{ord};
            ZRing zr;

            GeneratorCatalog cat = generator_catalog(o);
            for (const CatalogEntry& e : cat.entries) {
                check(r.eq(det(r, e.matrix), r.one()),
                      "det of " + e.label + " for L" + std::to_string(m) + "," +
                          std::to_string(n));
                check(det(zr, e.first_component) == 1,
                      "first-component det of " + e.label);
            }

            check(o.eta_plus() * o.eta_minus() ==
                      QuadInt::integer(ord, exact::mul(m, n)) - QuadInt::w(ord),
                  "eta+ * eta- = mn - w for L(" + std::to_string(m) + "," + std::to_string(n) +
                      ")");

            Mat4 act = diag11_homology_action(o);
            check(mat4_mul(mat4_mul(mat4_transpose(act), j), act) == j,
                  "diagonal action symplectic for L(" + std::to_string(m) + "," +
                      std::to_string(n) + ")");

            // assembled pair equals the printed E up to the global exponent -1
            QuadInt dw = QuadInt::integer(ord, o.d()) - QuadInt::w(ord);
            Mat2O e{QuadInt::one(ord) - dw, dw, -dw, QuadInt::one(ord) + dw};
            check(mat_eq(r, assemble_pair(act, o), inverse(r, e)),
                  "assembled diagonal twist for L(" + std::to_string(m) + "," +
                      std::to_string(n) + ")");
        }
    }
}

void criterion5_proof_word_fixtures() {
    // ramified-prime family: W^l Z^{h p^k j} incongruent mod (h p^{k+1});
    // needs p | d with gcd(m, p) = gcd(h, p) = 1 and k >= 1 (at k = 0 the
    // device collapses whenever eta* y + 1 falls into a prime above p)
    const std::vector<std::pair<Int, std::pair<Int, Int>>> ramified_fixtures = {
        {3, {2, 2}}, {5, {4, 2}}, {7, {6, 2}}};
    for (auto [p, shape] : ramified_fixtures) {
        Origami o(shape.first, shape.second);
        Order ord = o.order();
        OrderRing r{ord};
        Mat2O t{QuadInt::one(ord), o.eta_plus(), QuadInt::zero(ord), QuadInt::one(ord)};
        Mat2O z{QuadInt::one(ord), QuadInt::zero(ord), o.eta_minus(), QuadInt::one(ord)};
        for (Int h : {Int(1), Int(3)}) {
            if (h % p == 0) continue;
            for (Int k = 1; k <= 2; ++k) {
                Int hpk = h * exact::pow(p, k);
                Mat2O w = mul(r, mul(r, z, pow(r, t, hpk)), inverse(r, z));
                std::vector<Mat2O> words;
                for (Int l = 1; l <= p; ++l)
                    for (Int jj = 1; jj <= p; ++jj)
                        words.push_back(mul(r, pow(r, w, l), pow(r, z, hpk * jj)));
                IdealHNF small = principal_rational(ord, hpk);
                IdealHNF large = principal_rational(ord, hpk * p);
                bool members = true;
                for (const Mat2O& word : words)
                    members = members && in_gamma_family(word, small, GammaFamily::Gamma0);
                check(members, "ramified words in Gamma_0 at p=" + std::to_string(p) +
                                   ", h=" + std::to_string(h) + ", k=" + std::to_string(k));
                check(pairwise_incongruent(words, large),
                      "ramified family at p=" + std::to_string(p) + ", h=" +
                          std::to_string(h) + ", k=" + std::to_string(k));
            }
        }
    }

    // split-prime family Z^{Hi} plus Z^{Hk} T mod h*p, needs a split prime
    // not above eta* = mn - w; L(4,2) covers p in {3, 7}, L(3,3) covers 7,
    // and p = 5 ramifies for d = 5 so L(6,2) (d = 7) covers it.
    struct SplitFixture {
        Int p;
        Int m, n;
        Int prime_index;  // which prime above p avoids eta*
    };
    const std::vector<SplitFixture> split_fixtures = {{3, 4, 2, 0}, {5, 6, 2, 0}, {7, 4, 2, 0}};
    for (const SplitFixture& fx : split_fixtures) {
        Origami o(fx.m, fx.n);
        Order ord = o.order();
        OrderRing r{ord};
        QuadInt eta_star = o.eta_plus() * o.eta_minus();
        auto primes = primes_above(ord, fx.p);
        const IdealHNF& prime = primes[static_cast<std::size_t>(fx.prime_index)];
        check(!prime.contains(eta_star),
              "chosen prime divides eta* at p=" + std::to_string(fx.p));
        Mat2O t{QuadInt::one(ord), o.eta_plus(), QuadInt::zero(ord), QuadInt::one(ord)};
        Mat2O z{QuadInt::one(ord), QuadInt::zero(ord), o.eta_minus(), QuadInt::one(ord)};
        for (Int h : {Int(1), Int(3)}) {
            if (exact::gcd(h, fx.p) != 1) continue;
            IdealHNF hid = principal_rational(ord, h);
            Int bigh = hid.norm();
            Int chosen_k = 0;
            for (Int k = 1; k <= fx.p; ++k) {
                QuadInt val = QuadInt::integer(ord, k * bigh) * eta_star + QuadInt::one(ord);
                if (prime.contains(val)) chosen_k = k;
            }
            check(chosen_k != 0 && chosen_k != fx.p,
                  "no valid k at p=" + std::to_string(fx.p) + ", h=" + std::to_string(h));
            std::vector<Mat2O> words;
            for (Int i = 1; i <= fx.p; ++i) words.push_back(pow(r, z, bigh * i));
            words.push_back(mul(r, pow(r, z, bigh * chosen_k), t));
            IdealHNF modulus = multiply(hid, prime);
            bool members = true;
            for (const Mat2O& word : words)
                members = members && in_gamma_family(word, hid, GammaFamily::Gamma0);
            check(members, "split words in Gamma_0(h) at p=" + std::to_string(fx.p));
            check(pairwise_incongruent(words, modulus),
                  "split family at p=" + std::to_string(fx.p) + ", h=" + std::to_string(h));
        }
    }

    // conjugate-prime family W T^i plus the identity mod h p^sigma p.
    // For p = 3 no L(m,n) satisfies both "3 splits" and "3 coprime to
    // N(eta*)" (m, n = 2 mod 3 forces 3 | d), so the smallest cases are
    // p in {5, 7}; the closed forms below are still exercised at p = 3.
    const std::vector<SplitFixture> conj_fixtures = {{5, 7, 2, 0}, {7, 4, 2, 0}};
    for (const SplitFixture& fx : conj_fixtures) {
        Origami o(fx.m, fx.n);
        Order ord = o.order();
        OrderRing r{ord};
        QuadInt eta_star = o.eta_plus() * o.eta_minus();
        check(eta_star.norm() % fx.p != 0, "eta* not coprime to p=" + std::to_string(fx.p));
        auto primes = primes_above(ord, fx.p);
        const IdealHNF& prime = primes[0];
        IdealHNF sigma = prime.conjugate();
        for (Int h : {Int(1), Int(3)}) {
            if (exact::gcd(h, fx.p) != 1) continue;
            IdealHNF hid = principal_rational(ord, h);
            Int bigh = hid.norm();
            Int chosen_k = 0;
            for (Int k = 1; k <= fx.p - 1; ++k) {
                QuadInt val = QuadInt::integer(ord, k) * eta_star + QuadInt::one(ord);
                if (sigma.contains(val) && !prime.contains(val)) chosen_k = k;
            }
            check(chosen_k != 0, "no valid k for conjugate family at p=" + std::to_string(fx.p));
            Mat2O t{QuadInt::one(ord), o.eta_plus(), QuadInt::zero(ord), QuadInt::one(ord)};
            Mat2O z{QuadInt::one(ord), QuadInt::zero(ord), o.eta_minus(), QuadInt::one(ord)};
            Mat2O w = mul(r, mul(r, mul(r, mul(r, z, pow(r, t, chosen_k)), pow(r, z, bigh)),
                                 pow(r, t, -chosen_k)),
                          inverse(r, z));
            IdealHNF level = multiply(hid, sigma);
            IdealHNF modulus = multiply(level, prime);
            std::vector<Mat2O> words;
            for (Int i = 1; i <= fx.p; ++i) words.push_back(mul(r, w, pow(r, t, i)));
            words.push_back(identity(r));
            bool members = true;
            for (std::size_t i = 0; i + 1 < words.size(); ++i)
                members = members && in_gamma_family(words[i], level, GammaFamily::Gamma0);
            check(members, "conjugate words in Gamma_0(h p^sigma) at p=" + std::to_string(fx.p));
            check(pairwise_incongruent(words, modulus),
                  "conjugate family at p=" + std::to_string(fx.p) + ", h=" + std::to_string(h));
        }
    }

    // the six words T^H, Z^H, Z^H T^H, E^H, E^H Z^H, E^H Z^H T^H mod (2h)
    for (auto [m, n] : {std::pair<Int, Int>{4, 2}, {6, 2}}) {
        Origami o(m, n);
        Order ord = o.order();
        OrderRing r{ord};
        GeneratorCatalog cat = generator_catalog(o);
        Mat2O t = cat.by_label("T").matrix;
        Mat2O z = cat.by_label("Z").matrix;
        Mat2O e = cat.by_label("E").matrix;
        for (Int h : {Int(1), Int(3), Int(5), Int(7)}) {
            if (h % 2 == 0) continue;
            Int bigh = principal_rational(ord, h).norm();
            Mat2O th = pow(r, t, bigh), zh = pow(r, z, bigh), eh = pow(r, e, bigh);
            std::vector<Mat2O> words{th,
                                     zh,
                                     mul(r, zh, th),
                                     eh,
                                     mul(r, eh, zh),
                                     mul(r, eh, mul(r, zh, th))};
            check(pairwise_incongruent(words, principal_rational(ord, 2 * h)),
                  "six-word family for L(" + std::to_string(m) + "," + std::to_string(n) +
                      "), h=" + std::to_string(h));
        }
    }

    // closed-form lower-left identities at 50 random parameter points
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<Int> shape(2, 8), coeff(1, 9), small(-3, 7);
    std::uniform_int_distribution<Int> pchoice(0, 2);
    const Int ps[3] = {3, 5, 7};
    for (int trial = 0; trial < 50; ++trial) {
        Origami o(shape(rng), shape(rng));
        Order ord = o.order();
        OrderRing r{ord};
        QuadInt ep = o.eta_plus(), em = o.eta_minus(), one = QuadInt::one(ord);
        Mat2O t{one, ep, QuadInt::zero(ord), one};
        Mat2O z{one, QuadInt::zero(ord), em, one};
        Int p = ps[pchoice(rng)];
        Int bigh = coeff(rng), k = small(rng), i = small(rng), x = small(rng);
        (void)p;
        QuadInt hq = QuadInt::integer(ord, bigh), kq = QuadInt::integer(ord, k);

        Mat2O word = mul(r, mul(r, pow(r, z, bigh * k), t), pow(r, z, -bigh * i));
        QuadInt expect1 =
            hq * em * (-(hq * kq * em * ep + one) * QuadInt::integer(ord, i) + kq);
        check(word.c == expect1, "Z^{Hk} T Z^{-Hi} lower-left closed form");

        Mat2O w = mul(r, mul(r, mul(r, mul(r, z, pow(r, t, k)), pow(r, z, bigh)),
                             pow(r, t, -k)),
                      inverse(r, z));
        QuadInt unit_term = kq * em * ep + one;
        check(mul(r, w, pow(r, t, i)).c == hq * em * unit_term * unit_term,
              "W T^i lower-left closed form");
        // the conjugated entry is -x eta+ (W_{2,1})^2, so H enters squared
        Mat2O conj = mul(r, mul(r, w, pow(r, t, x)), inverse(r, w));
        QuadInt quartic = unit_term * unit_term * unit_term * unit_term;
        check(conj.c == -(hq * hq * em * em * ep * quartic * QuadInt::integer(ord, x)),
              "W T^x W^{-1} lower-left closed form");
    }
}

void criterion6_spin() {
    for (Int d = 3; d <= 15; ++d) {
        for (Int m = 2; m <= d - 1; ++m) {
            Int n = d + 1 - m;
            if (n < 2) continue;
            Origami o(m, n);
            Int count = o.integral_weierstrass_count();
            if (d == 3)
                check(count == 1, "d=3 count");
            else if (d % 2 == 0)
                check(count == 2, "even d count for L(" + std::to_string(m) + "," +
                                      std::to_string(n) + ")");
            else
                check(count == (m % 2 == 0 ? 1 : 3),
                      "odd d count for L(" + std::to_string(m) + "," + std::to_string(n) + ")");
            if (d % 2 == 1 && d > 3) {
                check(o.complementary_spin() != o.spin(),
                      "complementary spin flips for L(" + std::to_string(m) + "," +
                          std::to_string(n) + ")");
            }
        }
    }

    const auto& chars = odd_theta_chars();
    for (const ThetaChar& t : chars) {
        int expected = t.column(0) == std::array<int, 2>{1, 1} ? 1 : 3;
        check(translate_count(t) == expected, "translate count");
        int exhaustive = 0;
        for (const ThetaChar& c : chars)
            if (translate(c, t).column(1) == std::array<int, 2>{0, 0}) ++exhaustive;
        check(exhaustive == expected, "exhaustive translate count");
    }
    // the six odd characteristics split 3 + 3 by first column
    int ones = 0;
    for (const ThetaChar& t : chars)
        if (translate_count(t) == 1) ++ones;
    check(ones == 3, "exactly three first-column-(1,1) odd characteristics");
}

void criterion7_nori() {
    std::mt19937_64 rng(7);
    for (Int p : {5, 7, 11, 13}) {
        FpRing f(p);
        std::uniform_int_distribution<Int> entry(0, p - 1);
        std::uniform_int_distribution<Int> count_dist(1, 3);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<MatFp> gens;
            Int count = count_dist(rng);
            for (Int g = 0; g < count; ++g) {
                MatFp u = entry(rng) % 2 == 0 ? MatFp{1, entry(rng), 0, 1}
                                              : MatFp{1, 0, entry(rng), 1};
                MatFp conj = identity(f);
                for (int s = 0; s < 4; ++s) {
                    MatFp el = entry(rng) % 2 == 0 ? MatFp{1, entry(rng), 0, 1}
                                                   : MatFp{1, 0, entry(rng), 1};
                    conj = mul(f, conj, el);
                }
                gens.push_back(mul(f, mul(f, conj, u), inverse(f, conj)));
            }
            try {
                nori_order_check(p, gens);
            } catch (const CorollaryViolated& e) {
                check(false, e.what());
            }
        }
    }

    for (Int p : {5, 7}) {
        FpRing f(p);
        std::vector<MatFp> samples = {{1, 1, 0, 1}, {1, 0, 3 % p, 1}};
        for (const MatFp& x : samples) {
            for (Int t = 0; t < p; ++t)
                for (Int s = 0; s < p; ++s)
                    check(mat_eq(f,
                                 mul(f, nori_one_param(f, x, t), nori_one_param(f, x, s)),
                                 nori_one_param(f, x, t + s)),
                          "one-parameter law at p=" + std::to_string(p));
            check(mat_eq(f, nori_one_param(f, x, 1), x), "x(1) = x");
        }
    }
}

void criterion8_total_noncongruence_projection() {
    for (auto [m, n] : {std::pair<Int, Int>{3, 3}, {5, 3}}) {
        Origami o(m, n);
        for (const ProjectionReport& rep : sl2z_projection_check(o, 30)) {
            check(rep.match, "L(" + std::to_string(m) + "," + std::to_string(n) + ") at k=" +
                                 std::to_string(rep.k) + ": measured " +
                                 std::to_string(rep.measured) + ", expected " +
                                 std::to_string(rep.expected));
        }
    }
}

}  // namespace

int main() {
    criterion(1, "predicted = measured for the seven reference surfaces, norms <= 60",
              criterion1_end_to_end);
    criterion(2, "unit, P^1 and SL2 counts: brute force vs closed forms, norms <= 50",
              criterion2_index_formulas_vs_brute_force);
    criterion(3, "ramification of primes p <= 50 over seven orders", criterion3_ramification);
    criterion(4, "generator catalog validation for 2 <= m,n <= 12", criterion4_generator_catalog);
    criterion(5, "coset word families and lower-left closed forms", criterion5_proof_word_fixtures);
    criterion(6, "integral Weierstrass counts, spin flip, theta translates", criterion6_spin);
    criterion(7, "unipotent closure orders and one-parameter law", criterion7_nori);
    criterion(8, "full P^1(Z/k) projection for the odd-spin surfaces, k <= 30",
              criterion8_total_noncongruence_projection);

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance check(s) failed\n";
    return 1;
}
