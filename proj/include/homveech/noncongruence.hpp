#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homveech/origami.hpp"

namespace homveech {

// The distinguished prime above 2 for odd d: the ideal gcd of (2) and
// (2 - w), of norm 2.  Its conjugate is the other prime above 2.
IdealHNF identify_p2(Order order);  // PreconditionViolated for even d

enum class PredictionCase { OneA, OneB, TwoA, TwoB, ThreeA, ThreeB };

std::string to_string(PredictionCase c);

struct Prediction {
    PredictionCase which;
    Int factor_num;  // 1 or 2
    Int factor_den;  // 1 or 3
    Int index;       // factor * gamma0_index, always integral
};

// The predicted Gamma_0-level index of the homology Veech group of o at the
// ideal a: the deficiency factor 2/3 applies exactly when
//   class A (or d = 3):  a inside p_2,
//   class B:             a inside p_2^sigma,
//   even d:              2 | N(a),
// and the index is otherwise the full #P^1(O_D/a).
Prediction predicted_index(const Origami& o, const IdealHNF& a);

// Orbit size of the base point of P^1(O_D/a) under the reduced generator
// catalog.  Throws BoundExceeded when N(a) is past the enumeration bound.
Int measured_index(const Origami& o, const IdealHNF& a,
                   Int bound = kDefaultEnumerationBound);

enum class VerifyStatus { Match, Mismatch, BoundExceededStatus };

std::string to_string(VerifyStatus s);

struct IndexReport {
    Int m, n, d;
    OrbitClass orbit_class;
    IdealHNF ideal;
    Prediction predicted;
    std::optional<Int> measured;  // absent on bound-exceeded
    VerifyStatus status;
};

IndexReport verify(const Origami& o, const IdealHNF& a,
                   Int bound = kDefaultEnumerationBound);

struct ProjectionReport {
    Int k;
    Int expected;  // [SL2(Z) : Gamma_0(k)]
    Int measured;  // orbit of the first components in P^1(Z/kZ)
    bool match;
};

// For a class-B origami the first components must project onto everything:
// the orbit in P^1(Z/kZ) equals the classical index for every k.
std::vector<ProjectionReport> sl2z_projection_check(const Origami& o, Int k_max);

struct VerifyRangeResult {
    std::vector<IndexReport> reports;            // sorted by (norm, literal)
    std::vector<ProjectionReport> projections;   // class-B odd-d origamis only

    bool all_match() const;
    bool any_bound_exceeded() const;
};

// Verifies every canonical ideal of norm <= max_norm, distributing pairs
// over `workers` threads; output order is deterministic regardless of the
// worker count.
VerifyRangeResult verify_range(const Origami& o, Int max_norm,
                               Int bound = kDefaultEnumerationBound, int workers = 1,
                               Int projection_k_max = 30);

}  // namespace homveech
