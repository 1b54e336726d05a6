#include "homveech/noncongruence.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

namespace homveech {

IdealHNF identify_p2(Order order) {
    if (order.d() % 2 == 0)
        throw PreconditionViolated("p_2 is defined only for odd d (2 must split)");
    QuadInt two = QuadInt::integer(order, 2);
    QuadInt two_minus_w = two - QuadInt::w(order);
    IdealHNF p2 = sum_gcd(principal(two), principal(two_minus_w));
    if (p2.norm() != 2) throw Error("p_2 computation produced norm " + std::to_string(p2.norm()));
    return p2;
}

std::string to_string(PredictionCase c) {
    switch (c) {
        case PredictionCase::OneA: return "1A";
        case PredictionCase::OneB: return "1B";
        case PredictionCase::TwoA: return "2A";
        case PredictionCase::TwoB: return "2B";
        case PredictionCase::ThreeA: return "3A";
        case PredictionCase::ThreeB: return "3B";
    }
    return "?";
}

Prediction predicted_index(const Origami& o, const IdealHNF& a) {
    Int gamma0 = congruence_indices(a).gamma0_index;
    bool deficient;
    PredictionCase full_case, deficient_case;
    if (o.d() % 2 == 0) {
        deficient = a.norm() % 2 == 0;
        full_case = PredictionCase::ThreeA;
        deficient_case = PredictionCase::ThreeB;
    } else if (o.orbit_class() == OrbitClass::B) {
        deficient = identify_p2(o.order()).conjugate().contains(a);
        full_case = PredictionCase::TwoA;
        deficient_case = PredictionCase::TwoB;
    } else {
        deficient = identify_p2(o.order()).contains(a);
        full_case = PredictionCase::OneA;
        deficient_case = PredictionCase::OneB;
    }
    if (!deficient) return Prediction{full_case, 1, 1, gamma0};
    Int idx = exact::div_exact(exact::mul(2, gamma0), 3, "deficient index");
    return Prediction{deficient_case, 2, 3, idx};
}

Int measured_index(const Origami& o, const IdealHNF& a, Int bound) {
    QuotRing ring(a, bound);
    std::vector<Mat2Q> gens;
    for (const Mat2O& g : generator_catalog(o).matrices()) gens.push_back(reduce_mat(g, ring));
    return orbit_of_base(ring, gens).size;
}

std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Match: return "match";
        case VerifyStatus::Mismatch: return "mismatch";
        case VerifyStatus::BoundExceededStatus: return "bound-exceeded";
    }
    return "?";
}

IndexReport verify(const Origami& o, const IdealHNF& a, Int bound) {
    IndexReport rep{o.m(), o.n(), o.d(), o.orbit_class(), a, predicted_index(o, a),
                    std::nullopt,  VerifyStatus::Match};
    try {
        rep.measured = measured_index(o, a, bound);
    } catch (const BoundExceeded&) {
        rep.status = VerifyStatus::BoundExceededStatus;
        return rep;
    }
    // An orbit larger than P^1 is impossible; fail loudly rather than report.
    if (*rep.measured > congruence_indices(a).gamma0_index)
        throw std::logic_error("orbit of " + a.literal() + " exceeds #P^1");
    rep.status = *rep.measured == rep.predicted.index ? VerifyStatus::Match
                                                      : VerifyStatus::Mismatch;
    return rep;
}

std::vector<ProjectionReport> sl2z_projection_check(const Origami& o, Int k_max) {
    std::vector<Mat2Z> firsts;
    for (const CatalogEntry& e : generator_catalog(o).entries) firsts.push_back(e.first_component);
    std::vector<ProjectionReport> out;
    for (Int k = 1; k <= k_max; ++k) {
        Int expected = sl2z_gamma0_index(k);
        Int measured = p1_orbit_zmod(k, firsts);
        out.push_back(ProjectionReport{k, expected, measured, expected == measured});
    }
    return out;
}

bool VerifyRangeResult::all_match() const {
    for (const IndexReport& r : reports)
        if (r.status != VerifyStatus::Match) return false;
    for (const ProjectionReport& p : projections)
        if (!p.match) return false;
    return true;
}

bool VerifyRangeResult::any_bound_exceeded() const {
    return std::any_of(reports.begin(), reports.end(), [](const IndexReport& r) {
        return r.status == VerifyStatus::BoundExceededStatus;
    });
}

VerifyRangeResult verify_range(const Origami& o, Int max_norm, Int bound, int workers,
                               Int projection_k_max) {
    std::vector<IdealHNF> ideals = enumerate_ideals(o.order(), max_norm);
    std::vector<std::optional<IndexReport>> slots(ideals.size());

    if (workers < 1) workers = 1;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ideals.size()) return;
            try {
                slots[i] = verify(o, ideals[i], bound);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    VerifyRangeResult result;
    for (auto& slot : slots) result.reports.push_back(std::move(*slot));
    std::sort(result.reports.begin(), result.reports.end(),
              [](const IndexReport& a, const IndexReport& b) {
                  return std::tuple(a.ideal.norm(), a.ideal.literal()) <
                         std::tuple(b.ideal.norm(), b.ideal.literal());
              });

    if (o.d() % 2 == 1 && o.orbit_class() == OrbitClass::B && projection_k_max >= 1)
        result.projections = sl2z_projection_check(o, projection_k_max);
    return result;
}

}  // namespace homveech
