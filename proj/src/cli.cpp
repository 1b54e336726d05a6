#include "homveech/cli.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace homveech::cli {

using nlohmann::json;

namespace {

std::string strip_spaces(std::string_view text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

Int parse_int(std::string_view s, std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected an integer in ideal literal");
    return std::stoll(std::string(s.substr(start, pos - start)));
}

}  // namespace

IdealHNF parse_ideal_literal(Order order, std::string_view text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty ideal literal");
    try {
        if (s.front() == '(' && s.back() == ')') {
            std::size_t pos = 1;
            Int k = parse_int(s, pos);
            if (pos + 1 != s.size()) throw ParseError("malformed principal literal: " + s);
            if (k == 0) throw ParseError("(0) is not a regular ideal");
            return principal_rational(order, k < 0 ? -k : k);
        }
        if (s.size() > 2 && s[0] == 'P' && s[1] == '(') {
            std::size_t pos = 2;
            Int p = parse_int(s, pos);
            if (pos >= s.size() || s[pos] != ',') throw ParseError("malformed prime literal: " + s);
            ++pos;
            Int i = parse_int(s, pos);
            if (pos + 1 != s.size() || s[pos] != ')')
                throw ParseError("malformed prime literal: " + s);
            if (!exact::is_prime(p)) throw ParseError("P(p,i): " + std::to_string(p) + " is not prime");
            auto primes = primes_above(order, p);
            if (i < 0 || i >= static_cast<Int>(primes.size()))
                throw ParseError("P(" + std::to_string(p) + "," + std::to_string(i) +
                                 "): only " + std::to_string(primes.size()) +
                                 " prime(s) above " + std::to_string(p));
            return primes[static_cast<std::size_t>(i)];
        }
        if (s.front() == '[' && s.back() == ']') {
            std::size_t pos = 1;
            Int n = parse_int(s, pos);
            if (pos >= s.size() || s[pos] != ';') throw ParseError("malformed HNF literal: " + s);
            ++pos;
            Int a = parse_int(s, pos);
            if (pos >= s.size() || s[pos] != '+') throw ParseError("malformed HNF literal: " + s);
            ++pos;
            Int m = 1;
            if (s[pos] != 'w') m = parse_int(s, pos);
            if (pos >= s.size() || s[pos] != 'w' || pos + 2 != s.size())
                throw ParseError("malformed HNF literal: " + s);
            return IdealHNF(order, n, a, m);
        }
    } catch (const NotAnIdeal& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unrecognized ideal literal: " + s);
}

namespace {

json report_json(const IndexReport& r) {
    json j;
    j["origami"] = {{"m", r.m}, {"n", r.n}, {"d", r.d}, {"class", to_string(r.orbit_class)}};
    j["ideal"] = {{"literal", r.ideal.literal()},
                  {"n", r.ideal.n()},
                  {"a", r.ideal.a()},
                  {"m", r.ideal.m()},
                  {"norm", r.ideal.norm()}};
    j["predicted"] = {{"case", to_string(r.predicted.which)},
                      {"factor_num", r.predicted.factor_num},
                      {"factor_den", r.predicted.factor_den},
                      {"index", r.predicted.index}};
    j["measured"] = {{"index", r.measured ? json(*r.measured) : json(nullptr)},
                     {"status", to_string(r.status)}};
    return j;
}

}  // namespace

std::string json_report(const IndexReport& r) {
    return report_json(r).dump();
}

std::string csv_header() {
    return "m,n,d,class,ideal_literal,ideal_n,ideal_a,ideal_m,ideal_norm,case,factor_num,"
           "factor_den,predicted_index,measured_index,status";
}

std::string csv_row(const IndexReport& r) {
    std::ostringstream os;
    os << r.m << ',' << r.n << ',' << r.d << ',' << to_string(r.orbit_class) << ','
       << r.ideal.literal() << ',' << r.ideal.n() << ',' << r.ideal.a() << ',' << r.ideal.m()
       << ',' << r.ideal.norm() << ',' << to_string(r.predicted.which) << ','
       << r.predicted.factor_num << ',' << r.predicted.factor_den << ',' << r.predicted.index
       << ',';
    if (r.measured) os << *r.measured;
    os << ',' << to_string(r.status);
    return os.str();
}

namespace {

enum class Format { Human, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "human") return Format::Human;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw ParseError("unknown format: " + s);
}

std::string mat_to_string(const Mat2O& m) {
    return "[[" + m.a.to_string() + ", " + m.b.to_string() + "], [" + m.c.to_string() + ", " +
           m.d.to_string() + "]]";
}

std::string mat_to_string(const Mat2Z& m) {
    std::ostringstream os;
    os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
    return os.str();
}

struct RamificationRow {
    Int p;
    bool ramified;
    std::vector<IdealHNF> primes;
    bool check_ok;
};

std::vector<RamificationRow> ramification_table(Order order, Int max_prime) {
    std::vector<RamificationRow> rows;
    for (Int p : exact::primes_up_to(max_prime)) {
        RamificationRow row{p, order.d() % p == 0, primes_above(order, p), false};
        IdealHNF principal_p = principal_rational(order, p);
        if (row.ramified) {
            const IdealHNF& q = row.primes.at(0);
            IdealHNF q2 = multiply(q, q);
            row.check_ok = row.primes.size() == 1 && q.conjugate() == q &&
                           q2 == multiply(principal_p, q) && q2 != principal_p;
        } else {
            row.check_ok = row.primes.size() == 2 &&
                           multiply(row.primes[0], row.primes[1]) == principal_p &&
                           row.primes[0].conjugate() == row.primes[1];
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_order(Int d, Int max_prime, Format format, std::ostream& out) {
    Order order(d);
    auto rows = ramification_table(order, max_prime);
    bool all_ok = std::all_of(rows.begin(), rows.end(),
                              [](const RamificationRow& r) { return r.check_ok; });
    if (format == Format::Json) {
        json j = json::array();
        for (const auto& row : rows) {
            json primes = json::array();
            for (const auto& q : row.primes) primes.push_back(q.literal());
            j.push_back({{"p", row.p},
                         {"type", row.ramified ? "ramified" : "split"},
                         {"primes", primes},
                         {"check", row.check_ok}});
        }
        out << json({{"d", d}, {"discriminant", order.discriminant()}, {"table", j}}).dump()
            << "\n";
    } else {
        out << "order with d=" << d << " (discriminant " << order.discriminant() << ")\n";
        for (const auto& row : rows) {
            out << "  p=" << row.p << "  " << (row.ramified ? "ramified" : "split   ") << "  ";
            for (std::size_t i = 0; i < row.primes.size(); ++i)
                out << (i ? ", " : "") << row.primes[i].literal();
            out << (row.ramified ? "   [p;w]^2 = (p)[p;w] != (p): " : "   product = (p): ")
                << (row.check_ok ? "ok" : "FAILED") << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

int cmd_ideal(Int d, const std::string& literal, bool show_factor, bool show_indices,
              Format format, std::ostream& out) {
    Order order(d);
    IdealHNF a = parse_ideal_literal(order, literal);
    json j = {{"literal", a.literal()}, {"n", a.n()},       {"a", a.a()},
              {"m", a.m()},             {"norm", a.norm()}, {"conjugate", a.conjugate().literal()}};
    if (show_factor) {
        IdealFactorization f = factor(a);
        json jf = json::array();
        for (const auto& part : f.ramified) {
            jf.push_back({{"type", "ramified"},
                          {"p", part.p},
                          {"rational_exp", part.rational_exp},
                          {"extra_prime", part.extra_prime}});
        }
        for (const auto& part : f.split) {
            jf.push_back({{"type", "split"},
                          {"prime", part.prime.literal()},
                          {"exp", part.exp},
                          {"conj_prime", part.conj_prime.literal()},
                          {"conj_exp", part.conj_exp}});
        }
        j["factorization"] = jf;
    }
    if (show_indices) {
        CongruenceIndices ci = congruence_indices(a);
        j["indices"] = {{"gamma0_index", ci.gamma0_index},
                        {"gamma0_to_gamma1", ci.gamma0_to_gamma1},
                        {"gamma1_to_gamma", ci.gamma1_to_gamma},
                        {"phi", ci.phi()},
                        {"sl2_quotient_order", ci.sl2_quotient_order}};
    }
    if (format == Format::Json) {
        out << j.dump() << "\n";
        return 0;
    }
    out << "ideal " << a.literal() << " in O_{" << order.discriminant() << "}: norm " << a.norm()
        << ", conjugate " << a.conjugate().literal() << "\n";
    if (show_factor) {
        out << "  factorization:";
        IdealFactorization f = factor(a);
        for (const auto& part : f.ramified) {
            if (part.rational_exp > 0)
                out << "  (" << part.p << ")^" << part.rational_exp;
            if (part.extra_prime) out << "  [" << part.p << ";0+w]";
        }
        for (const auto& part : f.split) {
            if (part.exp > 0) out << "  " << part.prime.literal() << "^" << part.exp;
            if (part.conj_exp > 0)
                out << "  " << part.conj_prime.literal() << "^" << part.conj_exp;
        }
        out << "\n";
    }
    if (show_indices) {
        CongruenceIndices ci = congruence_indices(a);
        out << "  gamma0_index " << ci.gamma0_index << ", gamma0:gamma1 " << ci.gamma0_to_gamma1
            << ", gamma1:gamma " << ci.gamma1_to_gamma << ", sl2_quotient_order "
            << ci.sl2_quotient_order << "\n";
    }
    return 0;
}

int cmd_origami(Int m, Int n, Format format, std::ostream& out) {
    Origami o(m, n);
    GeneratorCatalog cat = generator_catalog(o);
    bool comp_spin_defined = o.d() % 2 == 1 && o.d() > 3;
    if (format == Format::Json) {
        json entries = json::array();
        for (const CatalogEntry& e : cat.entries) {
            entries.push_back({{"label", e.label},
                               {"matrix", mat_to_string(e.matrix)},
                               {"first_component", mat_to_string(e.first_component)},
                               {"valid", true}});
        }
        json j = {{"m", m},
                  {"n", n},
                  {"d", o.d()},
                  {"class", to_string(o.orbit_class())},
                  {"spin", to_string(o.spin())},
                  {"integral_weierstrass_points", o.integral_weierstrass_count()},
                  {"complementary_spin",
                   comp_spin_defined ? json(to_string(o.complementary_spin())) : json(nullptr)},
                  {"catalog", entries}};
        out << j.dump() << "\n";
        return 0;
    }
    out << "L(" << m << "," << n << "): d=" << o.d() << ", class " << to_string(o.orbit_class())
        << ", spin " << to_string(o.spin()) << ", integral Weierstrass points "
        << o.integral_weierstrass_count();
    if (comp_spin_defined) out << ", complementary spin " << to_string(o.complementary_spin());
    out << "\ncatalog (validated: det 1, entries in the order):\n";
    for (const CatalogEntry& e : cat.entries)
        out << "  " << e.label << " = " << mat_to_string(e.matrix) << "\n";
    return 0;
}

void print_report_human(const IndexReport& r, std::ostream& out) {
    out << "L(" << r.m << "," << r.n << ") @ " << r.ideal.literal() << " (norm "
        << r.ideal.norm() << "): case " << to_string(r.predicted.which) << ", predicted "
        << r.predicted.index << ", measured ";
    if (r.measured)
        out << *r.measured;
    else
        out << "-";
    out << " -> " << to_string(r.status) << "\n";
}

int finish_verification(const std::vector<IndexReport>& reports,
                        const std::vector<ProjectionReport>& projections, Format format,
                        std::ostream& out) {
    if (format == Format::Json) {
        json j = json::array();
        for (const IndexReport& r : reports) j.push_back(report_json(r));
        json root = {{"reports", j}};
        if (!projections.empty()) {
            json pj = json::array();
            for (const ProjectionReport& p : projections)
                pj.push_back({{"k", p.k},
                              {"expected", p.expected},
                              {"measured", p.measured},
                              {"match", p.match}});
            root["sl2z_projection"] = pj;
        }
        out << root.dump() << "\n";
    } else if (format == Format::Csv) {
        out << csv_header() << "\n";
        for (const IndexReport& r : reports) out << csv_row(r) << "\n";
    } else {
        for (const IndexReport& r : reports) print_report_human(r, out);
        for (const ProjectionReport& p : projections)
            out << "P1(Z/" << p.k << "): expected " << p.expected << ", measured " << p.measured
                << " -> " << (p.match ? "match" : "MISMATCH") << "\n";
    }
    bool bound_hit = std::any_of(reports.begin(), reports.end(), [](const IndexReport& r) {
        return r.status == VerifyStatus::BoundExceededStatus;
    });
    bool all_ok = std::all_of(reports.begin(), reports.end(),
                              [](const IndexReport& r) {
                                  return r.status == VerifyStatus::Match;
                              }) &&
                  std::all_of(projections.begin(), projections.end(),
                              [](const ProjectionReport& p) { return p.match; });
    if (bound_hit) return 3;
    return all_ok ? 0 : 1;
}

MatFp random_unipotent(const FpRing& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> pick(0, f.p() - 1);
    MatFp u = pick(rng) % 2 == 0 ? MatFp{1, pick(rng), 0, 1} : MatFp{1, 0, pick(rng), 1};
    MatFp g = identity(f);
    for (int i = 0; i < 4; ++i) {
        MatFp e = pick(rng) % 2 == 0 ? MatFp{1, pick(rng), 0, 1} : MatFp{1, 0, pick(rng), 1};
        g = mul(f, g, e);
    }
    return mul(f, mul(f, g, u), inverse(f, g));
}

int cmd_nori(Int p, Int trials, std::uint64_t seed, Format format, std::ostream& out,
             std::ostream& err) {
    FpRing f(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> count_dist(1, 3);
    std::map<Int, Int> order_histogram;
    for (Int t = 0; t < trials; ++t) {
        std::vector<MatFp> gens;
        Int count = count_dist(rng);
        for (Int i = 0; i < count; ++i) gens.push_back(random_unipotent(f, rng));
        try {
            ++order_histogram[nori_order_check(p, gens)];
        } catch (const CorollaryViolated& e) {
            err << e.what() << "\n";
            return 1;
        }
    }
    if (format == Format::Json) {
        json hist = json::object();
        for (auto [order, times] : order_histogram) hist[std::to_string(order)] = times;
        out << json({{"p", p}, {"trials", trials}, {"orders", hist}, {"pass", true}}).dump()
            << "\n";
    } else {
        out << "F_" << p << ": " << trials << " random unipotent generator sets, orders:";
        for (auto [order, times] : order_histogram) out << " " << order << "x" << times;
        out << " (all in {1, " << p << ", " << p * p * p - p << "})\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for quadratic orders of square discriminant and the "
                 "homology Veech groups of L-shaped square-tiled surfaces"};
    app.require_subcommand(1);

    std::string format_name = "human";
    Int bound = kDefaultEnumerationBound;
    app.add_option("--format", format_name, "output format: human, json, csv")
        ->capture_default_str();
    app.add_option("--bound", bound, "enumeration bound for quotient rings and closures")
        ->envname("HOMVEECH_BOUND")
        ->capture_default_str();

    Int d = 0, m = 0, n = 0, max_prime = 50, max_norm = 20, p = 5, trials = 50;
    Int proj_kmax = 30;
    int workers = 1;
    std::uint64_t seed = 0;
    std::string ideal_literal;
    bool show_factor = false, show_indices = false;

    // let global options (--format, --bound) appear after the subcommand too
    app.fallthrough();

    auto* order_cmd = app.add_subcommand("order", "ramification table of an order");
    order_cmd->fallthrough();
    order_cmd->add_option("--d", d, "d, so the discriminant is d^2")->required();
    order_cmd->add_option("--max-prime", max_prime, "largest prime in the table")
        ->capture_default_str();

    auto* ideal_cmd = app.add_subcommand("ideal", "inspect one ideal");
    ideal_cmd->fallthrough();
    ideal_cmd->add_option("--d", d)->required();
    ideal_cmd->add_option("--ideal", ideal_literal, "ideal literal")->required();
    ideal_cmd->add_flag("--factor", show_factor, "print the prime factorization");
    ideal_cmd->add_flag("--indices", show_indices, "print the congruence-subgroup indices");

    auto* origami_cmd = app.add_subcommand("origami", "inspect an L(m,n) surface");
    origami_cmd->fallthrough();
    origami_cmd->add_option("--m", m)->required();
    origami_cmd->add_option("--n", n)->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "compare predicted and measured index at one ideal");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--m", m)->required();
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--ideal", ideal_literal)->required();

    auto* range_cmd =
        app.add_subcommand("verify-range", "verify all ideals up to a norm bound");
    range_cmd->fallthrough();
    range_cmd->add_option("--m", m)->required();
    range_cmd->add_option("--n", n)->required();
    range_cmd->add_option("--max-norm", max_norm)->required();
    range_cmd->add_option("--workers", workers, "worker threads")->capture_default_str();
    range_cmd->add_option("--proj-kmax", proj_kmax,
                          "largest k for the P^1(Z/k) projection check (class B)")
        ->capture_default_str();

    auto* nori_cmd = app.add_subcommand("nori", "unipotent closure orders over F_p");
    nori_cmd->fallthrough();
    nori_cmd->add_option("--p", p, "prime field")->required();
    nori_cmd->add_option("--trials", trials)->capture_default_str();
    nori_cmd->add_option("--seed", seed)->capture_default_str();

    std::vector<const char*> argv;
    argv.push_back("homveech");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        Format format = parse_format(format_name);
        if (order_cmd->parsed()) return cmd_order(d, max_prime, format, out);
        if (ideal_cmd->parsed())
            return cmd_ideal(d, ideal_literal, show_factor, show_indices, format, out);
        if (origami_cmd->parsed()) return cmd_origami(m, n, format, out);
        if (verify_cmd->parsed()) {
            Origami o(m, n);
            IndexReport rep = verify(o, parse_ideal_literal(o.order(), ideal_literal), bound);
            return finish_verification({rep}, {}, format, out);
        }
        if (range_cmd->parsed()) {
            Origami o(m, n);
            if (!o.is_canonical_representative())
                err << "note: L(" << m << "," << n << ") is not the canonical shape of its "
                    << "orbit; the printed generators may measure a proper subgroup\n";
            VerifyRangeResult res = verify_range(o, max_norm, bound, workers, proj_kmax);
            return finish_verification(res.reports, res.projections, format, out);
        }
        if (nori_cmd->parsed()) return cmd_nori(p, trials, seed, format, out, err);
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NotAnIdeal& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidShape& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionViolated& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        err << "bound exceeded: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        err << "aborted: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand selected\n";
    return 2;
}

}  // namespace homveech::cli
