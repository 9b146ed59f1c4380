// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alq/cli.hpp"
#include "alq/error.hpp"
#include "alq/graph_io.hpp"
#include "alq/localpoints.hpp"
#include "alq/mumford_graph.hpp"
#include "alq/parity.hpp"
#include "alq/quadforms.hpp"
#include "alq/quaternion.hpp"
#include "alq/report.hpp"
#include "alq/shimura.hpp"
#include "random_graph.hpp"

using namespace alq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Pair = std::pair<std::uint64_t, std::uint64_t>;

bool trial_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string show(const Pair& pq) {
    return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
}

// Admissible pairs with pq < limit from trial division and explicit
// quadratic-residue tables, sharing no code with the library.
std::vector<Pair> oracle_admissible_below(std::uint64_t limit) {
    std::vector<Pair> out;
    for (std::uint64_t p = 5; 5 * p < limit; p += 24) {
        if (!trial_prime(p)) continue;
        for (std::uint64_t q = 5; p * q < limit; q += 12) {
            if (q == p || !trial_prime(q)) continue;
            std::vector<bool> residue(q, false);
            for (std::uint64_t x = 1; x < q; ++x) residue[x * x % q] = true;
            if (!residue[p % q]) out.emplace_back(p, q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AdmissiblePair> library_admissible_below(std::uint64_t limit) {
    std::vector<AdmissiblePair> out;
    for (const auto& pair : enumerate_admissible(limit / 5))
        if (pair.disc() < limit) out.push_back(pair);
    return out;
}

void require_same_pairs(Outcome& o, const std::vector<AdmissiblePair>& lib,
                        const std::vector<Pair>& oracle) {
    std::vector<Pair> got;
    for (const auto& pair : lib) got.emplace_back(pair.p(), pair.q());
    if (got != oracle)
        o.fail("library enumeration differs from oracle (" + std::to_string(got.size()) + " vs " +
               std::to_string(oracle.size()) + " pairs)");
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t magnitude(std::int64_t x) {
    return x < 0 ? static_cast<std::uint64_t>(-x) : static_cast<std::uint64_t>(x);
}

// 1. Hilbert symbol against the solvability search, and the product formula.
Outcome criterion_hilbert() {
    Outcome o;
    std::size_t compared = 0;
    const std::vector<Place> places{Place::infinity(), Place::finite(2),  Place::finite(3),
                                    Place::finite(5),  Place::finite(7),  Place::finite(11),
                                    Place::finite(13), Place::finite(17), Place::finite(97)};
    for (const auto& v : places) {
        for (std::int64_t a = -50; a <= 50; ++a) {
            for (std::int64_t b = -50; b <= 50; ++b) {
                if (a == 0 || b == 0) continue;
                ++compared;
                if (hilbert_symbol(a, b, v) != hilbert_symbol_by_search(a, b, v))
                    o.fail("(" + std::to_string(a) + "," + std::to_string(b) + ")_" + v.to_string() +
                           " disagrees with the search");
            }
        }
    }

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::int64_t> coeff(-200, 200);
    std::uniform_int_distribution<std::size_t> pick(0, 24);
    std::vector<std::uint64_t> small_primes;
    for (std::uint64_t p = 2; small_primes.size() < 25; ++p)
        if (trial_prime(p)) small_primes.push_back(p);
    for (int trial = 0; trial < 1000; ++trial) {
        std::int64_t a = 0, b = 0;
        while (a == 0) a = coeff(rng);
        while (b == 0) b = coeff(rng);
        int product = to_int(hilbert_symbol(a, b, Place::infinity()));
        std::set<std::uint64_t> bad{2};
        for (auto p : prime_divisors(magnitude(a))) bad.insert(p);
        for (auto p : prime_divisors(magnitude(b))) bad.insert(p);
        for (auto p : bad) product *= to_int(hilbert_symbol(a, b, Place::finite(p)));
        if (product != 1)
            o.fail("product formula fails for (" + std::to_string(a) + "," + std::to_string(b) + ")");
        // away from 2ab every symbol is +1
        for (int extra = 0; extra < 10; ++extra) {
            const auto p = small_primes[pick(rng)];
            if (bad.count(p) == 0 && hilbert_symbol(a, b, Place::finite(p)) != Sign::plus)
                o.fail("symbol at a good prime is -1");
        }
    }
    o.detail = o.pass ? std::to_string(compared) + " symbols match the search; product formula on 1000 pairs"
                      : o.detail;
    return o;
}

// 2. Every ramification set has even size.
Outcome criterion_ramification_parity() {
    Outcome o;
    for (std::int64_t a = -60; a <= 60; ++a) {
        for (std::int64_t b = -60; b <= 60; ++b) {
            if (a == 0 || b == 0) continue;
            if (ramified_places(a, b).size() % 2 != 0)
                o.fail("odd ramification for (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    if (o.pass) o.detail = "all 14400 algebras";
    return o;
}

// 3. h(-4p) = 2 mod 4 for p = 5 mod 8.
Outcome criterion_class_number_congruence() {
    Outcome o;
    std::size_t count = 0;
    for (std::uint64_t p = 5; p < 10000; p += 8) {
        if (!trial_prime(p)) continue;
        ++count;
        const auto h = class_number(-4 * static_cast<std::int64_t>(p));
        if (h % 4 != 2) o.fail("h(-4*" + std::to_string(p) + ") = " + std::to_string(h));
    }
    if (o.pass) o.detail = std::to_string(count) + " primes";
    return o;
}

// 4. Genus formula against the mass closed form.
Outcome criterion_mass_formula() {
    Outcome o;
    const auto pairs = library_admissible_below(10000);
    require_same_pairs(o, pairs, oracle_admissible_below(10000));
    for (const auto& pair : pairs) {
        const std::uint64_t p = pair.p(), q = pair.q();
        const std::uint64_t product = (p - 1) * (q - 1);
        if ((product - 16) % 24 != 0) {
            o.fail("mass term not integral at " + show({p, q}));
            continue;
        }
        const std::uint64_t half = 1 + (product - 16) / 24;
        const auto g = genus_VB(p, q);
        if (g != 2 * half - 1) o.fail("genus mismatch at " + show({p, q}));
        if (((g + 1) / 2) % 2 != 1) o.fail("(g+1)/2 even at " + show({p, q}));
    }
    if (o.pass) o.detail = std::to_string(pairs.size()) + " admissible pairs with pq < 10^4";
    return o;
}

// 5. Every admissible pair certifies odd, deficient exactly at q.
Outcome criterion_theorem() {
    Outcome o;
    const auto pairs = library_admissible_below(10000);
    require_same_pairs(o, pairs, oracle_admissible_below(10000));
    for (const auto& pair : pairs) {
        const auto c = certify(pair);
        const auto at = show({pair.p(), pair.q()});
        if (c.verdict != Verdict::odd) o.fail("verdict even at " + at);
        if (c.ledger.deficient_places() != std::vector<Place>{Place::finite(pair.q())})
            o.fail("deficient places wrong at " + at);
        if (c.genus.g_quotient % 2 != 0) o.fail("g_quotient odd at " + at);
        if (c.genus.e_p % 8 != 4) o.fail("e_p not 4 mod 8 at " + at);
    }
    auto spot = [&](std::int64_t p, std::int64_t q, GenusData expected) {
        const auto result = certify(p, q);
        const auto* c = std::get_if<ParityCertificate>(&result);
        if (!c || c->genus.g_VB != expected.g_VB || c->genus.e_p != expected.e_p ||
            c->genus.g_quotient != expected.g_quotient)
            o.fail("spot values wrong at " + show({static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q)}));
    };
    spot(5, 17, {5, 4, 2, 0});
    spot(29, 17, {37, 12, 16, 0});
    if (o.pass) o.detail = std::to_string(pairs.size()) + " certificates, all odd at q";
    return o;
}

// 6. Neither candidate algebra matches the q-interchange.
Outcome criterion_non_isomorphism() {
    Outcome o;
    const auto pairs = library_admissible_below(10000);
    for (const auto& pair : pairs) {
        const auto p = static_cast<std::int64_t>(pair.p());
        const auto q = static_cast<std::int64_t>(pair.q());
        const auto at = show({pair.p(), pair.q()});
        if (hilbert_symbol(-1, -p * q, Place::finite(pair.p())) != Sign::plus)
            o.fail("(-1,-pq)_p = -1 at " + at);
        if (hilbert_symbol(-p, -q, Place::finite(pair.q())) != Sign::minus)
            o.fail("(-p,-q)_q = +1 at " + at);
        const auto swapped = interchange(pair.algebra(), pair.q());
        if (is_isomorphic(swapped, QuaternionAlgebra::from_symbols(-1, -p * q)))
            o.fail("q-interchange is B(-1,-pq) at " + at);
        if (is_isomorphic(swapped, QuaternionAlgebra::from_symbols(-p, -q)))
            o.fail("q-interchange is B(-p,-q) at " + at);
    }
    if (o.pass) o.detail = std::to_string(pairs.size()) + " pairs";
    return o;
}

// 7. Possibly hyperelliptic pairs. The oracle list is frozen here; the
// product bound forces p, q <= 61, so scanning to 64 is exhaustive.
Outcome criterion_hyperelliptic() {
    Outcome o;
    std::vector<Pair> oracle;
    for (const auto& pq : oracle_admissible_below(64 * 64))
        if (pq.first <= 64 && pq.second <= 64 && (pq.first - 1) * (pq.second - 1) <= 240)
            oracle.push_back(pq);
    const std::vector<Pair> frozen{{5, 17}, {5, 53}, {53, 5}};
    if (oracle != frozen) o.fail("oracle list changed");

    const auto pairs = enumerate_admissible(3000);
    std::vector<Pair> flagged;
    for (const auto& w : hyperelliptic_sieve(pairs)) {
        if (w.flag == HyperellipticFlag::possibly_hyperelliptic)
            flagged.emplace_back(w.pair.p(), w.pair.q());
        // 12 H = prod(l-1) + 3 prod(1-(-4/l)) + 4 prod(1-(-3/l)) over l | 2pq
        std::int64_t twelve_h = 1, e2 = 1, e3 = 1;
        for (std::uint64_t l : {std::uint64_t{2}, w.pair.p(), w.pair.q()}) {
            twelve_h *= static_cast<std::int64_t>(l) - 1;
            e2 *= 1 - (l == 2 ? 0 : (l % 4 == 1 ? 1 : -1));
            e3 *= 1 - (l % 3 == 0 ? 0 : (l % 3 == 1 ? 1 : -1));
        }
        twelve_h += 3 * e2 + 4 * e3;
        if (twelve_h % 12 != 0 || static_cast<std::uint64_t>(twelve_h / 12) != w.class_number_2pq)
            o.fail("H(2pq) wrong at " + show({w.pair.p(), w.pair.q()}));
    }
    if (flagged != frozen) {
        std::string list;
        for (const auto& pq : flagged) list += show(pq);
        o.fail("flagged " + list);
    }
    if (eichler_class_number(170) != 8) o.fail("H(170) != 8");
    if (o.pass) o.detail = "flagged (5,17),(5,53),(53,5) among " + std::to_string(pairs.size()) + " pairs";
    return o;
}

// 8. Quotient length rule, lift identities and parity exchange on random graphs.
Outcome criterion_graphs() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::size_t lifts = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = testing::random_shimura_like_graph(rng);
        if (!validate(g).empty()) {
            o.fail("generator produced an invalid graph");
            continue;
        }
        const auto q = quotient_with_map(g, InvolutionName::wq);
        for (EdgeIndex s = 0; s < g.oriented_edge_count(); ++s) {
            const auto r = q.edge_image[s];
            if (q.graph.length(r) % 2 == 0 && g.length(s) % 2 != 0 && g.wq.on_edge(s) != s)
                o.fail("even quotient edge with an odd, wq-free lift");
            if (q.graph.length(r) % 2 == 0 && q.graph.wp.on_edge(r) == opposite(r)) {
                ++lifts;
                if (g.wp.on_edge(s) != opposite(s) && g.wpq.on_edge(s) != opposite(s))
                    o.fail("lift reversed by neither wp nor wpq");
                try {
                    lift_case_analysis(g, s);
                } catch (const GraphError& e) {
                    o.fail(std::string("lift case analysis: ") + e.what());
                }
            }
            if (g.wq.on_edge(s) == s && g.wpq.on_edge(s) == opposite(s) &&
                g.wp.on_edge(s) != opposite(s))
                o.fail("wq-fixed, wpq-reversed edge not reversed by wp");
        }
        for (const auto* w : {&g.wp, &g.wpq}) {
            if (!exchanges_parity(g, *w)) o.fail("frobenius does not exchange parity");
            if (!fixed_vertices(*w).empty()) o.fail("parity-exchanging frobenius fixes a vertex");
        }
    }
    if (o.pass) o.detail = "1000 graphs, " + std::to_string(lifts) + " lifts of reversed even edges";
    return o;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// 9. Golden files and round trips.
Outcome criterion_cli() {
    Outcome o;
    const std::filesystem::path golden = ALQ_GOLDEN_DIR;
    const std::filesystem::path data = ALQ_TEST_DATA_DIR;
    auto run = [](std::vector<std::string> args, std::string& out) {
        std::ostringstream o_stream, e_stream;
        args.insert(args.begin(), "alq");
        const int code = run_cli(args, o_stream, e_stream);
        out = o_stream.str();
        return code;
    };

    std::string out;
    if (run({"certify", "5", "17", "--format", "json"}, out) != kExitOk ||
        out != slurp(golden / "certify_5_17.json"))
        o.fail("certify 5 17 differs from golden");
    else if (certificate_from_record(record_from_json(out)) != std::get<ParityCertificate>(certify(5, 17)))
        o.fail("certificate JSON does not round-trip");

    if (run({"enumerate", "--max", "30", "--format", "csv"}, out) != kExitOk ||
        out != slurp(golden / "enumerate_30.csv"))
        o.fail("enumerate --max 30 differs from golden");

    const auto graph = parse_graph_file(data / "square.graph");
    if (serialize_graph(graph) != slurp(golden / "square.graph"))
        o.fail("graph serialization differs from golden");
    if (parse_graph_file(golden / "square.graph") != graph) o.fail("golden graph reparses differently");

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = testing::random_shimura_like_graph(rng);
        std::istringstream in(serialize_graph(g));
        if (parse_graph(in) != g) o.fail("random graph does not round-trip");
    }
    if (o.pass) o.detail = "certify, enumerate and graph goldens match";
    return o;
}

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "hilbert symbol oracle and product formula", 30, criterion_hilbert},
        {2, "ramification parity", 10, criterion_ramification_parity},
        {3, "class number congruence", 60, criterion_class_number_congruence},
        {4, "mass formula", 10, criterion_mass_formula},
        {5, "odd parity for every admissible pair", 60, criterion_theorem},
        {6, "criterion non-isomorphism", 30, criterion_non_isomorphism},
        {7, "hyperelliptic sieve", 10, criterion_hyperelliptic},
        {8, "graph properties", 30, criterion_graphs},
        {9, "cli contract", 5, criterion_cli},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.pass && seconds > c.limit_seconds)
            outcome.fail("took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        if (!outcome.pass) ++failures;
        std::printf("criterion %d (%s): %s [%.2f s] %s\n", c.number, c.name,
                    outcome.pass ? "PASS" : "FAIL", seconds, outcome.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures == 0 ? 0 : 1;
}
