// One PASS/FAIL line per acceptance criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "xtal/io.hpp"
#include "xtal/scenarios.hpp"

using namespace xtal;
using namespace xtal::scenarios;

namespace {

int failures = 0;

void report(int number, const std::string& what, double limit_seconds, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& ex) {
        note = std::string("exception: ") + ex.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && s > limit_seconds) {
        ok = false;
        note = "over the " + std::to_string(limit_seconds) + " s limit";
    }
    if (!ok) ++failures;
    std::printf("%s #%d %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(), s, note.empty() ? "" : ": ",
                note.c_str());
    std::fflush(stdout);
}

bool all_pass(const std::vector<Certificate>& cs, std::string& note) {
    for (const auto& c : cs)
        if (!c.pass()) {
            note = c.id + " failed";
            if (!c.error.empty()) note += " (" + c.error + ")";
            for (const auto& k : c.checks)
                if (!k.pass()) {
                    note += " at " + k.name;
                    break;
                }
            return false;
        }
    return true;
}

}  // namespace

int main() {
    report(1, "rank-4 interval of B((4,3),4): mu = euler_mobius = 2", 1.0,
           [](std::string& note) { return all_pass({s1_rank4_interval()}, note); });

    report(2, "(n+1,n) chain family for n = 3,4,5: monotone chains separated, increasing class of size 1, 2, 5", 60.0, [](std::string& note) {
        return all_pass({s2_disconnected_chains(3), s2_disconnected_chains(4), s2_disconnected_chains(5)}, note);
    });

    report(3, "product construction r = 2: mu = 4, square of the rank-4 interval", 300.0,
           [](std::string& note) { return all_pass({s3_product_mobius(2)}, note); });

    report(4, "fiber at 2413 in B((3,2),4): 8 elements, components of sizes 2 and 6", 5.0,
           [](std::string& note) { return all_pass({s5_disconnected_fiber()}, note); });

    report(5, "lower and upper interval Moebius values on the matrix", 300.0, [](std::string& note) {
        std::vector<Certificate> cs;
        for (const auto& [shape, n] : default_matrix()) cs.push_back(s6_lower_interval_mobius(shape, n));
        return all_pass(cs, note);
    });

    report(6, "fibers at w_o(J): unique extremes, nonempty iff J avoids K", 300.0, [](std::string& note) {
        for (const auto& [shape, n] : default_matrix()) {
            const auto g = generate(shape, n);
            const auto keys = compute_keys(g);
            const auto k = stabilizer_indices(shape, n);
            for (const auto& j : all_parabolic_sets(n)) {
                const auto ext = fiber_extremes(g, keys, j);  // throws when an extreme is not unique
                if (ext.has_value() != ((j.mask() & k.mask()) == 0)) {
                    note = matrix_label(shape, n) + " J=" + to_string(j);
                    return false;
                }
            }
        }
        return true;
    });

    report(7, "P1-P6 and one Stembridge component per lower/upper interval on the matrix", 300.0,
           [](std::string& note) {
               std::vector<Certificate> cs;
               for (const auto& [shape, n] : default_matrix()) cs.push_back(s7_axioms_and_connectivity(shape, n));
               return all_pass(cs, note);
           });

    report(8, "|mu| >= 2 yields a witness; local bounds are minimal; non-lattice pair found", 300.0,
           [](std::string& note) { return all_pass({s8_witness_from_mobius(), s4_non_lattice()}, note); });

    report(9, "mu(0,1) on staircases and non-staircases", 60.0,
           [](std::string& note) { return all_pass({s10_rho_sphere()}, note); });

    report(10, "oracle equivalence: mobius/euler, budgeted intervals, weak join, key axioms", 600.0,
           [](std::string& note) {
               std::mt19937 rng(12345);
               for (const auto& [shape, n] : default_matrix()) {
                   const auto g = generate(shape, n);
                   const auto d = oracle::to_digraph(g);
                   const bool exhaustive = shape == Shape{2, 1};
                   int sampled = 0;
                   std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.size() - 1));
                   auto check_mu = [&](VertexId u, VertexId v) {
                       const auto I = extract_interval(g, u, v);
                       if (!I || u == v) return true;
                       ++sampled;
                       return mobius_from_bottom(*I).back() == euler_mobius(*I);
                   };
                   if (exhaustive) {
                       for (VertexId u = 0; u < g.size(); ++u)
                           for (VertexId v = 0; v < g.size(); ++v)
                               if (!check_mu(u, v)) {
                                   note = "mobius != euler on " + matrix_label(shape, n);
                                   return false;
                               }
                   } else {
                       while (sampled < 200) {
                           auto u = pick(rng), v = pick(rng);
                           if (g.rank(u) > g.rank(v)) std::swap(u, v);
                           if (!check_mu(u, v)) {
                               note = "mobius != euler on " + matrix_label(shape, n);
                               return false;
                           }
                       }
                   }
                   if (g.size() <= 500)
                       for (VertexId u = 0; u < g.size(); ++u)
                           for (VertexId v = 0; v < g.size(); ++v) {
                               const auto expected = d.interval(u, v);
                               const auto I = extract_interval(g, u, v);
                               std::set<int> got;
                               if (I)
                                   for (auto x : I->members()) got.insert(static_cast<int>(x));
                               if (got != expected) {
                                   note = "interval mismatch on " + matrix_label(shape, n);
                                   return false;
                               }
                           }
                   const auto keys = compute_keys(g);
                   if (!check_key_axioms(g, keys).passed) {
                       note = "key axioms on " + matrix_label(shape, n);
                       return false;
                   }
                   for (VertexId b = 0; b < g.size(); ++b)
                       if (!adapted_string_check(g, keys, b)) {
                           note = "adapted strings on " + matrix_label(shape, n);
                           return false;
                       }
               }
               const auto perms = oracle::all_perms(4);
               for (const auto& a : perms)
                   for (const auto& b : perms)
                       if (left_weak_join({Permutation(a), Permutation(b)}) != Permutation(*oracle::brute_join({a, b}, 4))) {
                           note = "join mismatch";
                           return false;
                       }
               return true;
           });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
