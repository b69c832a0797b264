// Command-line front end. Exit codes: 0 ok, 1 failed verification, 2 bad arguments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "xtal/crystal.hpp"
#include "xtal/io.hpp"
#include "xtal/keymap.hpp"
#include "xtal/poset.hpp"
#include "xtal/scenarios.hpp"

namespace {

using namespace xtal;
using json = io::json;

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CrystalArgs {
    std::string shape;
    int n = 0;
    std::size_t cap = kDefaultVertexCap;
    std::string format = "text";

    void add_to(CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--shape", shape, "partition, e.g. 4,3")->required();
        cmd->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(1, 255));
        cmd->add_option("--cap", cap, "vertex cap")->capture_default_str();
        if (with_format) cmd->add_option("--format", format, "text or json")->capture_default_str();
    }

    CrystalGraph build() const {
        const auto s = parse_shape(shape);
        if (s.rows() > n) throw ArgumentError("shape " + shape + " does not fit in n = " + std::to_string(n) + " rows");
        return generate(s, n, cap);
    }
};

VertexId select(const CrystalGraph& g, const std::string& literal, VertexId fallback) {
    if (literal.empty()) return fallback;
    Tableau t;
    try {
        t = parse_tableau(literal);
    } catch (const std::invalid_argument& ex) {
        throw ArgumentError("bad tableau '" + literal + "': " + ex.what());
    }
    if (!(t.shape() == g.shape())) throw ArgumentError("tableau '" + literal + "' has the wrong shape");
    auto v = g.find(t);
    if (!v) throw ArgumentError("tableau '" + literal + "' has entries larger than n");
    return *v;
}

Permutation permutation_arg(const std::string& text, int n) {
    Permutation w;
    try {
        w = parse_permutation(text);
    } catch (const std::invalid_argument& ex) {
        throw ArgumentError("bad permutation '" + text + "': " + ex.what());
    }
    if (w.size() != n) throw ArgumentError("permutation '" + text + "' is not in S_" + std::to_string(n));
    return w;
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw ArgumentError("unsupported --format " + f);
}

Interval<VertexId> interval_arg(const CrystalGraph& g, VertexId u, VertexId v) {
    auto I = extract_interval(g, u, v);
    if (!I) throw ArgumentError("u is not below v");
    return *I;
}

std::string labels_string(const std::vector<int>& labels) {
    std::string s;
    for (std::size_t k = 0; k < labels.size(); ++k) s += (k ? "," : "") + std::to_string(labels[k]);
    return "(" + s + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"type-A crystal posets: generation, Moebius values, keys, fibers, verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CrystalArgs ca;
    std::string u_text, v_text, w_text, input;
    bool components = false;
    std::size_t chain_cap = kDefaultChainCap;

    auto* gen = app.add_subcommand("generate", "build B(lambda) and print it");
    ca.add_to(gen, false);
    gen->add_option("--format", ca.format, "text, json or dot")->capture_default_str();

    auto* mob = app.add_subcommand("mobius", "Moebius value mu(u, v)");
    ca.add_to(mob);
    mob->add_option("--u", u_text, "lower tableau (default: minimum)");
    mob->add_option("--v", v_text, "upper tableau (default: maximum)");

    auto* itv = app.add_subcommand("interval", "extract the interval [u, v]");
    ca.add_to(itv);
    itv->add_option("--u", u_text, "lower tableau (default: minimum)");
    itv->add_option("--v", v_text, "upper tableau (default: maximum)");

    auto* chn = app.add_subcommand("chains", "maximal chains of [u, v]");
    ca.add_to(chn);
    chn->add_option("--u", u_text, "lower tableau (default: minimum)");
    chn->add_option("--v", v_text, "upper tableau (default: maximum)");
    chn->add_flag("--components", components, "group chains by Stembridge moves");
    chn->add_option("--chain-cap", chain_cap, "chain cap")->capture_default_str();

    auto* key = app.add_subcommand("keys", "key of every vertex");
    ca.add_to(key);

    auto* fib = app.add_subcommand("fiber", "fiber of the key map at w");
    ca.add_to(fib);
    fib->add_option("--w", w_text, "permutation, e.g. 2413")->required();

    auto* dem = app.add_subcommand("demazure", "vertices whose key is <= w in strong Bruhat order");
    ca.add_to(dem);
    dem->add_option("--w", w_text, "permutation")->required();

    scenarios::SuiteOptions suite;
    std::string verify_format = "text";
    bool timings = false;
    auto* ver = app.add_subcommand("verify", "run the scenario certificates");
    ver->add_option("--scenario", suite.only, "run one scenario, e.g. s3");
    ver->add_option("--n-max", suite.n_max, "largest n for s2")->capture_default_str()->check(CLI::Range(3, 6));
    ver->add_flag("--allow-n6", suite.allow_n6, "permit --n-max 6");
    ver->add_option("--jobs", suite.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1, 64));
    ver->add_option("--format", verify_format, "text or json")->capture_default_str();
    ver->add_flag("--timings", timings, "include runtimes");

    auto* axi = app.add_subcommand("axioms", "check P1-P6 on a generated or imported crystal");
    axi->add_option("--input", input, "crystal JSON file");
    axi->add_option("--shape", ca.shape, "partition");
    axi->add_option("--n", ca.n, "alphabet size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            check_format(ca.format, {"text", "json", "dot"});
            const auto g = ca.build();
            if (ca.format == "json")
                std::cout << io::crystal_to_json(g).dump() << "\n";
            else if (ca.format == "dot")
                std::cout << io::crystal_to_dot(g);
            else {
                std::cout << "B((" << ca.shape << ")," << ca.n << "): " << g.size() << " vertices, " << g.edges().size()
                          << " edges, rank " << g.max_rank() << "\n";
                for (VertexId v = 0; v < g.size(); ++v)
                    std::cout << v << "\t" << g.rank(v) << "\t" << to_string(g.tableau(v)) << "\n";
            }
            return 0;
        }
        if (*mob) {
            check_format(ca.format, {"text", "json"});
            const auto g = ca.build();
            const auto I = interval_arg(g, select(g, u_text, g.bottom()), select(g, v_text, g.top()));
            const auto mu = mobius_from_bottom(I).back();
            if (ca.format == "json") {
                json j{{"mobius", mu}, {"vertices", I.size()}, {"rank", I.span()}};
                if (I.size() > 1) j["euler_mobius"] = euler_mobius(I);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << mu << "\n";
            }
            return 0;
        }
        if (*itv) {
            check_format(ca.format, {"text", "json"});
            const auto g = ca.build();
            const auto I = interval_arg(g, select(g, u_text, g.bottom()), select(g, v_text, g.top()));
            if (ca.format == "json") {
                std::cout << io::interval_to_json(g, I).dump() << "\n";
            } else {
                std::cout << I.size() << " vertices, " << I.edges().size() << " edges, rank " << I.span() << "\n";
                for (LocalId k = 0; k < I.size(); ++k)
                    std::cout << k << "\t" << I.rank(k) << "\t" << to_string(g.tableau(I.vertex(k))) << "\n";
            }
            return 0;
        }
        if (*chn) {
            check_format(ca.format, {"text", "json"});
            const auto g = ca.build();
            const auto I = interval_arg(g, select(g, u_text, g.bottom()), select(g, v_text, g.top()));
            if (components) {
                const auto c = stembridge_components(I, chain_cap);
                if (ca.format == "json") {
                    std::cout << io::components_to_json(c).dump() << "\n";
                } else {
                    std::cout << c.chains.size() << " chains, " << c.components.size() << " components\n";
                    for (const auto& comp : c.components)
                        std::cout << comp.size() << "\t" << labels_string(c.chains[comp.front()].labels) << "\n";
                }
            } else {
                const auto chains = saturated_chains(I, chain_cap);
                if (ca.format == "json") {
                    json arr = json::array();
                    for (const auto& ch : chains) arr.push_back({{"vertices", ch.vertices}, {"labels", ch.labels}});
                    std::cout << arr.dump() << "\n";
                } else {
                    for (const auto& ch : chains) std::cout << labels_string(ch.labels) << "\n";
                }
            }
            return 0;
        }
        if (*key) {
            check_format(ca.format, {"text", "json"});
            const auto g = ca.build();
            if (g.n() > kMaxDegree) throw ArgumentError("keys need n <= " + std::to_string(kMaxDegree));
            const auto keys = compute_keys(g);
            if (ca.format == "json") {
                std::cout << io::keys_to_json(keys).dump() << "\n";
            } else {
                for (VertexId v = 0; v < g.size(); ++v)
                    std::cout << v << "\t" << to_string(g.tableau(v)) << "\t" << to_string(keys[v]) << "\n";
            }
            return 0;
        }
        if (*fib) {
            check_format(ca.format, {"text", "json"});
            const auto g = ca.build();
            const auto w = permutation_arg(w_text, g.n());
            const auto f = fiber(g, compute_keys(g), w);
            if (ca.format == "json") {
                std::cout << io::fiber_to_json(g, f).dump() << "\n";
            } else {
                std::cout << f.elements.size() << " elements, " << f.components.size() << " components\n";
                for (std::size_t k = 0; k < f.components.size(); ++k)
                    for (auto v : f.components[k]) std::cout << k << "\t" << v << "\t" << to_string(g.tableau(v)) << "\n";
                for (const auto& e : f.covers)
                    std::cout << to_string(g.tableau(e.source)) << " -> " << to_string(g.tableau(e.target)) << " ["
                              << e.color << "]\n";
            }
            return 0;
        }
        if (*dem) {
            check_format(ca.format, {"text", "json"});
            const auto g = ca.build();
            const auto w = permutation_arg(w_text, g.n());
            const auto d = demazure(g, compute_keys(g), w);
            if (ca.format == "json") {
                std::cout << json{{"w", to_string(w)}, {"vertices", d}}.dump() << "\n";
            } else {
                std::cout << d.size() << " vertices\n";
                for (auto v : d) std::cout << v << "\t" << to_string(g.tableau(v)) << "\n";
            }
            return 0;
        }
        if (*ver) {
            check_format(verify_format, {"text", "json"});
            const auto certs = scenarios::run_suite(suite);
            bool all = true;
            for (const auto& c : certs) {
                all = all && c.pass();
                if (verify_format == "json") {
                    std::cout << scenarios::to_json(c, timings).dump() << "\n";
                } else {
                    std::cout << (c.pass() ? "PASS " : "FAIL ") << c.id << "  " << c.claim;
                    if (timings) std::cout << "  (" << c.seconds << " s)";
                    std::cout << "\n";
                    if (!c.error.empty()) std::cout << "    error: " << c.error << "\n";
                    for (const auto& k : c.checks)
                        if (!k.pass())
                            std::cout << "    " << k.name << ": expected " << k.expected.dump() << ", got "
                                      << k.computed.dump() << "\n";
                }
            }
            return all ? 0 : 1;
        }
        if (*axi) {
            CrystalData data;
            if (!input.empty()) {
                std::ifstream in(input);
                if (!in) throw ArgumentError("cannot read " + input);
                std::stringstream buf;
                buf << in.rdbuf();
                try {
                    data = io::crystal_from_string(buf.str());
                } catch (const io::json::exception& ex) {
                    throw ArgumentError(std::string("bad crystal JSON: ") + ex.what());
                }
            } else {
                if (ca.shape.empty() || ca.n == 0) throw ArgumentError("axioms needs --input or --shape and --n");
                data = ca.build().to_data();
            }
            const auto report = check_stembridge_axioms(data);
            if (report.passed) {
                std::cout << "pass\n";
                return 0;
            }
            const auto& v = *report.violation;
            std::cout << "fail " << v.axiom << " at vertex " << v.vertex << " (i=" << v.i << ", j=" << v.j
                      << "): " << v.detail << "\n";
            return 1;
        }
    } catch (const InvariantViolation& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const CapExceeded& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
