// Counterexample search over the five bound statements: exhaustive over all
// labeled graphs up to a given order, then seeded random graphs beyond it.
// Prints per-bound violation counts and the first witness of each kind.
//
//   bound_hunt [--exhaustive-max N] [--random-trials T] [--random-max-n N]
//              [--seed S]
//
// The order-7 exhaustive sweep plus a few hundred thousand random trials
// reproduce the violation profile quoted in the README.

#include <cstdio>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "stdom/generators.hpp"
#include "stdom/rng.hpp"
#include "stdom/theorems.hpp"

using namespace stdom;

namespace {

struct Tally {
    long long trials = 0;
    long long violations = 0;
    std::string first;
};

std::map<std::string, Tally> tallies;

void record(const std::string& key, bool violated, const Graph& g, int v) {
    Tally& t = tallies[key];
    ++t.trials;
    if (violated) {
        ++t.violations;
        if (t.first.empty()) t.first = "v=" + std::to_string(v) + "  " + serialize(g);
    }
}

void scan(const Graph& g) {
    const int before = gamma_st_exact(g).value;
    for (int v = 0; v < g.order(); ++v) {
        const int d = g.degree(v);
        if (d >= 1 && g.order() >= 2) {
            const int after = gamma_st_exact(delete_vertex(g, v).graph).value;
            record("t21 lower", after < before - d, g, v);
            record("t21 upper", after > before + d - 1, g, v);
        }
        if (d >= 2) {
            const int after = gamma_st_exact(contract_vertex(g, v).graph).value;
            record("t22 lower", after < before - d + 1, g, v);
            record("t22 upper", after > before + 1, g, v);
        }
        if (d == 1) {
            const int du = g.degree(g.neighbors(v)[0]);
            const int after = gamma_st_exact(contract_vertex(g, v).graph).value;
            record("t23 lower", after < before - 1, g, v);
            record("t23 upper", after > before + du - 1, g, v);
        }
        record("t24 upper",
               gamma_st_exact(odot_vertex(g, v).graph).value > odot_bound_rhs(g, v), g, v);
    }
    if (g.order() >= 3 && is_connected(g)) {
        const auto bc = check_boutrig_chellali(g);
        record("bc", !bc.holds, g, 0);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counterexample search for the bound statements"};
    int exhaustive_max = 6;
    int random_trials = 20000;
    int random_max_n = 10;
    std::uint64_t seed = 555;
    app.add_option("--exhaustive-max", exhaustive_max, "labeled sweep up to this order");
    app.add_option("--random-trials", random_trials, "random graphs after the sweep");
    app.add_option("--random-max-n", random_max_n, "largest random order (8..N)");
    app.add_option("--seed", seed, "random stream seed");
    CLI11_PARSE(app, argc, argv);

    for (int n = 1; n <= exhaustive_max; ++n) {
        for (std::uint64_t mask = 0; mask < labeled_graph_count(n); ++mask)
            scan(labeled_graph(n, mask));
        std::printf("exhaustive order %d done\n", n);
        std::fflush(stdout);
    }
    const int span = std::max(1, random_max_n - 8 + 1);
    for (int i = 0; i < random_trials; ++i) {
        auto rng = substream(seed, static_cast<std::uint64_t>(i));
        const int n = 8 + i % span;
        if (i % 4 == 3) {
            scan(gen_random_tree(n, rng));
        } else {
            scan(gen_gnp(n, 0.15 + 0.08 * (i % 9), rng));
        }
    }
    std::printf("random trials done (%d graphs, orders 8..%d)\n\n", random_trials, random_max_n);

    for (const auto& [key, t] : tallies) {
        std::printf("%-10s %10lld trials  %6lld violations\n", key.c_str(), t.trials,
                    t.violations);
        if (t.violations > 0) std::printf("  first: %s", t.first.c_str());
    }
    return 0;
}
