// Times the OpenMP scanning kernels against their serial reference
// implementations on identical inputs and verifies that both routes return
// the same answers. Exits nonzero on any disagreement, so it doubles as a
// coarse consistency check.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "preact/axioms.hpp"
#include "preact/globalization.hpp"
#include "preact/oracle.hpp"
#include "preact/parallel.hpp"
#include "preact/recognition.hpp"
#include "preact/reference.hpp"

using namespace preact;

namespace {

struct Sizes {
    std::size_t axiom_len;
    std::size_t language_bound;
    std::size_t expand_depth;
    std::size_t freeness_depth, freeness_bound;
    std::size_t congruence_bound, congruence_suffix;
};

constexpr Sizes kFull{14, 20, 20, 10, 6, 10, 10};
constexpr Sizes kSmoke{6, 10, 10, 5, 3, 6, 6};

PreactionMachine integer_machine() {
    return PreactionMachine::integer_translation(Alphabet("ab"), {{1}, {-1}}, {{0}, {1}});
}

template <class F>
double time_best(int repeat, F&& f) {
    double best = 1e100;
    for (int i = 0; i < repeat; ++i) {
        auto start = std::chrono::steady_clock::now();
        f();
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (elapsed.count() < best) best = elapsed.count();
    }
    return best;
}

bool report_equal(const AxiomReport& a, const AxiomReport& b) {
    if (a.ok != b.ok || a.states_checked != b.states_checked ||
        a.words_checked != b.words_checked || a.splits_checked != b.splits_checked ||
        a.witnesses.size() != b.witnesses.size())
        return false;
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
        const auto& x = a.witnesses[i];
        const auto& y = b.witnesses[i];
        if (x.state != y.state || !(x.u == y.u) || !(x.v == y.v) || x.axiom != y.axiom)
            return false;
    }
    return true;
}

bool partition_equal(const CongruencePartition& a, const CongruencePartition& b) {
    if (a.blocks.size() != b.blocks.size()) return false;
    for (std::size_t i = 0; i < a.blocks.size(); ++i) {
        if (!(a.blocks[i].representative == b.blocks[i].representative)) return false;
        if (a.blocks[i].inside != b.blocks[i].inside) return false;
        if (a.blocks[i].members != b.blocks[i].members) return false;
    }
    return true;
}

struct Row {
    std::string kernel, size;
    double serial, parallel;
    bool agree;
};

void print_row(const Row& r) {
    std::printf("%-16s  %-20s  %9.3fs  %9.3fs  %6.2fx  %s\n", r.kernel.c_str(),
                r.size.c_str(), r.serial, r.parallel,
                r.parallel > 0 ? r.serial / r.parallel : 0.0, r.agree ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"preautomata kernel benchmark"};
    bool smoke = false;
    int repeat = 3;
    app.add_flag("--smoke", smoke, "tiny sizes for use as a test");
    app.add_option("--repeat", repeat, "timed repetitions, best run counts");
    CLI11_PARSE(app, argc, argv);

    const Sizes sizes = smoke ? kSmoke : kFull;
    if (smoke) repeat = 1;

    PreactionMachine z = integer_machine();
    Preacceptor acceptor = make_preacceptor(z, 0, {0, 1});
    LanguageOracle eqblocks = LanguageOracle::equal_blocks(Alphabet("ab"), 'a', 'b');

    std::printf("threads: %d\n", par::worker_count());
    std::printf("%-16s  %-20s  %10s  %10s  %7s  %s\n", "kernel", "size", "serial",
                "parallel", "speedup", "agree");

    std::vector<Row> rows;

    {
        AxiomReport serial, parallel;
        double ts = time_best(repeat, [&] { serial = reference::check_axioms(z, sizes.axiom_len); });
        double tp = time_best(repeat, [&] { parallel = check_axioms(z, sizes.axiom_len); });
        rows.push_back({"axiom-scan", "max-len " + std::to_string(sizes.axiom_len), ts, tp,
                        report_equal(serial, parallel)});
        print_row(rows.back());
    }
    {
        std::vector<Word> serial, parallel;
        double ts = time_best(
            repeat, [&] { serial = reference::language_upto(acceptor, sizes.language_bound); });
        double tp =
            time_best(repeat, [&] { parallel = language_upto(acceptor, sizes.language_bound); });
        rows.push_back({"language-scan", "bound " + std::to_string(sizes.language_bound), ts, tp,
                        serial == parallel});
        print_row(rows.back());
    }
    {
        std::vector<GlobalClass> serial, parallel;
        double ts =
            time_best(repeat, [&] { serial = reference::expand(z, sizes.expand_depth); });
        double tp = time_best(repeat, [&] { parallel = expand(z, sizes.expand_depth); });
        rows.push_back({"class-expansion", "depth " + std::to_string(sizes.expand_depth), ts, tp,
                        serial == parallel});
        print_row(rows.back());
    }
    {
        FreenessReport serial, parallel;
        double ts = time_best(repeat, [&] {
            serial = reference::freeness_probe(z, sizes.freeness_depth, sizes.freeness_bound);
        });
        double tp = time_best(repeat, [&] {
            parallel = freeness_probe(z, sizes.freeness_depth, sizes.freeness_bound);
        });
        bool agree = serial.separating == parallel.separating &&
                     serial.collisions == parallel.collisions;
        rows.push_back({"freeness-probe",
                        "depth " + std::to_string(sizes.freeness_depth) + " bound " +
                            std::to_string(sizes.freeness_bound),
                        ts, tp, agree});
        print_row(rows.back());
    }
    {
        CongruencePartition serial, parallel;
        double ts = time_best(repeat, [&] {
            serial = reference::bounded_right_congruence(eqblocks, sizes.congruence_bound,
                                                         sizes.congruence_suffix);
        });
        double tp = time_best(repeat, [&] {
            parallel = bounded_right_congruence(eqblocks, sizes.congruence_bound,
                                                sizes.congruence_suffix);
        });
        rows.push_back({"congruence",
                        "bound " + std::to_string(sizes.congruence_bound) + " suffix " +
                            std::to_string(sizes.congruence_suffix),
                        ts, tp, partition_equal(serial, parallel)});
        print_row(rows.back());
    }

    for (const Row& r : rows)
        if (!r.agree) {
            std::printf("kernel %s disagrees with the reference\n", r.kernel.c_str());
            return 1;
        }
    return 0;
}
