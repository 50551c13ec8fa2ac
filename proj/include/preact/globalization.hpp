#pragma once

#include <string>
#include <vector>

#include "preact/machine.hpp"
#include "preact/words.hpp"

namespace preact {

/// A state of the globalized total action: an anchor state together with a
/// pending tail, no nonempty prefix of which acts on the anchor. Every pair
/// (state, word) normalizes to exactly one such class, and the classes carry
/// a total action extending the machine's partial one.
struct GlobalClass {
    int anchor;
    Word tail;

    bool operator==(const GlobalClass&) const = default;
    bool operator<(const GlobalClass& rhs) const {
        if (!(tail == rhs.tail)) return tail < rhs.tail;
        return anchor < rhs.anchor;
    }
};

/// Peels the longest prefix of w that acts on the state; the endpoint
/// anchors the remaining tail. One pass suffices: a defined continuation of
/// the tail would extend the peeled prefix.
GlobalClass normalize(const PreactionMachine& machine, int state, const Word& w);

bool is_normal_form(const PreactionMachine& machine, const GlobalClass& c);

/// The embedding of machine states into classes, state -> [state, %e].
GlobalClass embed(const PreactionMachine& machine, int state);

bool classes_equal(const PreactionMachine& machine, int state1, const Word& w1, int state2,
                   const Word& w2);

/// Total action on classes: [x, w] . u = [x, w u], renormalized.
GlobalClass act(const PreactionMachine& machine, const GlobalClass& c, const Word& u);

/// All classes with tail length <= depth, ordered by (tail, anchor). The
/// search prunes below any word that acts: its extensions cannot be tails.
std::vector<GlobalClass> expand(const PreactionMachine& machine, std::size_t depth);

/// Two distinct words driving base to the same class.
struct FreenessCollision {
    GlobalClass base;
    Word first, second;

    bool operator==(const FreenessCollision&) const = default;
};

struct FreenessReport {
    std::size_t depth = 0;
    std::size_t word_bound = 0;
    std::vector<GlobalClass> separating;        // classes all words move apart
    std::vector<FreenessCollision> collisions;  // first collision per other class
};

/// Probes every class of tail length <= depth against all word pairs up to
/// word_bound. A separating class witnesses that the global action embeds
/// the word monoid up to that length.
FreenessReport freeness_probe(const PreactionMachine& machine, std::size_t depth,
                              std::size_t word_bound);

/// "[name|tail]", with "-" standing for the empty tail.
std::string render_class(const PreactionMachine& machine, const GlobalClass& c);

}  // namespace preact
