#pragma once

#include "edisc/tuples.hpp"

#include <string>
#include <vector>

namespace edisc {

/// Quick runs a small sample of every corpus; Full runs the acceptance corpora.
enum class Scale { Quick, Full };

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = true;
    long cases = 0;
    long failures = 0;
    double seconds = 0;
    std::string detail;  // first failure, or a note on the corpus
};

/// Lattice polytopes with at most max_vertices vertices in [0, max_coord]^n, one per translation class.
std::vector<Polytope> small_polytopes(int n, int max_vertices, int max_coord);

/// Tuples with at most three members of at most four points in [0,2]^n, n <= 3: exhaustive in Z^1 and for single members in Z^2, seeded samples elsewhere.
std::vector<Tuple> tuple_corpus(Scale s);

CheckResult check_mixed_volume_tropical(Scale s);
CheckResult check_equivalence_lemma(Scale s);
CheckResult check_univariate_ladder();
CheckResult check_intro_example();
CheckResult check_purity(Scale s);
CheckResult check_essential_structure(Scale s);
CheckResult check_milnor_importance(Scale s);
CheckResult check_cayley_milnor(Scale s);
CheckResult check_degree_coherence(Scale s);
CheckResult check_fiber(Scale s);
CheckResult check_obstructions(Scale s);

std::vector<CheckResult> run_checks(Scale s);

}  // namespace edisc
