// spiderlab/cross_check.hpp -- runs a constructive scheme and the
// exhaustive oracle on the same instance and compares their answers.
// Agreement means the scheme's output passed the full verdict and the
// oracle independently confirmed a solution exists.

#pragma once

#include <sstream>
#include <string>

#include "spiderlab/forest.hpp"
#include "spiderlab/oracle.hpp"
#include "spiderlab/scheme_a.hpp"
#include "spiderlab/scheme_b.hpp"
#include "spiderlab/scheme_c.hpp"
#include "spiderlab/sums.hpp"

namespace spiderlab::oracle {

inline CrossCheckResult cross_check(const SpiderForest& forest, Label k, Scheme scheme,
                                    const Options& opts = {}) {
    Labeling constructed;
    switch (scheme) {
        case Scheme::A: constructed = scheme_a::label(forest, k); break;
        case Scheme::B: constructed = scheme_b::label(forest, k); break;
        case Scheme::C: constructed = scheme_c::label(forest, k); break;
    }
    CrossCheckResult out;
    auto verdict = check_antimagic(forest, constructed);
    out.scheme_output_valid = verdict.ok();

    Result ground_truth = brute_force(forest, k, opts);
    out.oracle_feasible = ground_truth.feasible;
    out.agree = out.scheme_output_valid && out.oracle_feasible;

    std::ostringstream os;
    os << "scheme " << scheme_letter(scheme) << " at k = " << k << ": "
       << (out.scheme_output_valid ? "valid labeling" : "INVALID (" + verdict.failure + ")")
       << "; oracle: " << (out.oracle_feasible ? "feasible" : "infeasible") << " after "
       << ground_truth.nodes_examined << " placements";
    out.detail = os.str();
    return out;
}

}  // namespace spiderlab::oracle
