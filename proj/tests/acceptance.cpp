// Acceptance suite: reruns every published value the engine is pinned to
// and prints one pass/fail line per criterion.
#include <cstdio>

#include "rgt/reproduce.hpp"

int main() {
    const auto rows = rgt::run_acceptance_criteria(/*threads=*/2);
    bool bad = false;
    for (const auto& r : rows) {
        std::printf("%2d %s  %s%s%s%s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.detail.empty() ? "" : "  [",
                    r.detail.c_str(), r.detail.empty() ? "" : "]");
        if (!r.pass) bad = true;
    }
    return bad ? 1 : 0;
}
