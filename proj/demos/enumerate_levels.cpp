// Builds a few levels for p(2,1) and prints each level's survivors next to
// the automaton count.
#include <iostream>

#include "patternforge/patternforge.hpp"

int main(int argc, char** argv) {
    namespace pf = patternforge;
    const int j = argc > 1 ? std::atoi(argv[1]) : 2;
    const int i = argc > 2 ? std::atoi(argv[2]) : 1;
    const int levels = argc > 3 ? std::atoi(argv[3]) : 5;

    const pf::Pattern p(j, i);
    const pf::RunResult run = pf::run_levels(p, levels, {.threads = 0, .cancel_nodes = false, .strict = false});
    for (const pf::LevelCensus& level : run.levels) {
        const auto survivors = level.survivors();
        std::cout << "level " << level.level << ": " << level.nodes.size() << " nodes, " << survivors.size()
                  << " survivors, oracle " << pf::level_count(p, level.level) << '\n';
        if (survivors.size() <= 8)
            for (const auto& w : survivors) std::cout << "  " << (w.word.empty() ? "(empty)" : w.word) << '\n';
    }
}
