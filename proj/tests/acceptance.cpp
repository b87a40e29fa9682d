// Acceptance suite: runs every promised check at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 only when everything
// holds. Pass --quick for the reduced grid.
#include <cstdio>
#include <string_view>

#include "navlab/selftest.hpp"

int main(int argc, char** argv) {
    navlab::selftest::Options opt;
    for (int i = 1; i < argc; ++i)
        if (std::string_view(argv[i]) == "--quick") opt.quick = true;

    bool all = true;
    for (const auto& r : navlab::selftest::run_all(opt)) {
        std::printf("%s criterion %d: %s (%s)\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
