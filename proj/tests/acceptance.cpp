// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include "superhom/replicate.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    std::string only = argc > 1 ? argv[1] : "";
    auto results = superhom::replicate_suite(only);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s criterion %2d: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
        std::printf("    expected: %s\n    computed: %s\n", r.expected.c_str(), r.computed.c_str());
        failed += !r.pass;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - static_cast<std::size_t>(failed), results.size());
    return failed ? 1 : 0;
}
