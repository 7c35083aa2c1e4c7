#include <iostream>

#include "acceptance_suite.h"

int main() {
    const auto results = acceptance::run_all();
    std::cout << acceptance::format_report(results);
    for (const auto& r : results)
        if (!r.passed) return 1;
    return 0;
}
