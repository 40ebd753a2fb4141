#include "doctest.h"
#include "property_suites.hpp"

TEST_CASE("randomized property suites hold with at least 10^4 cases each") {
    const auto results = qtest::run_property_suites(10000);
    CHECK(results.size() >= 20);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.first_failure);
        CHECK(r.cases >= 10000);
        CHECK(r.failures == 0);
    }
}
