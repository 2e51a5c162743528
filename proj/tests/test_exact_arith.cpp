#include <catch2/catch_amalgamated.hpp>
#include "jacklaurent/cms_ops.hpp"
using namespace jacklaurent;
TEST_CASE("smoke") {
    RatFunc a = RatFunc::k() + RatFunc(1);
    REQUIRE((a / a).is_one());
}
