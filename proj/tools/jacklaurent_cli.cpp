#include <iostream>
#include "jacklaurent/cms_ops.hpp"
int main() { std::cout << "stub\n"; return 0; }
