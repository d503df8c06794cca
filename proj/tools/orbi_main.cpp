#include <iostream>

#include "orbi/orbi.hpp"

int main() {
    std::cout << "{}" << std::endl;
    return 0;
}
