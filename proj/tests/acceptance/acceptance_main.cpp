#include "orbi/orbi.hpp"
int main() { return 0; }
