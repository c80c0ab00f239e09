#include <cstring>
#include <iostream>

#include "ruled/selftest.hpp"

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
    return ruled::run_acceptance(std::cout, quick) == 0 ? 0 : 1;
}
