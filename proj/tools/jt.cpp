#include <iostream>

#include "jtsnf/theorems.hpp"

int main() {
    std::cout << "jt: not wired up yet\n";
    return 2;
}
