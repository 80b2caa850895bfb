#include "symsperner/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    try {
        return symsperner::run_cli(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return symsperner::exit_code::bad_input;
    }
}
