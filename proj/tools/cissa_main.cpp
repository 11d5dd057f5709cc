#include "cissa/io.hpp"

int main(int argc, char** argv) {
    return cissa::cli_main(argc, argv);
}
