#include "jdet/io.hpp"

int main(int argc, char** argv) { return jdet::cli_main(argc, argv); }
