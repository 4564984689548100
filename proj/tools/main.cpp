#include "cli.hpp"

int main(int argc, char** argv) { return spiralkit::cli::run(argc, argv); }
