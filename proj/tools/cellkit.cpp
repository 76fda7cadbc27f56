#include "cellkit/cli.hpp"

int main(int argc, char** argv) { return cellkit::cli::run_main(argc, argv); }
