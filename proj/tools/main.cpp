#include "liftform/cli.hpp"

int main(int argc, char** argv) { return liftform::cli::run(argc, argv); }
