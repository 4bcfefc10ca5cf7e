#include "rhombus/cli.hpp"

int main(int argc, char** argv) { return rhombus::run(argc, argv); }
