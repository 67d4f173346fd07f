#include <cstdio>
int main() { std::puts("flatstrata: subcommands arrive with the full build"); return 1; }
