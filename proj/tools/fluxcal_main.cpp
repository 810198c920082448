// fluxcal_main.cpp — CLI entry point (subcommands filled in as modules land).

#include <cstdio>

int main() {
    std::puts("fluxcal: not wired up yet");
    return 1;
}
