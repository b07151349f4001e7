#include <cstdio>

int main() {
  std::puts("shlab: subcommands not wired up yet");
  return 2;
}
