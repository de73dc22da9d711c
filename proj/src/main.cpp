#include <cstdio>

int main() {
  std::printf("positroid-lab: command line not implemented yet\n");
  return 2;
}
