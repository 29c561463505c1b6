#include <iostream>

int main() {
  std::cout << "qtom cli placeholder\n";
  return 0;
}
