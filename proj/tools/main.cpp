#include <cytoric/cytoric.hpp>
int main() { return 0; }
