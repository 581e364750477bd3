// Writes the document fixtures the CLI integration checks run against.
#include <cstdio>
#include <string>

#include "gdesc/catalog.hpp"
#include "gdesc/descent_data.hpp"
#include "gdesc/document.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: gdesc_mkfixtures DIR\n");
    return 1;
  }
  const std::string dir = argv[1];
  using namespace gdesc;

  write_file(dir + "/terminal.json", serialize(wrap(terminal_groupoid())));
  write_file(dir + "/bz3.json",
             serialize(wrap(as_one_object_groupoid(z3()))));
  {
    // corrupt one composition entry of B(Z/3)
    FiniteGroupoid g = as_one_object_groupoid(z3());
    g.set_comp(1, 1, 1);
    write_file(dir + "/bz3_corrupt.json", serialize(wrap(std::move(g))));
  }
  write_file(dir + "/z2.json", serialize(wrap(z2())));
  write_file(dir + "/z3.json", serialize(wrap(z3())));
  {
    const GaloisDescentDatum d = action_to_descent(
        ba_strict_action(inversion_action(z2(), z3(), {0, 1})));
    write_file(dir + "/inv3_datum.json", serialize(wrap(d)));
    write_file(dir + "/inv3_datum_bad.json",
               serialize(wrap(perturb_psi(d, 1, 1, 0, 1))));
  }
  {
    const std::string text = read_file(dir + "/terminal.json");
    write_file(dir + "/truncated.json",
               text.substr(0, text.size() / 2));
  }
  return 0;
}
