#ifndef SUMMA_ACCEPTANCE_HPP
#define SUMMA_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace summa::accept {

struct Row {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Run one acceptance criterion (1..12).
Row run(int id);
/// Run the full suite in order.
std::vector<Row> run_all();

std::string format_row(const Row& r);

}  // namespace summa::accept

#endif
