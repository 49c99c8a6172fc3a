#ifndef SITEADDR_CSV_HPP
#define SITEADDR_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace siteaddr {

// Locale-independent scientific formatting, 13 significant digits. All data
// files go through this so repeated runs are byte-identical.
std::string format_number(double x);

void write_csv_row(std::ostream& out, const std::vector<double>& values);

}  // namespace siteaddr

#endif
