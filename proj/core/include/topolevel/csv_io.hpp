#ifndef TOPOLEVEL_CSV_IO_HPP
#define TOPOLEVEL_CSV_IO_HPP

#include <string>

#include "topolevel/sample.hpp"

namespace topolevel {

// Header x1,...,xd with a trailing y column when responses are present;
// one row per point, 17 significant digits so values round-trip.
std::string sample_to_csv(const LabeledSample& sample);

// Inverse of sample_to_csv.  The y_max bound is not representable in
// the file and comes back absent.  Malformed content raises ParseError
// with the 1-based line number.
LabeledSample sample_from_csv(const std::string& text);

}  // namespace topolevel

#endif
