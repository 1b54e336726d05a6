#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "homveech/noncongruence.hpp"

namespace homveech::cli {

// Ideal literals accepted on the command line (whitespace-insensitive):
//   [n;a+mw]   explicit canonical form ("m" elided when 1)
//   (k)        the principal ideal of the rational integer k
//   P(p,i)     the i-th prime above p, i in {0, 1}; [p;0+w] comes first
IdealHNF parse_ideal_literal(Order order, std::string_view text);  // ParseError

std::string json_report(const IndexReport& r);
std::string csv_header();
std::string csv_row(const IndexReport& r);

// Exit codes: 0 all match/pass, 1 any mismatch, 2 usage or input error,
// 3 bound exceeded or aborted arithmetic.  Diagnostics go to err, data to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homveech::cli
