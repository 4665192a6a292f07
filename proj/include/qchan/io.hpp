#pragma once

#include <string>

#include "qchan/channels.hpp"

namespace qchan {

// Channel JSON:
//   {"kind":"kraus","dim":n,"operators":[[[ [re,im], ... ] row ...] ...]}
//   {"kind":"pauli","weights":[b0,b1,b2,b3]}
//   {"kind":"depolarizing","dim":n,"lambda":x}
//   {"kind":"bloch","lambda":[l1,l2,l3],"t":[t1,t2,t3]}
//   {"kind":"coarse_graining","dim":n}
KrausChannel parse_channel_json(const std::string& text);
KrausChannel load_channel_file(const std::string& path);

// Kind tag of a channel file, for family-specific cross-checks.
std::string channel_kind(const std::string& text);

// Fixed float formatting for CSV output: 17 significant digits.
std::string format_double(double x);

}  // namespace qchan
