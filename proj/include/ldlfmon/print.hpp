#pragma once

#include <iosfwd>
#include <string>

#include "ldlfmon/ltlf.hpp"
#include "ldlfmon/terms.hpp"

namespace ldlfmon {

// Printers emit the concrete grammar accepted by the parsers, so that
// parse(to_string(f)) == f for every marker-free, meta-free term. Markers and
// RV atoms print in a readable but non-parseable form.

std::string to_string(Prop p);
std::string to_string(Ldlf f);
std::string to_string(Path p);
std::string to_string(const Ltlf& f);

std::ostream& operator<<(std::ostream& os, Prop p);
std::ostream& operator<<(std::ostream& os, Ldlf f);
std::ostream& operator<<(std::ostream& os, Path p);
std::ostream& operator<<(std::ostream& os, const Ltlf& f);

}  // namespace ldlfmon
