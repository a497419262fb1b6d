#pragma once

#include <string>

#include "quatcomm/harness.hpp"

namespace quatcomm {

// JSON reports are single newline-terminated documents with stable field
// names; CSV reports are flat per-trial (or per-tuple) rows. Serialization is
// byte-deterministic for a fixed report.

std::string to_json(const HarnessReport& report);
std::string to_csv(const HarnessReport& report);

std::string to_json(const ClassesReport& report);
std::string to_csv(const ClassesReport& report);

}  // namespace quatcomm
