#ifndef HSA_REPORT_HPP
#define HSA_REPORT_HPP

#include "hsa/linfty.hpp"

namespace hsa {

/// Human-readable report; one line per failure, stable ordering.
std::string report_to_text(const CheckReport& r);

/// Machine-readable report. The layout is stable across runs except for the
/// timing field.
std::string report_to_json(const CheckReport& r, double elapsed_ms);

} // namespace hsa

#endif
