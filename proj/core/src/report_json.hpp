#pragma once

#include <json.hpp>

#include "nihoperm/spectra.hpp"

namespace nihoperm::detail {

nlohmann::ordered_json report_object(const spectra::VerificationReport& r, bool with_timing);
double elapsed_ms(const spectra::VerificationReport& r, bool with_timing);

}  // namespace nihoperm::detail
