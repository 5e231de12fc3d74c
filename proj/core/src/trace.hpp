#pragma once

#include <vector>

#include "chamber/link_model.hpp"

namespace chamber::detail {

// trace_components without the validation pass; the caller has validated.
std::vector<ComponentTrace> trace_valid(const ChamberLink& link);

}  // namespace chamber::detail
