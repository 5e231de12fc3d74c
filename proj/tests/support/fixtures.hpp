#pragma once

#include "chamber/link_model.hpp"

namespace chamber::testing {

/// Chamber bounds 4, 2, 2 over disc counts 4, 2, 4; made of clasps and
/// turn-backs only, so the signed sum is 0.  Same link as
/// tests/data/fig1-mismatch.cld.
inline ChamberLink fig1_mismatch() {
  const Clasp low{ClaspKind::whitehead, SlotPair{0, 1}, SlotPair{0, 1}};
  return ChamberLink({ChamberContent({low, Clasp{ClaspKind::whitehead, SlotPair{2, 3}, SlotPair{2, 3}}}),
                      ChamberContent({low, Turn{Side::bottom, SlotPair{2, 3}}}),
                      ChamberContent({low, Turn{Side::top, SlotPair{2, 3}}})},
                     "fig1_mismatch");
}

}  // namespace chamber::testing
