#pragma once

namespace compreco {

/// Worker count for parallel loops: COMPRECO_THREADS when set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
unsigned configured_threads();

}  // namespace compreco
