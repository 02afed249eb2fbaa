#pragma once

namespace qhom {

// Parses arguments, dispatches to verify / homology / algebra and writes the
// requested artifacts. Returns the process exit code: 0 on success, 1 when a
// verification check fails, 2 for configuration or usage errors.
int qhom_main(int argc, char** argv);

}  // namespace qhom
