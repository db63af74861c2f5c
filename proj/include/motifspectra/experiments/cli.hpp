#pragma once

// Command-line front end:
//   generate    sample a graph and write it to a file
//   cluster     spectral clustering of an edge list
//   evaluate    misclustering rate of an estimate against ground truth
//   experiment  run a scenario config
// Exit status: 0 success, 1 invalid arguments or parameters, 2 runtime failure.

namespace motifspectra::experiments {

int cli_main(int argc, const char* const* argv);

}  // namespace motifspectra::experiments
