#pragma once

namespace revwit {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 internal construction failure.
int run_cli(int argc, char** argv);

}  // namespace revwit
