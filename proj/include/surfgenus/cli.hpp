#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace surfgenus {

/// Command-line entry point, without the program name in `args`.
///
///   report <mesh> | genus <mesh> | sum <meshA> <meshB> | remove-ball <mesh> --triangle <i>
///   cap <mesh> | subdivide <mesh> | exhaust --family <name> --steps <n> [--window <w>] [--genus <g>]
///   global: --json, --out <path>
///
/// Returns 0 on success, 2 on parse or validation errors and 1 on internal
/// consistency failures; the error name goes to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace surfgenus
