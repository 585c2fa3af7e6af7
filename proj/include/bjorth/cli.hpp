#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bjorth/space.hpp"

namespace bjorth::cli {

/// Environment variable naming the directory that relative --out paths
/// are resolved against.
inline constexpr const char* kOutDirEnv = "BJORTH_OUT_DIR";

/// A compact descriptor (`dayjames:3:1.5`) or the path of a JSON descriptor
/// file. Errors: kFileNotFound, kParseError and the validation errors.
NormedSpace load_space(const std::string& spec);

/// Runs one command. args[0] is the program name. Exit codes: 0 success,
/// 1 verification failure (artifacts still written), 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace bjorth::cli
