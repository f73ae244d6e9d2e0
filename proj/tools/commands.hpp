#pragma once

#include <filesystem>
#include <string>

#include "scottlab/io/config.hpp"

namespace scottlab::cli {

struct RunContext {
    io::Config config;
    std::filesystem::path out_dir;
    std::uint64_t seed = 12345;
};

// Exit status: 0 success, 1 numeric failure, 2 usage/config error (thrown as
// std::invalid_argument before any output file is created).
int run_tf(RunContext& ctx);
int run_scott(RunContext& ctx);
int run_semiclassics(RunContext& ctx);
int run_verify(RunContext& ctx);
int run_pauli(RunContext& ctx);

}  // namespace scottlab::cli
