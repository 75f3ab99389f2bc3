#pragma once

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace cli {

struct Run {
    int code = -1;
    std::string out;
};

inline std::filesystem::path scratch_dir()
{
    static const auto dir = [] {
        auto d = std::filesystem::temp_directory_path() / ("ccm_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

inline std::string slurp(const std::filesystem::path& file)
{
    std::ifstream in(file, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write(const std::filesystem::path& file, const std::string& text)
{
    std::ofstream(file, std::ios::binary) << text;
}

// Runs the ccm binary with `args` (already shell-quoted as needed); stdout is captured.
inline Run run(const std::string& args)
{
    const auto out = scratch_dir() / "stdout";
    const std::string command = std::string("\"") + CCM_CLI + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                                (scratch_dir() / "stderr").string() + "\"";
    const int status = std::system(command.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    return r;
}

} // namespace cli
