#include "torifan/cli.hpp"

#include <chrono>
#include <iostream>

int main(int argc, char** argv) {
    const auto start = std::chrono::steady_clock::now();
    const torifan::CommandResult result = torifan::run({argv + 1, argv + argc});
    std::cout << torifan::render(result);
    for (const std::string& d : result.diagnostics)
        std::cerr << d << "\n";
    if (!result.json) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cerr << "elapsed " << ms << " ms\n";
    }
    return torifan::exit_code(result);
}
