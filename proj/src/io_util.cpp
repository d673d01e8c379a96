#include "vnauq/io_util.hpp"

#include <fstream>
#include <sstream>

namespace vnauq {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Error("failed reading file: " + path.string());
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot open file for writing: " + path.string());
    out << text;
    out.flush();
    if (!out)
        throw Error("failed writing file: " + path.string());
}

} // namespace vnauq
