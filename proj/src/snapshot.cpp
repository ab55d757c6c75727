#include "bsq/snapshot.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bsq {

void write_snapshot(const std::string& path, const SpectralField& f,
                    const std::string& kind) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_snapshot: cannot open " + path);
    nlohmann::json header = {
        {"dim", f.grid.dim},          {"scale", f.grid.scale},
        {"n", f.grid.n},              {"dealias_fraction", f.grid.dealias_fraction},
        {"comps", f.comps},           {"kind", kind},
    };
    os << "BSQF\n" << header.dump() << '\n';
    for (int c = 0; c < f.comps; ++c)
        os.write(reinterpret_cast<const char*>(f.data[c].data()),
                 static_cast<std::streamsize>(f.data[c].size() * sizeof(std::complex<double>)));
    if (!os) throw std::runtime_error("write_snapshot: write failed for " + path);
}

SpectralField read_snapshot(const std::string& path, std::string* kind) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_snapshot: cannot open " + path);
    std::string magic;
    std::getline(is, magic);
    if (magic != "BSQF") throw std::runtime_error("read_snapshot: bad magic in " + path);
    std::string header_line;
    std::getline(is, header_line);
    nlohmann::json header = nlohmann::json::parse(header_line, nullptr, false);
    if (header.is_discarded())
        throw std::runtime_error("read_snapshot: malformed header in " + path);
    GridSpec g;
    g.dim = header.at("dim").get<int>();
    g.scale = header.at("scale").get<double>();
    g.n = header.at("n").get<int>();
    g.dealias_fraction = header.at("dealias_fraction").get<double>();
    g.validate();
    const int comps = header.at("comps").get<int>();
    if (comps < 1 || comps > 4) throw std::runtime_error("read_snapshot: bad comps");
    if (kind) *kind = header.value("kind", "field");
    SpectralField f(g, comps);
    for (int c = 0; c < comps; ++c) {
        is.read(reinterpret_cast<char*>(f.data[c].data()),
                static_cast<std::streamsize>(f.data[c].size() * sizeof(std::complex<double>)));
        if (!is) throw std::runtime_error("read_snapshot: short data in " + path);
    }
    return f;
}

}  // namespace bsq
