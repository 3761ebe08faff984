#include "rfv/geometry/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rfv/errors.hpp"

namespace rfv::geometry {

namespace {

std::ifstream open_in(const std::filesystem::path& p, std::ios::openmode mode = std::ios::in) {
    std::ifstream f(p, mode);
    if (!f) throw IoError("cannot open " + p.string());
    return f;
}

std::ofstream open_out(const std::filesystem::path& p, std::ios::openmode mode = std::ios::out) {
    std::ofstream f(p, mode);
    if (!f) throw IoError("cannot write " + p.string());
    return f;
}

// Reads the next PGM header token, skipping whitespace and '#' comments.
std::string pnm_token(std::istream& in) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
        } else if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#')
                tok.push_back(static_cast<char>(in.get()));
            return tok;
        }
    }
    throw ParseError("unexpected end of pgm header");
}

struct PgmRaw {
    int width = 0, height = 0, maxval = 0;
    std::vector<std::uint16_t> values;
};

PgmRaw read_pgm_raw(const std::filesystem::path& path) {
    auto in = open_in(path, std::ios::binary);
    const std::string magic = pnm_token(in);
    if (magic != "P2" && magic != "P5") throw ParseError("not a pgm file: " + path.string());
    PgmRaw out;
    out.width = std::stoi(pnm_token(in));
    out.height = std::stoi(pnm_token(in));
    out.maxval = std::stoi(pnm_token(in));
    if (out.width <= 0 || out.height <= 0 || out.maxval <= 0 || out.maxval > 65535)
        throw ParseError("bad pgm dimensions in " + path.string());
    const std::size_t n = static_cast<std::size_t>(out.width) * out.height;
    out.values.resize(n);
    if (magic == "P2") {
        for (std::size_t i = 0; i < n; ++i) out.values[i] = static_cast<std::uint16_t>(std::stoi(pnm_token(in)));
    } else {
        in.get();  // single whitespace after maxval
        if (out.maxval < 256) {
            std::vector<std::uint8_t> buf(n);
            in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
            if (!in) throw ParseError("truncated pgm data in " + path.string());
            for (std::size_t i = 0; i < n; ++i) out.values[i] = buf[i];
        } else {
            std::vector<std::uint8_t> buf(n * 2);
            in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n * 2));
            if (!in) throw ParseError("truncated pgm data in " + path.string());
            for (std::size_t i = 0; i < n; ++i)
                out.values[i] = static_cast<std::uint16_t>((buf[2 * i] << 8) | buf[2 * i + 1]);
        }
    }
    return out;
}

}  // namespace

PointCloud read_ply(const std::filesystem::path& path) {
    auto in = open_in(path);
    std::string line;
    std::getline(in, line);
    if (line != "ply") throw ParseError("not a ply file: " + path.string());

    std::size_t vertex_count = 0;
    bool has_color = false;
    std::vector<std::string> props;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "end_header") break;
        if (word == "format") {
            std::string fmt;
            ls >> fmt;
            if (fmt != "ascii") throw ParseError("only ascii ply supported");
        } else if (word == "element") {
            std::string what;
            ls >> what >> vertex_count;
            if (what != "vertex") throw ParseError("only vertex elements supported");
        } else if (word == "property") {
            std::string type, name;
            ls >> type >> name;
            props.push_back(name);
        }
    }
    if (props.size() >= 6) has_color = true;
    if (props.size() < 3 || props[0] != "x" || props[1] != "y" || props[2] != "z")
        throw ParseError("ply must start with x y z properties");

    PointCloud cloud;
    cloud.points.reserve(vertex_count);
    if (has_color) cloud.colors.reserve(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) {
        if (!std::getline(in, line)) throw ParseError("ply vertex list truncated");
        std::istringstream ls(line);
        double x, y, z;
        if (!(ls >> x >> y >> z)) throw ParseError("bad ply vertex line");
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
            throw ParseError("non-finite ply vertex");
        cloud.points.emplace_back(x, y, z);
        if (has_color) {
            int r, g, b;
            if (!(ls >> r >> g >> b)) throw ParseError("bad ply color");
            cloud.colors.push_back({static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                                    static_cast<std::uint8_t>(b)});
        }
    }
    return cloud;
}

void write_ply(const PointCloud& cloud, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "ply\nformat ascii 1.0\nelement vertex " << cloud.size() << "\n"
        << "property float x\nproperty float y\nproperty float z\n";
    if (cloud.has_colors())
        out << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
    out << "end_header\n";
    out.precision(9);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto& p = cloud.points[i];
        out << p.x() << " " << p.y() << " " << p.z();
        if (cloud.has_colors()) {
            const auto& c = cloud.colors[i];
            out << " " << int(c[0]) << " " << int(c[1]) << " " << int(c[2]);
        }
        out << "\n";
    }
    if (!out) throw IoError("failed writing " + path.string());
}

GrayImage read_pgm_gray(const std::filesystem::path& path) {
    const PgmRaw raw = read_pgm_raw(path);
    GrayImage img(raw.width, raw.height);
    const float inv = 1.0f / static_cast<float>(raw.maxval);
    for (std::size_t i = 0; i < raw.values.size(); ++i) img.pixels[i] = raw.values[i] * inv;
    return img;
}

void write_pgm_gray(const GrayImage& img, const std::filesystem::path& path) {
    auto out = open_out(path, std::ios::binary);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    std::vector<std::uint8_t> buf(img.pixels.size());
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        const float v = std::clamp(img.pixels[i], 0.0f, 1.0f);
        buf[i] = static_cast<std::uint8_t>(std::lround(v * 255.0f));
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

DepthImage read_pgm_depth(const std::filesystem::path& path, double depth_scale) {
    const PgmRaw raw = read_pgm_raw(path);
    DepthImage img(raw.width, raw.height);
    for (std::size_t i = 0; i < raw.values.size(); ++i)
        img.depth[i] = static_cast<float>(raw.values[i] * depth_scale);
    return img;
}

void write_pgm_depth(const DepthImage& img, const std::filesystem::path& path, double depth_scale) {
    auto out = open_out(path, std::ios::binary);
    out << "P5\n" << img.width << " " << img.height << "\n65535\n";
    std::vector<std::uint8_t> buf(img.depth.size() * 2);
    for (std::size_t i = 0; i < img.depth.size(); ++i) {
        const double units = img.depth[i] / depth_scale;
        const auto v = static_cast<std::uint16_t>(std::clamp(std::llround(units), 0ll, 65535ll));
        buf[2 * i] = static_cast<std::uint8_t>(v >> 8);
        buf[2 * i + 1] = static_cast<std::uint8_t>(v & 0xff);
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

DepthMeta read_depth_meta(const std::filesystem::path& json_path) {
    auto in = open_in(json_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad depth sidecar json: ") + e.what());
    }
    DepthMeta meta;
    meta.depth_scale = j.at("depth_scale").get<double>();
    const auto& k = j.at("intrinsics");
    meta.intrinsics.fx = k.at("fx").get<double>();
    meta.intrinsics.fy = k.at("fy").get<double>();
    meta.intrinsics.cx = k.at("cx").get<double>();
    meta.intrinsics.cy = k.at("cy").get<double>();
    meta.intrinsics.width = k.at("width").get<int>();
    meta.intrinsics.height = k.at("height").get<int>();
    return meta;
}

void write_depth_meta(const DepthMeta& meta, const std::filesystem::path& json_path) {
    nlohmann::json j;
    j["depth_scale"] = meta.depth_scale;
    j["intrinsics"] = {{"fx", meta.intrinsics.fx}, {"fy", meta.intrinsics.fy},
                       {"cx", meta.intrinsics.cx}, {"cy", meta.intrinsics.cy},
                       {"width", meta.intrinsics.width}, {"height", meta.intrinsics.height}};
    auto out = open_out(json_path);
    out << j.dump(2) << "\n";
}

}  // namespace rfv::geometry
