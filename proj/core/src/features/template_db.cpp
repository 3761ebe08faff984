#include "rfv/features/template_db.hpp"

#include <cstring>
#include <fstream>

#include <json.hpp>

#include "rfv/errors.hpp"
#include "rfv/geometry/io.hpp"

namespace rfv::features {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kDescMagic[4] = {'X', 'V', 'D', 'S'};
constexpr std::uint32_t kDescVersion = 1;

void put_u32_le(std::vector<std::uint8_t>& buf, std::uint32_t v) {
    buf.push_back(static_cast<std::uint8_t>(v & 0xff));
    buf.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    buf.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    buf.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

std::uint32_t get_u32_le(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

json load_json(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw IoError("cannot open " + p.string());
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw ParseError(p.string() + ": " + e.what());
    }
}

std::array<double, 16> to_array16(const json& j) {
    if (!j.is_array() || j.size() != 16) throw ParseError("expected 16-element matrix");
    std::array<double, 16> m{};
    for (std::size_t i = 0; i < 16; ++i) m[i] = j[i].get<double>();
    return m;
}

json from_array16(const std::array<double, 16>& m) {
    json j = json::array();
    for (double v : m) j.push_back(v);
    return j;
}

}  // namespace

void write_descriptor_cache(const std::vector<Descriptor>& descriptors, const fs::path& path) {
    std::vector<std::uint8_t> buf;
    buf.reserve(16 + descriptors.size() * 64 * 4);
    buf.insert(buf.end(), kDescMagic, kDescMagic + 4);
    put_u32_le(buf, kDescVersion);
    put_u32_le(buf, static_cast<std::uint32_t>(descriptors.size()));
    put_u32_le(buf, 64);
    for (const auto& d : descriptors) {
        for (float v : d.values) {
            std::uint32_t bits;
            std::memcpy(&bits, &v, 4);
            put_u32_le(buf, bits);
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!out) throw IoError("failed writing " + path.string());
}

std::vector<Descriptor> read_descriptor_cache(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
    if (buf.size() < 16) throw Truncated("descriptor cache shorter than header");
    if (std::memcmp(buf.data(), kDescMagic, 4) != 0) throw BadMagic("bad descriptor cache magic");
    if (get_u32_le(buf.data() + 4) != kDescVersion)
        throw UnsupportedVersion("descriptor cache version");
    const std::uint32_t count = get_u32_le(buf.data() + 8);
    const std::uint32_t dim = get_u32_le(buf.data() + 12);
    if (dim != 64) throw ParseError("descriptor cache dim must be 64");
    if (buf.size() != 16 + static_cast<std::size_t>(count) * dim * 4)
        throw Truncated("descriptor cache length mismatch");

    std::vector<Descriptor> out(count);
    const std::uint8_t* p = buf.data() + 16;
    for (std::uint32_t i = 0; i < count; ++i) {
        for (std::uint32_t k = 0; k < dim; ++k, p += 4) {
            const std::uint32_t bits = get_u32_le(p);
            float v;
            std::memcpy(&v, &bits, 4);
            out[i].values[k] = v;
        }
    }
    return out;
}

std::optional<IdentifyResult> identify(const std::vector<Descriptor>& scene_descriptors,
                                       const TemplateDb& db, const IdentifyParams& params) {
    if (db.objects.empty()) throw EmptyDatabase();

    std::optional<IdentifyResult> best;
    for (std::size_t oi = 0; oi < db.objects.size(); ++oi) {
        const auto& obj = db.objects[oi];
        for (std::size_t ti = 0; ti < obj.images.size(); ++ti) {
            auto matches =
                match_descriptors(scene_descriptors, obj.images[ti].descriptors, params.ratio);
            if (matches.empty()) continue;
            double mean = 0.0;
            for (const auto& m : matches) mean += m.distance;
            mean /= static_cast<double>(matches.size());

            const bool wins =
                !best || matches.size() > best->matches.size() ||
                (matches.size() == best->matches.size() && mean < best->mean_distance);
            if (wins) {
                best = IdentifyResult{obj.object_id, static_cast<int>(oi), static_cast<int>(ti),
                                      std::move(matches), mean};
            }
        }
    }
    if (!best || static_cast<int>(best->matches.size()) < params.min_matches) return std::nullopt;
    return best;
}

std::optional<IdentifyResult> identify(const geometry::GrayImage& scene_img,
                                       const TemplateDb& db, const IdentifyParams& params) {
    const IntegralImage ii(scene_img);
    auto kps = detect_keypoints(ii, params.detector);
    std::vector<Keypoint> kept;
    std::vector<Descriptor> descs;
    describe_all(ii, kps, &kept, &descs);
    return identify(descs, db, params);
}

TemplateDb load_template_db(const fs::path& root, const DetectorParams& detector) {
    const json manifest = load_json(root / "db_manifest.json");
    TemplateDb db;
    db.depth_scale = manifest.value("depth_scale", 1e-4);
    const auto& k = manifest.at("intrinsics");
    db.intrinsics = {k.at("fx").get<double>(), k.at("fy").get<double>(),
                     k.at("cx").get<double>(), k.at("cy").get<double>(),
                     k.at("width").get<int>(), k.at("height").get<int>()};

    for (const auto& id : manifest.at("objects")) {
        const fs::path dir = root / id.get<std::string>();
        const json om = load_json(dir / "manifest.json");
        TemplateObject obj;
        obj.object_id = om.at("object_id").get<std::string>();
        obj.symmetry = om.value("symmetry", "none");
        obj.model_ref = om.value("model_ref", "");
        if (!obj.model_ref.empty() && fs::exists(dir / obj.model_ref))
            obj.model_cloud = geometry::read_ply(dir / obj.model_ref);

        for (const auto& b : om.value("epc_bindings", json::array())) {
            obj.epc_bindings.push_back(
                {rfid::Epc96::from_hex(b.at("epc").get<std::string>()),
                 b.at("role").get<std::string>()});
        }

        for (const auto& t : om.at("template_images")) {
            TemplateImageEntry entry;
            entry.name = t.at("image").get<std::string>();
            entry.image = geometry::read_pgm_gray(dir / entry.name);
            const fs::path desc_path = dir / t.value("descriptors", entry.name + ".desc");
            if (fs::exists(desc_path)) {
                entry.descriptors = read_descriptor_cache(desc_path);
            } else {
                const IntegralImage ii(entry.image);
                auto kps = detect_keypoints(ii, detector);
                describe_all(ii, kps, &entry.keypoints, &entry.descriptors);
            }
            obj.images.push_back(std::move(entry));
        }

        for (const auto& v : om.at("viewpoint_clouds")) {
            ViewpointEntry entry;
            entry.name = v.at("cloud").get<std::string>();
            entry.cloud = geometry::read_ply(dir / entry.name);
            entry.capture_pose =
                geometry::RigidTransform::from_row_major(to_array16(v.at("capture_pose")));
            obj.viewpoints.push_back(std::move(entry));
        }
        db.objects.push_back(std::move(obj));
    }
    return db;
}

void save_template_db(const TemplateDb& db, const fs::path& root) {
    fs::create_directories(root);
    json manifest;
    manifest["version"] = 1;
    manifest["frame"] = "right-handed: +x right, +y down, +z forward";
    manifest["depth_scale"] = db.depth_scale;
    manifest["intrinsics"] = {{"fx", db.intrinsics.fx}, {"fy", db.intrinsics.fy},
                              {"cx", db.intrinsics.cx}, {"cy", db.intrinsics.cy},
                              {"width", db.intrinsics.width}, {"height", db.intrinsics.height}};
    json ids = json::array();

    for (const auto& obj : db.objects) {
        const fs::path dir = root / obj.object_id;
        fs::create_directories(dir);
        ids.push_back(obj.object_id);

        json om;
        om["object_id"] = obj.object_id;
        om["symmetry"] = obj.symmetry;
        json bindings = json::array();
        for (const auto& b : obj.epc_bindings)
            bindings.push_back({{"epc", b.epc.to_hex()}, {"role", b.role}});
        om["epc_bindings"] = bindings;

        if (obj.model_cloud) {
            const std::string ref = obj.model_ref.empty() ? "model.ply" : obj.model_ref;
            om["model_ref"] = ref;
            geometry::write_ply(*obj.model_cloud, dir / ref);
        }

        json images = json::array();
        for (const auto& t : obj.images) {
            geometry::write_pgm_gray(t.image, dir / t.name);
            const std::string desc_name = t.name + ".desc";
            write_descriptor_cache(t.descriptors, dir / desc_name);
            images.push_back({{"image", t.name}, {"descriptors", desc_name}});
        }
        om["template_images"] = images;

        json clouds = json::array();
        for (const auto& v : obj.viewpoints) {
            geometry::write_ply(v.cloud, dir / v.name);
            clouds.push_back(
                {{"cloud", v.name}, {"capture_pose", from_array16(v.capture_pose.row_major())}});
        }
        om["viewpoint_clouds"] = clouds;

        std::ofstream out(dir / "manifest.json");
        if (!out) throw IoError("cannot write object manifest for " + obj.object_id);
        out << om.dump(2) << "\n";
    }

    manifest["objects"] = ids;
    std::ofstream out(root / "db_manifest.json");
    if (!out) throw IoError("cannot write db manifest");
    out << manifest.dump(2) << "\n";
}

}  // namespace rfv::features
