#include "spec_io.hpp"

#include "dhom/errors.hpp"

#include <filesystem>
#include <fstream>

namespace dhom::cli {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

std::string as_name(const ordered_json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(where, "expected a name");
}

Scalar as_scalar(const ordered_json& v, const std::string& where) {
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (v.is_string()) {
        try {
            Scalar s(v.get<std::string>());
            s.canonicalize();
            return s;
        } catch (const std::invalid_argument&) {
        }
    }
    fail(where, "expected an exact rational such as 1, -2 or \"3/4\"");
}

const ordered_json& field(const ordered_json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

}  // namespace

SpecDoc parse_spec(const ordered_json& doc) {
    if (!doc.is_object()) fail("/", "expected an object");
    SpecDoc out;
    AlgebraSpec& s = out.spec;
    if (auto it = doc.find("field"); it != doc.end() && (*it) != "Q") fail("/field", "only \"Q\" is supported");
    if (auto it = doc.find("name"); it != doc.end()) s.name = as_name(*it, "/name");

    const auto& verts = field(doc, "vertices", "/");
    if (!verts.is_array() || verts.empty()) fail("/vertices", "expected a nonempty array");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::string v = as_name(verts[i], "/vertices/" + std::to_string(i));
        if (s.quiver.vertex_index(v)) fail("/vertices/" + std::to_string(i), "duplicate vertex '" + v + "'");
        s.quiver.vertices.push_back(v);
    }

    if (auto it = doc.find("arrows"); it != doc.end()) {
        if (!it->is_array()) fail("/arrows", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string at = "/arrows/" + std::to_string(i);
            const auto& a = (*it)[i];
            if (!a.is_object()) fail(at, "expected {name, from, to}");
            std::string name = as_name(field(a, "name", at), at + "/name");
            if (s.quiver.arrow_index(name)) fail(at + "/name", "duplicate arrow '" + name + "'");
            auto from = s.quiver.vertex_index(as_name(field(a, "from", at), at + "/from"));
            auto to = s.quiver.vertex_index(as_name(field(a, "to", at), at + "/to"));
            if (!from) fail(at + "/from", "unknown vertex");
            if (!to) fail(at + "/to", "unknown vertex");
            s.quiver.arrows.push_back(Arrow{name, *from, *to});
        }
    }

    if (auto it = doc.find("relations"); it != doc.end()) {
        if (!it->is_array()) fail("/relations", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string rt = "/relations/" + std::to_string(i);
            const auto& rel = (*it)[i];
            if (!rel.is_array() || rel.empty()) fail(rt, "expected a nonempty array of terms");
            Relation r;
            for (std::size_t j = 0; j < rel.size(); ++j) {
                const std::string tt = rt + "/" + std::to_string(j);
                const auto& term = rel[j];
                if (!term.is_object()) fail(tt, "expected {coeff, path}");
                Scalar c = term.contains("coeff") ? as_scalar(term["coeff"], tt + "/coeff") : Scalar(1);
                const auto& path = field(term, "path", tt);
                if (!path.is_array() || path.empty()) fail(tt + "/path", "expected a nonempty list of arrows");
                Path p;
                for (std::size_t k = 0; k < path.size(); ++k) {
                    std::string an = as_name(path[k], tt + "/path/" + std::to_string(k));
                    auto ai = s.quiver.arrow_index(an);
                    if (!ai) fail(tt + "/path/" + std::to_string(k), "unknown arrow '" + an + "'");
                    const Arrow& ar = s.quiver.arrows[static_cast<std::size_t>(*ai)];
                    if (k == 0) {
                        p.start = ar.source;
                    } else if (ar.source != p.end) {
                        fail(tt + "/path/" + std::to_string(k),
                             "arrow '" + an + "' does not start where the previous arrow ends");
                    }
                    p.end = ar.target;
                    p.arrows.push_back(*ai);
                }
                if (!r.empty() && (p.start != r.front().path.start || p.end != r.front().path.end))
                    fail(tt + "/path", "terms of a relation must share start and end vertices");
                r.push_back(RelationTerm{c, p});
            }
            s.relations.push_back(std::move(r));
        }
    }

    const auto& d = field(doc, "d", "/");
    if (!d.is_number_integer() || d.get<long long>() < 1) fail("/d", "expected an integer >= 1");
    s.d = static_cast<int>(d.get<long long>());

    if (auto it = doc.find("F"); it != doc.end()) {
        if (!it->is_array()) fail("/F", "expected an array of module names");
        std::vector<std::string> f;
        for (std::size_t i = 0; i < it->size(); ++i) f.push_back(as_name((*it)[i], "/F/" + std::to_string(i)));
        out.F = std::move(f);
    }
    return out;
}

namespace {

ordered_json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
    try {
        return ordered_json::parse(in);
    } catch (const ordered_json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
    }
}

}  // namespace

SpecDoc load_spec(const std::string& path) {
    ordered_json doc = read_json(path);
    try {
        return parse_spec(doc);
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, path + std::string(e.what()).substr(std::string("ParseError").size()));
    }
}

NameMap load_names(const std::string& path) {
    ordered_json doc = read_json(path);
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, path + ": expected an object signature -> name");
    NameMap out;
    for (const auto& [sig, name] : doc.items()) {
        if (!name.is_string()) throw Error(ErrorKind::ParseError, path + ": /" + sig + ": expected a string");
        out.emplace_back(sig, name.get<std::string>());
    }
    return out;
}

std::optional<std::string> sibling_names(const std::string& spec_path) {
    std::filesystem::path p(spec_path);
    std::filesystem::path n = p.parent_path() / (p.stem().string() + ".names.json");
    if (std::filesystem::exists(n)) return n.string();
    return std::nullopt;
}

}  // namespace dhom::cli
