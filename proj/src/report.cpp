#include "oct/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace oct {

namespace {

std::vector<int> to_file_ids(const VertexSet& s) {
    std::vector<int> out = s.to_vector();
    for (int& v : out) ++v;
    return out;
}

}  // namespace

SolveReport make_report(const Instance& instance, const Solution& solution,
                        const SolveStats& stats) {
    SolveReport r;
    r.weight = solution.weight;
    r.vertices = to_file_ids(solution.vertices);
    r.left = to_file_ids(solution.certificate.left & solution.vertices);
    r.right = to_file_ids(solution.certificate.right & solution.vertices);
    r.deleted = to_file_ids(instance.graph.vertices() - solution.vertices);
    for (const VertexSet& part : solution.parts) r.parts.push_back(to_file_ids(part));
    r.flags.push_back(stats.certified ? "p5free-certified" : "unverified-class");
    r.stats = stats;
    return r;
}

std::string report_to_json(const SolveReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = report.schema;
    j["weight"] = report.weight.str();
    j["vertices"] = report.vertices;
    j["left"] = report.left;
    j["right"] = report.right;
    j["deleted"] = report.deleted;
    j["parts"] = report.parts;
    j["flags"] = report.flags;
    j["stats"] = {{"family_raw", report.stats.family_raw},
                  {"family_dedup", report.stats.family_dedup},
                  {"blob_vertices", report.stats.blob_vertices},
                  {"blob_edges", report.stats.blob_edges},
                  {"mwis_calls", report.stats.mwis_calls},
                  {"wall_ms", 0}};
    return j.dump(2) + "\n";
}

std::string report_to_human(const SolveReport& report) {
    std::ostringstream out;
    auto list = [&](const std::vector<int>& xs) {
        if (xs.empty()) {
            out << "(none)";
            return;
        }
        for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? " " : "") << xs[i];
    };
    out << "weight   " << report.weight.str() << "\n";
    out << "kept     ";
    list(report.vertices);
    out << "\nleft     ";
    list(report.left);
    out << "\nright    ";
    list(report.right);
    out << "\ndeleted  ";
    list(report.deleted);
    out << "\nparts    " << report.parts.size();
    out << "\nflags    ";
    for (std::size_t i = 0; i < report.flags.size(); ++i)
        out << (i ? " " : "") << report.flags[i];
    out << "\nstats    family " << report.stats.family_raw << " raw / "
        << report.stats.family_dedup << " deduped, blob " << report.stats.blob_vertices
        << "v/" << report.stats.blob_edges << "e, " << report.stats.mwis_calls
        << " mwis calls, " << report.stats.wall_ms << " ms\n";
    return out.str();
}

namespace {

VerifyResult fail(const std::string& what) { return VerifyResult{false, what}; }

bool read_id_list(const nlohmann::json& j, const char* key, int n, std::vector<int>& out,
                  std::string& err) {
    if (!j.contains(key) || !j[key].is_array()) {
        err = std::string(key) + " list missing";
        return false;
    }
    out.clear();
    for (const auto& item : j[key]) {
        if (!item.is_number_integer()) {
            err = std::string(key) + " list malformed";
            return false;
        }
        int v = item.get<int>();
        if (v < 1 || v > n) {
            err = std::string(key) + " list has id out of range";
            return false;
        }
        out.push_back(v);
    }
    if (!std::is_sorted(out.begin(), out.end()) ||
        std::adjacent_find(out.begin(), out.end()) != out.end()) {
        err = std::string(key) + " list not sorted ascending";
        return false;
    }
    return true;
}

VertexSet from_file_ids(const std::vector<int>& ids, int n) {
    VertexSet s(n);
    for (int v : ids) s.set(v - 1);
    return s;
}

}  // namespace

VerifyResult verify_report(const Instance& instance, const std::string& report_json) {
    const Graph& g = instance.graph;
    const int n = g.vertex_count();

    nlohmann::json j = nlohmann::json::parse(report_json, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return fail("report is not valid JSON");
    if (!j.contains("schema") || j["schema"] != 1) return fail("unsupported schema");

    std::string err;
    std::vector<int> vertices, left, right, deleted;
    if (!read_id_list(j, "vertices", n, vertices, err)) return fail(err);
    if (!read_id_list(j, "left", n, left, err)) return fail(err);
    if (!read_id_list(j, "right", n, right, err)) return fail(err);
    if (!read_id_list(j, "deleted", n, deleted, err)) return fail(err);

    Rational claimed;
    try {
        claimed = Rational::parse(j.value("weight", std::string()));
    } catch (const std::exception&) {
        return fail("weight string malformed");
    }

    VertexSet kept = from_file_ids(vertices, n);
    VertexSet ls = from_file_ids(left, n);
    VertexSet rs = from_file_ids(right, n);

    for (int v = ls.first(); v != -1; v = ls.next(v))
        if (g.neighbors(v).intersects(ls)) return fail("left set not independent");
    for (int v = rs.first(); v != -1; v = rs.next(v))
        if (g.neighbors(v).intersects(rs)) return fail("right set not independent");
    if (ls.intersects(rs)) return fail("left and right sets intersect");
    if ((ls | rs) != kept) return fail("certificate does not cover the vertex list");

    if (instance.weights.sum(kept) != claimed) return fail("weight mismatch");

    if (from_file_ids(deleted, n) != kept.complement()) return fail("deleted set mismatch");

    if (!j.contains("parts") || !j["parts"].is_array()) return fail("parts list missing");
    std::vector<VertexSet> parts;
    VertexSet part_union(n);
    for (const auto& raw : j["parts"]) {
        if (!raw.is_array()) return fail("parts list malformed");
        VertexSet part(n);
        for (const auto& item : raw) {
            if (!item.is_number_integer()) return fail("parts list malformed");
            int v = item.get<int>();
            if (v < 1 || v > n) return fail("parts list has id out of range");
            part.set(v - 1);
        }
        if (part.empty()) return fail("empty part");
        if (part_union.intersects(part)) return fail("parts not disjoint");
        part_union |= part;
        parts.push_back(std::move(part));
    }
    if (part_union != kept) return fail("parts do not cover the vertex list");
    for (std::size_t a = 0; a < parts.size(); ++a) {
        VertexSet reach = g.neighborhood(parts[a], /*closed=*/false);
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            if (reach.intersects(parts[b])) return fail("parts touch");
    }

    return VerifyResult{};
}

}  // namespace oct
