#include "stackchow/input.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace stackchow {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& message) {
    throw std::invalid_argument("input: " + message);
}

long long checked_integer(const json& value, const std::string& what) {
    if (!value.is_number_integer()) fail(what);
    return value.get<long long>();
}

int nonnegative_int(const json& value, const std::string& field) {
    const std::string what = field + " must be a non-negative integer";
    const long long v = checked_integer(value, what);
    if (v < 0 || v > std::numeric_limits<int>::max()) fail(what);
    return static_cast<int>(v);
}

// Array of integer arrays; rows may have differing lengths here, shape
// checks happen per field.
std::vector<std::vector<mpz_class>> integer_rows(const json& value, const std::string& plural,
                                                 const std::string& row_name) {
    if (!value.is_array()) fail(plural + " must be an array of integer arrays");
    std::vector<std::vector<mpz_class>> rows;
    for (size_t i = 0; i < value.size(); ++i) {
        const std::string what = row_name + " " + std::to_string(i) +
                                 " must be an array of integers";
        if (!value[i].is_array()) fail(what);
        std::vector<mpz_class> row;
        for (const json& entry : value[i])
            row.push_back(mpz_class(static_cast<long>(checked_integer(entry, what))));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ConeSet> cone_sets(const json& value) {
    if (!value.is_array()) fail("max_cones must be an array of index arrays");
    std::vector<ConeSet> cones;
    for (size_t i = 0; i < value.size(); ++i) {
        const std::string what = "max_cone " + std::to_string(i) +
                                 " must be an array of integers";
        if (!value[i].is_array()) fail(what);
        ConeSet cone;
        for (const json& entry : value[i]) {
            const long long v = checked_integer(entry, what);
            if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
                fail("max_cone " + std::to_string(i) + " has an out-of-range index");
            cone.push_back(static_cast<int>(v));
        }
        cones.push_back(std::move(cone));
    }
    return cones;
}

void reject_unknown(const json& object, const std::vector<std::string>& known,
                    const std::string& where) {
    for (auto it = object.begin(); it != object.end(); ++it) {
        bool ok = false;
        for (const std::string& k : known) ok = ok || it.key() == k;
        if (!ok) fail(where + "unknown field '" + it.key() + "'");
    }
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("document must be a JSON object");

    reject_unknown(doc, {"lattice_rank", "rays", "max_cones", "target", "lift", "mode"}, "");
    for (const char* field : {"lattice_rank", "rays", "max_cones", "target", "lift"})
        if (!doc.contains(field)) fail(std::string("missing field '") + field + "'");

    InputDocument out;

    if (doc.contains("mode")) {
        const json& mode = doc["mode"];
        if (!mode.is_string() || (mode != "stacky" && mode != "fantastack"))
            fail("mode must be \"stacky\" or \"fantastack\"");
        out.fantastack = mode == "fantastack";
    }

    out.lattice_rank = nonnegative_int(doc["lattice_rank"], "lattice_rank");
    out.rays = integer_rows(doc["rays"], "rays", "ray");
    out.max_cones = cone_sets(doc["max_cones"]);

    const json& target = doc["target"];
    if (!target.is_object()) fail("target must be an object");
    reject_unknown(target, {"rank", "torsion"}, "target has ");
    for (const char* field : {"rank", "torsion"})
        if (!target.contains(field)) fail(std::string("target is missing field '") + field + "'");
    const int rank = nonnegative_int(target["rank"], "target.rank");
    const json& torsion_json = target["torsion"];
    const std::string torsion_what = "target.torsion must be an array of integers >= 2";
    if (!torsion_json.is_array()) fail(torsion_what);
    std::vector<mpz_class> torsion;
    for (const json& entry : torsion_json) {
        const long long a = checked_integer(entry, torsion_what);
        if (a < 2) fail(torsion_what);
        torsion.push_back(mpz_class(static_cast<long>(a)));
    }
    if (out.fantastack && !torsion.empty()) fail("fantastack mode requires empty target torsion");
    out.target = FgAbelianGroup(rank, torsion);

    const auto lift_rows = integer_rows(doc["lift"], "lift", "lift row");
    const size_t expected = static_cast<size_t>(rank) + torsion.size();
    if (lift_rows.size() != expected)
        fail("lift has " + std::to_string(lift_rows.size()) + " rows, expected " +
             std::to_string(expected));
    for (size_t i = 0; i < lift_rows.size(); ++i)
        if (lift_rows[i].size() != static_cast<size_t>(out.lattice_rank))
            fail("lift row " + std::to_string(i) + " has length " +
                 std::to_string(lift_rows[i].size()) + ", expected " +
                 std::to_string(out.lattice_rank));
    out.lift = IntMatrix(static_cast<int>(expected), out.lattice_rank);
    for (size_t i = 0; i < lift_rows.size(); ++i)
        for (size_t j = 0; j < lift_rows[i].size(); ++j)
            out.lift.at(static_cast<int>(i), static_cast<int>(j)) = lift_rows[i][j];

    return out;
}

InputDocument load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input(buffer.str());
}

StackyFan document_stacky_fan(const InputDocument& doc, bool check_fan) {
    if (doc.fantastack) {
        Fan target_fan(doc.target.rank, doc.rays, doc.max_cones);
        std::vector<std::vector<mpz_class>> images(doc.lift.cols());
        for (int j = 0; j < doc.lift.cols(); ++j)
            for (int i = 0; i < doc.lift.rows(); ++i) images[j].push_back(doc.lift.at(i, j));
        return fantastack_stacky_fan(target_fan, images, check_fan);
    }
    Fan fan(doc.lattice_rank, doc.rays, doc.max_cones);
    return StackyFan(std::move(fan), doc.target, doc.lift);
}

std::string example_json(const std::string& name) {
    ordered_json doc;
    if (name == "p64") {
        doc["lattice_rank"] = 2;
        doc["rays"] = {{1, 0}, {0, 1}};
        doc["max_cones"] = {{0}, {1}};
        doc["target"] = {{"rank", 1}, {"torsion", {2}}};
        doc["lift"] = {{2, -3}, {1, -1}};
    } else if (name == "blowupA3") {
        doc["lattice_rank"] = 3;
        doc["rays"] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
        doc["max_cones"] = {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}};
        doc["target"] = {{"rank", 2}, {"torsion", {2}}};
        doc["lift"] = {{3, -1, 0}, {4, 0, -1}, {0, -1, 1}};
    } else if (name == "bg") {
        doc["lattice_rank"] = 0;
        doc["rays"] = ordered_json::array();
        doc["max_cones"] = ordered_json::array({ordered_json::array()});
        doc["target"] = {{"rank", 2}, {"torsion", {2, 3}}};
        doc["lift"] = ordered_json::array({ordered_json::array(), ordered_json::array(),
                                           ordered_json::array(), ordered_json::array()});
    } else if (name == "fanta") {
        doc["lattice_rank"] = 3;
        doc["rays"] = {{1, 0}, {0, 1}};
        doc["max_cones"] = {{0, 1}};
        doc["target"] = {{"rank", 2}, {"torsion", ordered_json::array()}};
        doc["lift"] = {{2, 0, 4}, {0, 3, 2}};
        doc["mode"] = "fantastack";
    } else {
        throw std::invalid_argument("examples: unknown name '" + name +
                                    "' (p64, blowupA3, bg, fanta)");
    }
    return doc.dump(2) + "\n";
}

InputDocument example_document(const std::string& name) {
    return parse_input(example_json(name));
}

}  // namespace stackchow
