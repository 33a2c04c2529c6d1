#include "arraycode/spec_json.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace arraycode {

std::string spec_to_json(const ArrayCodeSpec& spec) {
    nlohmann::ordered_json doc;
    doc["q"] = spec.q.value();
    doc["row_labels"] = spec.row_labels;
    doc["col_labels"] = spec.col_labels;
    if (spec.mask) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : *spec.mask) {
            rows.push_back(std::vector<int>(row.begin(), row.end()));
        }
        doc["mask"] = rows;
    }
    return doc.dump(2) + "\n";
}

ArrayCodeSpec spec_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.contains("q") || !doc.contains("row_labels") || !doc.contains("col_labels")) {
        throw std::invalid_argument("spec JSON requires q, row_labels and col_labels");
    }
    Modulus q(doc.at("q").get<std::uint32_t>());
    auto rows = doc.at("row_labels").get<std::vector<int>>();
    auto cols = doc.at("col_labels").get<std::vector<int>>();
    std::optional<Mask> mask;
    if (doc.contains("mask")) {
        Mask m;
        for (const auto& row : doc.at("mask")) {
            std::vector<std::uint8_t> bits;
            for (const auto& v : row) {
                const int b = v.get<int>();
                if (b != 0 && b != 1) throw std::invalid_argument("mask entries must be 0 or 1");
                bits.push_back(static_cast<std::uint8_t>(b));
            }
            m.push_back(std::move(bits));
        }
        mask = std::move(m);
    }
    return ArrayCodeSpec(q, std::move(rows), std::move(cols), std::move(mask));
}

ArrayCodeSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return spec_from_json(text);
}

void save_spec_file(const std::string& path, const ArrayCodeSpec& spec) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << spec_to_json(spec);
}

}  // namespace arraycode
