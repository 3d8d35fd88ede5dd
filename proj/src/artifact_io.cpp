#include "lrc/artifact_io.hpp"

#include <iomanip>
#include <ostream>

namespace lrc {

using nlohmann::json;

json field_to_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    int p = j.at("p").get<int>();
    int m = j.at("m").get<int>();
    if (j.contains("modulus") && !j.at("modulus").is_null())
        return Field::make(p, m, j.at("modulus").get<std::vector<int>>());
    return Field::make(p, m);
}

namespace {

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (felem v : row) r.push_back((int)v);
        rows.push_back(std::move(r));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    Matrix m;
    for (const auto& row : j) {
        std::vector<felem> r;
        for (const auto& v : row) r.push_back((felem)v.get<int>());
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

json artifact_to_json(const CodeArtifact& artifact) {
    json j;
    j["field"] = field_to_json(artifact.field());
    j["n"] = artifact.length();
    j["construction"] = artifact.construction;
    j["params"] = artifact.params;
    j["seed"] = artifact.seed ? json(*artifact.seed) : json(nullptr);
    j["verified"] = artifact.verified;
    j["claims"] = json{{"n", artifact.claims.n},
                       {"k", artifact.claims.k},
                       {"d", artifact.claims.d},
                       {"r", artifact.claims.r},
                       {"q", artifact.claims.q}};

    if (std::holds_alternative<LinearCode>(artifact.code)) {
        const LinearCode& code = std::get<LinearCode>(artifact.code);
        j["k"] = code.k();
        j["generator"] = matrix_to_json(code.gen);
        j["parity"] = code.parity ? matrix_to_json(*code.parity) : json(nullptr);
        j["codewords"] = nullptr;
    } else {
        const Codebook& book = std::get<Codebook>(artifact.code);
        j["k"] = dimension(book);
        j["generator"] = nullptr;
        j["parity"] = nullptr;
        j["codewords"] = matrix_to_json(book.words);
    }

    if (artifact.profile.sets.empty()) {
        j["repair_sets"] = nullptr;
    } else {
        json sets = json::array();
        for (const auto& s : artifact.profile.sets) sets.push_back(s);
        j["repair_sets"] = std::move(sets);
    }
    return j;
}

CodeArtifact artifact_from_json(const json& j) {
    Field field = field_from_json(j.at("field"));
    const int n = j.at("n").get<int>();

    auto load_code = [&]() -> std::variant<LinearCode, Codebook> {
        if (j.contains("generator") && !j.at("generator").is_null()) {
            std::optional<Matrix> parity;
            if (j.contains("parity") && !j.at("parity").is_null())
                parity = matrix_from_json(j.at("parity"));
            return LinearCode::make_unchecked(field, matrix_from_json(j.at("generator")),
                                              std::move(parity));
        }
        if (j.contains("codewords") && !j.at("codewords").is_null())
            return Codebook(field, n, matrix_from_json(j.at("codewords")));
        throw std::invalid_argument("artifact has neither a generator nor a codeword list");
    };
    CodeArtifact artifact(load_code());

    if (j.contains("repair_sets") && !j.at("repair_sets").is_null())
        artifact.profile.sets = j.at("repair_sets").get<std::vector<std::vector<int>>>();

    if (j.contains("construction")) artifact.construction = j.at("construction").get<std::string>();
    if (j.contains("params") && j.at("params").is_object())
        artifact.params = j.at("params").get<std::map<std::string, std::int64_t>>();
    if (j.contains("seed") && !j.at("seed").is_null())
        artifact.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("verified")) artifact.verified = j.at("verified").get<bool>();

    if (j.contains("claims") && j.at("claims").is_object()) {
        const json& c = j.at("claims");
        artifact.claims.n = c.value("n", n);
        artifact.claims.k = c.value("k", 0.0);
        artifact.claims.d = c.value("d", 1);
        artifact.claims.r = c.value("r", n - 1);
        artifact.claims.q = c.value("q", field.order());
    } else {
        artifact.claims = {n, 0.0, 1, n - 1, field.order()};
    }
    return artifact;
}

void write_curve_csv(std::ostream& out, const std::vector<CurvePoint>& points) {
    out << "delta,rate,series\n";
    out << std::fixed << std::setprecision(6);
    for (const CurvePoint& p : points)
        out << p.delta << "," << p.rate << "," << p.series << "\n";
    out.unsetf(std::ios_base::floatfield);
}

} // namespace lrc
