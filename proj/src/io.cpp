#include "paucity/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "paucity/errors.hpp"

namespace paucity {

namespace {

using nlohmann::json;

Int128 int_from_json(const json& v, const char* what) {
    if (v.is_number_integer())
        return Int128(static_cast<long long>(v.get<std::int64_t>()));
    if (v.is_string()) return Int128::parse(v.get<std::string>());
    throw ParseError(std::string(what) + " must be an integer");
}

json int_to_json(const Int128& v) {
    if (v.fits_int64()) return json(v.to_int64());
    return json(v.str());
}

int small_int(const json& v, const char* what) {
    Int128 n = int_from_json(v, what);
    if (n < Int128(0) || n > Int128(1 << 20))
        throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(n.to_int64());
}

AnySystem parse_system_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("system file must hold a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("system file needs a string field 'kind'");
    const std::string kind = doc["kind"].get<std::string>();
    if (!doc.contains("k")) throw ParseError("system file needs 'k'");
    const int k = small_int(doc["k"], "k");

    if (kind == "linear") {
        if (!doc.contains("rows") || !doc["rows"].is_array())
            throw ParseError("linear system needs an array field 'rows'");
        std::vector<std::vector<Int128>> rows;
        for (const json& jrow : doc["rows"]) {
            if (!jrow.is_array()) throw ParseError("each row must be an array");
            std::vector<Int128> row;
            for (const json& v : jrow) row.push_back(int_from_json(v, "row entry"));
            rows.push_back(std::move(row));
        }
        try {
            return SymmetricSystem(k, std::move(rows));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    if (kind == "nonlinear") {
        for (const char* field : {"degrees", "leading", "upsilons"})
            if (!doc.contains(field) || !doc[field].is_array())
                throw ParseError(std::string("nonlinear system needs an array field '") +
                                 field + "'");
        std::vector<int> degrees;
        for (const json& v : doc["degrees"]) degrees.push_back(small_int(v, "degree"));
        std::vector<Int128> leading;
        for (const json& v : doc["leading"]) leading.push_back(int_from_json(v, "leading"));
        std::vector<CorrectionPoly> corrections;
        for (const json& jpoly : doc["upsilons"]) {
            if (!jpoly.is_array()) throw ParseError("each upsilon must be an array of terms");
            CorrectionPoly poly;
            for (const json& jterm : jpoly) {
                if (!jterm.is_object() || !jterm.contains("coeff") ||
                    !jterm.contains("exponents") || !jterm["exponents"].is_array())
                    throw ParseError("upsilon terms need 'coeff' and 'exponents'");
                CorrectionTerm term;
                term.coeff = int_from_json(jterm["coeff"], "coeff");
                for (const json& e : jterm["exponents"])
                    term.exponents.push_back(small_int(e, "exponent"));
                poly.push_back(std::move(term));
            }
            corrections.push_back(std::move(poly));
        }
        try {
            return NonlinearSystem(k, std::move(degrees), std::move(leading),
                                   std::move(corrections));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("kind must be 'linear' or 'nonlinear'");
}

} // namespace

AnySystem parse_system(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad system file: ") + e.what());
    }
    return parse_system_json(doc);
}

AnySystem load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open system file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_system(buffer.str());
}

std::string serialize_system(const SymmetricSystem& sys) {
    json doc;
    doc["kind"] = "linear";
    doc["k"] = sys.k;
    json rows = json::array();
    for (const auto& row : sys.rows) {
        json jrow = json::array();
        for (const Int128& v : row) jrow.push_back(int_to_json(v));
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string serialize_system(const NonlinearSystem& sys) {
    json doc;
    doc["kind"] = "nonlinear";
    doc["k"] = sys.k();
    doc["degrees"] = sys.degrees();
    json leading = json::array();
    for (const Int128& v : sys.leading()) leading.push_back(int_to_json(v));
    doc["leading"] = std::move(leading);
    json upsilons = json::array();
    for (const CorrectionPoly& poly : sys.corrections()) {
        json jpoly = json::array();
        for (const CorrectionTerm& term : poly) {
            json jterm;
            jterm["coeff"] = int_to_json(term.coeff);
            jterm["exponents"] = term.exponents;
            jpoly.push_back(std::move(jterm));
        }
        upsilons.push_back(std::move(jpoly));
    }
    doc["upsilons"] = std::move(upsilons);
    return doc.dump(2) + "\n";
}

CensusRow to_row(const CensusReport& report) {
    return CensusRow{report.box, report.total, report.trivial,
                     report.potentially_diagonal, report.non_diagonal};
}

static const char* kCsvHeader = "X,N,T,Tstar,Tdagger";

std::string to_csv(const std::vector<CensusRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const CensusRow& row : rows) {
        out += std::to_string(row.X);
        out += ',';
        out += row.n.str();
        out += ',';
        out += row.t.str();
        out += ',';
        out += row.tstar.str();
        out += ',';
        out += row.tdagger.str();
        out += '\n';
    }
    return out;
}

std::vector<CensusRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty census CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader)
        throw ParseError("census CSV must start with header '" +
                         std::string(kCsvHeader) + "'");
    std::vector<CensusRow> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 5)
            throw ParseError("census CSV rows need 5 fields: " + line);
        CensusRow row;
        Int128 x = Int128::parse(fields[0]);
        row.X = x.to_int64();
        row.n = Int128::parse(fields[1]);
        row.t = Int128::parse(fields[2]);
        row.tstar = Int128::parse(fields[3]);
        row.tdagger = Int128::parse(fields[4]);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CensusRow> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open census CSV: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

std::string to_jsonl(const std::vector<CensusRow>& rows) {
    std::string out;
    for (const CensusRow& row : rows) {
        json doc;
        doc["X"] = row.X;
        doc["N"] = int_to_json(row.n);
        doc["T"] = int_to_json(row.t);
        doc["Tstar"] = int_to_json(row.tstar);
        doc["Tdagger"] = int_to_json(row.tdagger);
        out += doc.dump();
        out += '\n';
    }
    return out;
}

std::string to_table(const std::vector<CensusRow>& rows) {
    const std::vector<std::string> header = {"X", "N", "T", "Tstar", "Tdagger"};
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header);
    for (const CensusRow& row : rows)
        cells.push_back({std::to_string(row.X), row.n.str(), row.t.str(),
                         row.tstar.str(), row.tdagger.str()});
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    std::string out;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += std::string(width[i] - row[i].size(), ' ');
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

} // namespace paucity
