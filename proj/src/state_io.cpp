#include "fock/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fock/errors.hpp"

namespace fock {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) raise(ErrorCode::ParseError, "malformed JSON document");
    return doc;
}

OccupationVector occupation_from_json(const json& arr, const char* field) {
    if (!arr.is_array())
        raise(ErrorCode::ParseError, std::string(field) + " must be an array of integers");
    std::vector<int> entries;
    entries.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            raise(ErrorCode::ParseError,
                  std::string(field) + " entries must be non-negative integers");
        entries.push_back(v.get<int>());
    }
    return OccupationVector(entries);
}

double number_field(const json& obj, const char* field, bool required) {
    if (!obj.contains(field)) {
        if (required) raise(ErrorCode::ParseError, std::string("missing field ") + field);
        return 0.0;
    }
    const auto& v = obj.at(field);
    if (!v.is_number()) raise(ErrorCode::ParseError, std::string(field) + " must be a number");
    return v.get<double>();
}

}  // namespace

BeamState parse_state(const std::string& json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("modes") || !doc.contains("terms"))
        raise(ErrorCode::ParseError, "state document needs \"modes\" and \"terms\"");
    if (!doc["modes"].is_number_integer() || doc["modes"].get<long long>() <= 0)
        raise(ErrorCode::ParseError, "\"modes\" must be a positive integer");
    int modes = doc["modes"].get<int>();
    if (!doc["terms"].is_array()) raise(ErrorCode::ParseError, "\"terms\" must be an array");

    TermMap terms;
    for (const auto& term : doc["terms"]) {
        if (!term.is_object()) raise(ErrorCode::ParseError, "each term must be an object");
        OccupationVector ket = occupation_from_json(term.value("ket", json()), "ket");
        OccupationVector bra = occupation_from_json(term.value("bra", json()), "bra");
        if (ket.modes() != modes || bra.modes() != modes)
            raise(ErrorCode::ParseError, "term mode count disagrees with \"modes\"");
        if (ket.total() > kMaxTotalPhotons || bra.total() > kMaxTotalPhotons)
            raise(ErrorCode::TooManyPhotons,
                  "term exceeds the photon cap of " + std::to_string(kMaxTotalPhotons));
        double re = number_field(term, "re", true);
        double im = number_field(term, "im", false);
        terms[KetBra{ket, bra}] += Complex(re, im);
    }
    return BeamState(modes, std::move(terms));
}

BeamState parse_checked(const std::string& json_text, double hermitian_tol) {
    BeamState state = parse_state(json_text);
    double herm = state.hermitian_error();
    if (herm > hermitian_tol)
        raise(ErrorCode::NonHermitianState,
              "input state is not Hermitian; asymmetry " + format_double(herm));
    return state;
}

BeamState load_state(const std::string& path, double hermitian_tol) {
    return parse_checked(read_file(path), hermitian_tol);
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string state_to_json(const BeamState& state) {
    std::ostringstream out;
    out << "{\"modes\": " << state.modes() << ", \"terms\": [";
    bool first = true;
    for (const auto& [label, amp] : state.terms()) {
        if (!first) out << ", ";
        first = false;
        out << "{\"ket\": [";
        for (int i = 0; i < label.ket.modes(); ++i) {
            if (i) out << ",";
            out << label.ket[i];
        }
        out << "], \"bra\": [";
        for (int i = 0; i < label.bra.modes(); ++i) {
            if (i) out << ",";
            out << label.bra[i];
        }
        out << "], \"re\": " << format_double(amp.real())
            << ", \"im\": " << format_double(amp.imag()) << "}";
    }
    out << "]}";
    return out.str();
}

void save_state(const BeamState& state, const std::string& path) {
    write_file(path, state_to_json(state) + "\n");
}

std::vector<std::vector<Complex>> parse_matrix(const std::string& json_text) {
    json doc = parse_json(json_text);
    if (!doc.is_object() || !doc.contains("re"))
        raise(ErrorCode::ParseError, "matrix document needs a \"re\" field");
    const json& re = doc["re"];
    bool has_im = doc.contains("im");
    if (!re.is_array() || re.empty())
        raise(ErrorCode::ParseError, "\"re\" must be a non-empty array of rows");
    std::size_t n = re.size();
    std::vector<std::vector<Complex>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!re[i].is_array() || re[i].size() != n)
            raise(ErrorCode::ParseError, "matrix must be square");
        out[i].resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!re[i][j].is_number()) raise(ErrorCode::ParseError, "matrix entries must be numbers");
            double im = 0.0;
            if (has_im) {
                const json& imrows = doc["im"];
                if (!imrows.is_array() || imrows.size() != n || !imrows[i].is_array() ||
                    imrows[i].size() != n || !imrows[i][j].is_number())
                    raise(ErrorCode::ParseError, "\"im\" must mirror the shape of \"re\"");
                im = imrows[i][j].get<double>();
            }
            out[i][j] = Complex(re[i][j].get<double>(), im);
        }
    }
    return out;
}

std::vector<std::vector<Complex>> load_matrix(const std::string& path) {
    return parse_matrix(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::ParseError, "cannot write " + path);
    out << content;
}

}  // namespace fock
