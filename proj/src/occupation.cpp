#include "fock/occupation.hpp"

#include <numeric>
#include <sstream>

#include "fock/errors.hpp"

namespace fock {

OccupationVector::OccupationVector(std::vector<int> occupations)
    : occ_(std::move(occupations)) {
    for (int n : occ_) {
        if (n < 0) raise(ErrorCode::ParseError, "negative occupation number");
    }
}

OccupationVector::OccupationVector(std::initializer_list<int> occupations)
    : OccupationVector(std::vector<int>(occupations)) {}

OccupationVector OccupationVector::zeros(int modes) {
    return OccupationVector(std::vector<int>(static_cast<std::size_t>(modes), 0));
}

OccupationVector OccupationVector::unit(int modes, int mode) {
    if (mode < 0 || mode >= modes) raise(ErrorCode::ModeOutOfRange, "unit vector mode index");
    std::vector<int> v(static_cast<std::size_t>(modes), 0);
    v[static_cast<std::size_t>(mode)] = 1;
    return OccupationVector(std::move(v));
}

int OccupationVector::total() const {
    return std::accumulate(occ_.begin(), occ_.end(), 0);
}

bool OccupationVector::dominates(const OccupationVector& other) const {
    if (modes() != other.modes()) return false;
    for (int i = 0; i < modes(); ++i) {
        if (occ_[static_cast<std::size_t>(i)] < other.occ_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

OccupationVector OccupationVector::shifted(int mode, int delta) const {
    if (mode < 0 || mode >= modes()) raise(ErrorCode::ModeOutOfRange, "shifted mode index");
    std::vector<int> v = occ_;
    v[static_cast<std::size_t>(mode)] += delta;
    if (v[static_cast<std::size_t>(mode)] < 0) {
        raise(ErrorCode::ParseError, "occupation shifted below zero");
    }
    return OccupationVector(std::move(v));
}

OccupationVector OccupationVector::plus(const OccupationVector& other) const {
    if (modes() != other.modes()) raise(ErrorCode::ModeMismatch, "occupation addition");
    std::vector<int> v = occ_;
    for (int i = 0; i < modes(); ++i) v[static_cast<std::size_t>(i)] += other[i];
    return OccupationVector(std::move(v));
}

OccupationVector OccupationVector::minus(const OccupationVector& other) const {
    if (!dominates(other)) raise(ErrorCode::ParseError, "occupation subtraction below zero");
    std::vector<int> v = occ_;
    for (int i = 0; i < modes(); ++i) v[static_cast<std::size_t>(i)] -= other[i];
    return OccupationVector(std::move(v));
}

std::string OccupationVector::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < occ_.size(); ++i) {
        if (i) out << ',';
        out << occ_[i];
    }
    return out.str();
}

namespace {

void enumerate_rec(int modes, int remaining, std::vector<int>& prefix,
                   std::vector<OccupationVector>& out) {
    if (static_cast<int>(prefix.size()) == modes - 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int n = 0; n <= remaining; ++n) {
        prefix.push_back(n);
        enumerate_rec(modes, remaining - n, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<OccupationVector> enumerate_occupations(int modes, int total) {
    if (modes <= 0) raise(ErrorCode::ModeMismatch, "mode count must be positive");
    if (total < 0) return {};
    std::vector<OccupationVector> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(modes));
    enumerate_rec(modes, total, prefix, out);
    return out;
}

OccupationVector parse_occupations(const std::string& text) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
            if (used != token.size()) raise(ErrorCode::ParseError, "trailing characters in occupation list");
            values.push_back(v);
        } catch (const std::invalid_argument&) {
            raise(ErrorCode::ParseError, "occupation list entry is not an integer: '" + token + "'");
        } catch (const std::out_of_range&) {
            raise(ErrorCode::ParseError, "occupation list entry out of range: '" + token + "'");
        }
    }
    if (values.empty()) raise(ErrorCode::ParseError, "empty occupation list");
    for (int v : values) {
        if (v < 0) raise(ErrorCode::ParseError, "negative occupation number");
    }
    return OccupationVector(std::move(values));
}

}  // namespace fock
