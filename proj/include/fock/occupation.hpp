#ifndef FOCK_OCCUPATION_HPP
#define FOCK_OCCUPATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace fock {

// Per-term photon totals beyond this are rejected at parse time so that all
// factorial arithmetic stays in exact big-integer range.
inline constexpr int kMaxTotalPhotons = 64;

/// Photon counts per mode: the Fock-basis label (n_1, ..., n_d).
/// Entries are non-negative; modes are indexed from 0.
class OccupationVector {
public:
    OccupationVector() = default;
    explicit OccupationVector(std::vector<int> occupations);
    OccupationVector(std::initializer_list<int> occupations);

    static OccupationVector zeros(int modes);
    /// Single photon in `mode`, all other modes empty.
    static OccupationVector unit(int modes, int mode);

    int modes() const { return static_cast<int>(occ_.size()); }
    int operator[](int mode) const { return occ_[static_cast<std::size_t>(mode)]; }
    int total() const;
    const std::vector<int>& raw() const { return occ_; }

    /// True when other[i] <= this[i] for every mode.
    bool dominates(const OccupationVector& other) const;

    /// Copy with `delta` added to one mode. Throws on a negative result.
    OccupationVector shifted(int mode, int delta) const;
    OccupationVector plus(const OccupationVector& other) const;
    /// Componentwise difference; requires dominates(other).
    OccupationVector minus(const OccupationVector& other) const;

    /// Comma-separated rendering, e.g. "2,0,1".
    std::string str() const;

    friend bool operator==(const OccupationVector& a, const OccupationVector& b) = default;
    friend std::strong_ordering operator<=>(const OccupationVector& a,
                                            const OccupationVector& b) {
        return a.occ_ <=> b.occ_;
    }

private:
    std::vector<int> occ_;
};

/// All occupation vectors on `modes` modes with the given photon total,
/// in lexicographic order. (The q-photon sector basis.)
std::vector<OccupationVector> enumerate_occupations(int modes, int total);

/// Parse a comma-separated occupation list such as "2,0,1".
OccupationVector parse_occupations(const std::string& text);

}  // namespace fock

#endif
