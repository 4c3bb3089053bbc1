#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oalat {

/// Fixed-width bitset over grid cells; bit j corresponds to cell j.
/// Serialized as a hex string, most significant nibble first.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

    std::size_t size() const { return n_bits_; }
    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    std::size_t count() const;
    bool none() const;
    bool any() const { return !none(); }

    Bitset operator&(const Bitset& other) const;
    Bitset operator|(const Bitset& other) const;
    /// this & ~other
    Bitset and_not(const Bitset& other) const;
    bool intersects(const Bitset& other) const;
    bool subset_of(const Bitset& other) const;
    bool operator==(const Bitset& other) const;
    bool operator!=(const Bitset& other) const { return !(*this == other); }

    std::string to_hex() const;
    static Bitset from_hex(const std::string& hex, std::size_t n_bits);

private:
    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;

    void require_same_size(const Bitset& other) const;
};

}  // namespace oalat
